#include "arena/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arena {

namespace {

void require_nonempty(const RunRecord& rec) {
  if (rec.iterations.empty()) throw InvalidInputError("empty run record: " + rec.match_id);
}

}  // namespace

double average_reward(const RunRecord& rec, int player) {
  require_nonempty(rec);
  double total = 0.0;
  for (const auto& row : rec.iterations) total += player == 1 ? row.r1 : row.r2;
  return total / static_cast<double>(rec.iterations.size());
}

double mean_regret(const RunRecord& rec, int player, const Game& game) {
  require_nonempty(rec);
  const Matrix own = player == 1 ? game.u1 : game.u2.transposed();
  std::vector<double> static_total(static_cast<std::size_t>(own.rows()), 0.0);
  double expected_total = 0.0;
  for (const auto& row : rec.iterations) {
    const int opp = player == 1 ? row.a2 : row.a1;
    const Strategy& sigma = player == 1 ? row.s1 : row.s2;
    double expected = 0.0;
    for (int a = 0; a < own.rows(); ++a) {
      const double payoff = own(a, opp);
      static_total[static_cast<std::size_t>(a)] += payoff;
      expected += sigma[static_cast<std::size_t>(a)] * payoff;
    }
    expected_total += expected;
  }
  const double best_static = *std::max_element(static_total.begin(), static_total.end());
  return (best_static - expected_total) / static_cast<double>(rec.iterations.size());
}

MaxminDistanceResult maxmin_distance(const RunRecord& rec, int player, double maxmin_value) {
  const double distance = average_reward(rec, player) - maxmin_value;
  return {distance, distance >= 0.0};
}

StationarityResult stationarity(const RunRecord& rec) {
  require_nonempty(rec);
  if (rec.iterations.size() % 2 != 0)
    throw InvalidInputError("stationarity needs an even recorded window");
  const std::size_t half = rec.iterations.size() / 2;
  const std::size_t cells = static_cast<std::size_t>(rec.rows) * rec.cols;
  std::vector<double> first(cells, 0.0), second(cells, 0.0);
  for (std::size_t i = 0; i < rec.iterations.size(); ++i) {
    const auto& row = rec.iterations[i];
    const std::size_t cell = static_cast<std::size_t>(row.a1) * rec.cols + row.a2;
    (i < half ? first : second)[cell] += 1.0;
  }
  double gap = 0.0;
  for (std::size_t c = 0; c < cells; ++c)
    gap = std::max(gap, std::abs(first[c] - second[c]) / static_cast<double>(half));
  return {gap, gap <= kConvergenceTheta};
}

NeConvergenceResult ne_convergence(const RunRecord& rec, const EquilibriumSet& eqs) {
  require_nonempty(rec);
  if (eqs.profiles.empty())
    throw InvalidInputError("ne_convergence: empty equilibrium set for " + rec.match_id);

  Strategy emp1(static_cast<std::size_t>(rec.rows), 0.0);
  Strategy emp2(static_cast<std::size_t>(rec.cols), 0.0);
  for (const auto& row : rec.iterations) {
    emp1[static_cast<std::size_t>(row.a1)] += 1.0;
    emp2[static_cast<std::size_t>(row.a2)] += 1.0;
  }
  const double n = static_cast<double>(rec.iterations.size());
  for (double& x : emp1) x /= n;
  for (double& x : emp2) x /= n;

  NeConvergenceResult out;
  out.possibly_incomplete = eqs.possibly_incomplete;
  out.distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < eqs.profiles.size(); ++k) {
    const auto& eq = eqs.profiles[k];
    double gap = 0.0;
    for (std::size_t i = 0; i < emp1.size(); ++i)
      gap = std::max(gap, std::abs(emp1[i] - eq.s1[i]));
    for (std::size_t j = 0; j < emp2.size(); ++j)
      gap = std::max(gap, std::abs(emp2[j] - eq.s2[j]));
    if (gap < out.distance) {
      out.distance = gap;
      out.closest_equilibrium = static_cast<int>(k);
    }
  }

  if (!stationarity(rec).stable) {
    out.classification = ConvergenceClass::kNotStationary;
  } else if (out.distance > kConvergenceTheta) {
    out.classification = ConvergenceClass::kStationaryNotNe;
  } else {
    const bool pareto =
        eqs.profiles[static_cast<std::size_t>(out.closest_equilibrium)].pareto_optimal;
    out.classification =
        pareto ? ConvergenceClass::kNeParetoOptimal : ConvergenceClass::kNeParetoDominated;
  }
  return out;
}

bool repeated_game_consistency(const RunRecord& rec, double maxmin1, double maxmin2) {
  return maxmin_distance(rec, 1, maxmin1).enforceable &&
         maxmin_distance(rec, 2, maxmin2).enforceable;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {
      "reward", "regret", "maxmin_distance", "stationarity", "ne_convergence", "rg_consistency"};
  return names;
}

std::vector<MetricResult> compute_metrics(const RunRecord& rec, const Game& game,
                                          const SolutionFile& sol,
                                          const std::vector<std::string>& which) {
  const auto wanted = [&](const std::string& name) {
    return which.empty() || std::find(which.begin(), which.end(), name) != which.end();
  };

  std::vector<MetricResult> out;
  if (wanted("reward"))
    for (int p : {1, 2}) out.push_back({rec.match_id, p, "reward", average_reward(rec, p), ""});
  if (wanted("regret"))
    for (int p : {1, 2})
      out.push_back({rec.match_id, p, "regret", mean_regret(rec, p, game), ""});
  if (wanted("maxmin_distance")) {
    for (int p : {1, 2}) {
      const double mm = p == 1 ? sol.maxmin1.value : sol.maxmin2.value;
      const auto res = maxmin_distance(rec, p, mm);
      out.push_back({rec.match_id, p, "maxmin_distance", res.distance,
                     res.enforceable ? "enforceable" : ""});
    }
  }
  if (wanted("stationarity")) {
    const auto res = stationarity(rec);
    out.push_back({rec.match_id, 0, "stationarity", res.distance, res.stable ? "stable" : ""});
  }
  if (wanted("ne_convergence")) {
    const auto res = ne_convergence(rec, sol.equilibria);
    std::string flags;
    switch (res.classification) {
      case ConvergenceClass::kNotStationary: flags = "not_stationary"; break;
      case ConvergenceClass::kStationaryNotNe: flags = "stationary_not_ne"; break;
      case ConvergenceClass::kNeParetoDominated: flags = "ne_dominated"; break;
      case ConvergenceClass::kNeParetoOptimal: flags = "ne_pareto"; break;
    }
    flags += ";eq:" + std::to_string(res.closest_equilibrium);
    if (res.possibly_incomplete) flags += ";possibly_incomplete";
    out.push_back({rec.match_id, 0, "ne_convergence", res.distance, flags});
  }
  if (wanted("rg_consistency")) {
    const bool ok = repeated_game_consistency(rec, sol.maxmin1.value, sol.maxmin2.value);
    out.push_back({rec.match_id, 0, "rg_consistency", ok ? 1.0 : 0.0, ok ? "enforceable" : ""});
  }
  return out;
}

}  // namespace arena
