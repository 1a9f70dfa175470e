#include "arena/gt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "arena/lp.hpp"

namespace arena {

namespace {
using Rational = boost::multiprecision::cpp_rational;

std::vector<Rational> to_rational(const Matrix& u) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(u.rows()) * u.cols());
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j) out.emplace_back(u(i, j));  // exact from double
  return out;
}
}  // namespace

Strategy project_to_simplex(const std::vector<double>& v) {
  if (v.empty()) throw InvalidInputError("project_to_simplex: empty vector");
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidInputError("project_to_simplex: non-finite entry");

  // Sort-and-threshold construction (Held et al. 1974): find the largest k
  // such that shifting the top-k entries by a common tau lands on the simplex.
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0, tau = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    running += u[i];
    const double candidate = (1.0 - running) / static_cast<double>(i + 1);
    if (u[i] + candidate > 0.0) tau = candidate;
  }
  Strategy out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] + tau, 0.0);
  return out;
}

Strategy normalize_to_simplex(const std::vector<double>& v) {
  if (v.empty()) throw InvalidInputError("normalize_to_simplex: empty vector");
  Strategy out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::max(v[i], 0.0);
    sum += out[i];
  }
  if (sum == 0.0) return uniform_strategy(static_cast<int>(v.size()));
  for (double& x : out) x /= sum;
  return out;
}

MaxminSolution solve_maxmin(const Game& g, int player) {
  const Matrix own = (player == 1) ? g.u1 : g.u2.transposed();
  const auto sol = lp::maxmin<Rational>(own.rows(), own.cols(), to_rational(own));
  MaxminSolution out;
  out.value = sol.value.convert_to<double>();
  out.strategy.reserve(sol.strategy.size());
  for (const auto& p : sol.strategy) out.strategy.push_back(p.convert_to<double>());
  return out;
}

MaxminSolution solve_maxmin_fast(const Matrix& own_payoffs) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(own_payoffs.rows()) * own_payoffs.cols());
  for (int i = 0; i < own_payoffs.rows(); ++i)
    for (int j = 0; j < own_payoffs.cols(); ++j) flat.push_back(own_payoffs(i, j));
  auto sol = lp::maxmin<double>(own_payoffs.rows(), own_payoffs.cols(), flat);
  return MaxminSolution{std::move(sol.strategy), sol.value};
}

namespace {

constexpr double kDominationMargin = 1e-9;

// Is action `cand` (a row of `own`) strictly dominated by a mixture of the
// other surviving rows, restricted to the surviving columns? Equivalent to
// the maxmin of the payoff-difference matrix being positive.
bool strictly_dominated(const Matrix& own, const std::vector<int>& rows,
                        const std::vector<int>& cols, int cand) {
  if (rows.size() < 2) return false;
  const int dm = static_cast<int>(rows.size()) - 1;
  const int dn = static_cast<int>(cols.size());
  std::vector<double> diff;
  diff.reserve(static_cast<std::size_t>(dm) * dn);
  for (int r : rows) {
    if (r == cand) continue;
    for (int c : cols) diff.push_back(own(r, c) - own(cand, c));
  }
  return lp::maxmin<double>(dm, dn, diff).value > kDominationMargin;
}

}  // namespace

void idr_surviving(const Matrix& u1, const Matrix& u2,
                   std::vector<int>& surviving_rows, std::vector<int>& surviving_cols) {
  surviving_rows.resize(static_cast<std::size_t>(u1.rows()));
  surviving_cols.resize(static_cast<std::size_t>(u1.cols()));
  std::iota(surviving_rows.begin(), surviving_rows.end(), 0);
  std::iota(surviving_cols.begin(), surviving_cols.end(), 0);
  const Matrix u2t = u2.transposed();

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t p = 0; p < surviving_rows.size(); ++p) {
      if (strictly_dominated(u1, surviving_rows, surviving_cols, surviving_rows[p])) {
        surviving_rows.erase(surviving_rows.begin() + static_cast<std::ptrdiff_t>(p));
        removed = true;
        break;
      }
    }
    if (removed) continue;
    for (std::size_t p = 0; p < surviving_cols.size(); ++p) {
      if (strictly_dominated(u2t, surviving_cols, surviving_rows, surviving_cols[p])) {
        surviving_cols.erase(surviving_cols.begin() + static_cast<std::ptrdiff_t>(p));
        removed = true;
        break;
      }
    }
  }
}

IdrResult iterated_dominance_removal(const Game& g) {
  std::vector<int> rows, cols;
  idr_surviving(g.u1, g.u2, rows, cols);

  IdrResult out;
  out.row_map = rows;
  out.col_map = cols;
  for (int i = 0; i < g.rows; ++i)
    if (std::find(rows.begin(), rows.end(), i) == rows.end()) out.removed_rows.push_back(i);
  for (int j = 0; j < g.cols; ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end()) out.removed_cols.push_back(j);

  Game reduced;
  reduced.rows = static_cast<int>(rows.size());
  reduced.cols = static_cast<int>(cols.size());
  reduced.u1 = Matrix(reduced.rows, reduced.cols);
  reduced.u2 = Matrix(reduced.rows, reduced.cols);
  for (int i = 0; i < reduced.rows; ++i)
    for (int j = 0; j < reduced.cols; ++j) {
      reduced.u1(i, j) = g.u1(rows[i], cols[j]);
      reduced.u2(i, j) = g.u2(rows[i], cols[j]);
    }
  reduced.generator_id = g.generator_id;
  reduced.instance_seed = g.instance_seed;
  out.reduced = std::move(reduced);
  return out;
}

bool is_epsilon_nash(const Game& g, const Strategy& s1, const Strategy& s2, double eps) {
  const double v1 = expected_payoff(g, 1, s1, s2);
  for (double payoff : action_payoffs(g.u1, s2))
    if (payoff > v1 + eps) return false;
  const double v2 = expected_payoff(g, 2, s1, s2);
  for (double payoff : action_payoffs(g.u2.transposed(), s1))
    if (payoff > v2 + eps) return false;
  return true;
}

}  // namespace arena
