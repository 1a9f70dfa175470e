#ifndef ARENA_METRICS_HPP_
#define ARENA_METRICS_HPP_

#include <string>
#include <vector>

#include "arena/engine.hpp"
#include "arena/game.hpp"
#include "arena/gt.hpp"

namespace arena {

// Calibrated convergence threshold shared by the stationarity test and the
// equilibrium-proximity classification.
inline constexpr double kConvergenceTheta = 0.02;

struct MetricResult {
  std::string match_id;
  int player = 0;  // 0 for run-level metrics
  std::string metric;
  double value = 0.0;
  std::string flags;  // semicolon-joined tokens, see README
};

// Mean realized (sampled-action) reward over the recorded window.
double average_reward(const RunRecord& rec, int player);

// Strategy-formulation regret: the best single pure action's total reward
// against the opponent's realized actions, minus the expected reward of the
// submitted mixed strategies, averaged over the recorded window.
double mean_regret(const RunRecord& rec, int player, const Game& game);

struct MaxminDistanceResult {
  double distance = 0.0;
  bool enforceable = false;  // distance >= 0
};
MaxminDistanceResult maxmin_distance(const RunRecord& rec, int player, double maxmin_value);

// A run is stable when the joint action-profile distributions of the two
// halves of the recorded window are within theta in l-inf.
struct StationarityResult {
  double distance = 0.0;
  bool stable = false;
};
StationarityResult stationarity(const RunRecord& rec);

enum class ConvergenceClass {
  kNotStationary,
  kStationaryNotNe,
  kNeParetoDominated,
  kNeParetoOptimal,
};

struct NeConvergenceResult {
  double distance = 0.0;          // min over equilibria of the profile l-inf gap
  int closest_equilibrium = -1;   // index into the solution file's enumeration
  ConvergenceClass classification = ConvergenceClass::kNotStationary;
  bool possibly_incomplete = false;
};
NeConvergenceResult ne_convergence(const RunRecord& rec, const EquilibriumSet& eqs);

// Both players at or above their maxmin value.
bool repeated_game_consistency(const RunRecord& rec, double maxmin1, double maxmin2);

const std::vector<std::string>& metric_names();

// All requested metrics for one run. `which` empty means every metric.
std::vector<MetricResult> compute_metrics(const RunRecord& rec, const Game& game,
                                          const SolutionFile& sol,
                                          const std::vector<std::string>& which);

}  // namespace arena

#endif  // ARENA_METRICS_HPP_
