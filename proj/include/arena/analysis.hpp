#ifndef ARENA_ANALYSIS_HPP_
#define ARENA_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arena/matrix.hpp"
#include "arena/stats.hpp"

namespace arena::analysis {

// One protagonist observation of one run: the row of a (protagonist,
// opponent) cell in the meta-game, tagged with the game's provenance.
struct RunReward {
  std::string protagonist;
  std::string opponent;
  std::string generator;
  int size = 0;
  std::string match_id;
  double value = 0.0;
};

// Declared dominated / significant when flagged in at least this share of
// the subsampled games.
inline constexpr double kSignificanceShare = 0.95;

struct AlgorithmGame {
  std::vector<std::string> algorithms;
  Matrix mean;                           // mean reward, row = protagonist
  std::vector<std::vector<int>> counts;  // runs per cell
};

// Cell (A,B) = mean reward of A against B. Throws on an empty cell.
AlgorithmGame build_algorithm_game(const std::vector<RunReward>& data,
                                   const std::vector<std::string>& algorithms);

struct DominationShare {
  std::string algorithm;
  double strict_share = 0.0;
  double weak_share = 0.0;
  bool strict_dominated = false;  // strict_share >= 0.95
  bool weak_dominated = false;
};

// Bootstraps the algorithm game n_subsamples times (each cell re-drawn with
// replacement at half its run count) and reports how often each row strategy
// is strictly / weakly dominated. Throws when a cell has fewer than 2 runs.
std::vector<DominationShare> dominated_algorithms(const std::vector<RunReward>& data,
                                                  const std::vector<std::string>& algorithms,
                                                  int n_subsamples, std::uint64_t seed);

struct PureCellFrequency {
  int row = 0, col = 0;
  double frequency = 0.0;
  bool significant = false;
};

// Pure Nash cells of the subsampled algorithm games (column payoffs are the
// mirrored cells), with per-cell occurrence frequency.
std::vector<PureCellFrequency> pure_equilibria_of_algorithm_game(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    int n_subsamples, std::uint64_t seed);

struct SetEntry {
  std::string algorithm;
  double mean = 0.0;
  double ci_lower = 0.0, ci_upper = 0.0;
  bool member = false;
};

// For each opponent: the max-mean response plus every algorithm whose 95%
// bootstrapped mean interval overlaps the max-mean algorithm's interval.
std::map<std::string, std::vector<SetEntry>> best_response_sets(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    std::uint64_t seed);

// Same construction blocked by generator instead of opponent.
std::map<std::string, std::vector<SetEntry>> best_algorithm_sets_per_generator(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    std::uint64_t seed);

struct SimilarityCount {
  std::string a, b;
  int similar = 0;  // (generator, opponent) cells where KS does not reject
  int tested = 0;
  int skipped = 0;  // cells missing data on either side
};

// KS-based similarity over all (generator, opponent) cells for every
// unordered algorithm pair; self-pairs excluded.
std::vector<SimilarityCount> similarity_matrix(const std::vector<RunReward>& data,
                                               const std::vector<std::string>& algorithms,
                                               double alpha = 0.05);

struct PairedMetrics {
  std::string algorithm;
  std::string generator;
  std::vector<double> x, y;
};

struct CorrelationCell {
  std::string algorithm;
  std::string generator;
  double rho = 0.0;
  double p = 1.0;
  char sign = 'x';  // '+', '-', or 'x' for not significant
  bool degenerate = false;
};

// Spearman screen per (algorithm, generator) block; all-tied blocks are
// marked degenerate and not significant.
std::vector<CorrelationCell> correlation_screens(const std::vector<PairedMetrics>& blocks,
                                                 double alpha = 0.05);

}  // namespace arena::analysis

#endif  // ARENA_ANALYSIS_HPP_
