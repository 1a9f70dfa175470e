#ifndef ARENA_PIPELINE_HPP_
#define ARENA_PIPELINE_HPP_

#include <string>
#include <vector>

#include "arena/config.hpp"
#include "arena/game.hpp"

namespace arena::pipeline {

// Exit codes shared with the CLI: 0 success, 1 partial failure, 2 config error.
inline constexpr int kOk = 0;
inline constexpr int kPartialFailure = 1;
inline constexpr int kConfigError = 2;

// "D4-2x2-i003": generator, size, and instance index; the instance seed is
// derived from the experiment seed and this id.
std::string game_id(const GeneratorSpec& spec, int index);
std::vector<std::string> game_ids(const ExperimentConfig& cfg);
Game build_game_instance(const ExperimentConfig& cfg, const GeneratorSpec& spec, int index);

struct MatchParts {
  std::string row_algorithm, col_algorithm, game_id, generator;
  int size = 0;
};
MatchParts parse_match_id(const std::string& match_id);

// The five platform steps. All are deterministic functions of the config and
// idempotent: reruns rewrite byte-identical files (runs are skipped when
// their output already exists).
int cmd_gen_games(const ExperimentConfig& cfg);
int cmd_gen_jobs(const ExperimentConfig& cfg);
int cmd_run(const ExperimentConfig& cfg);
int cmd_metrics(const ExperimentConfig& cfg);
int cmd_analyze(const ExperimentConfig& cfg);

inline constexpr const char* kMetricsSchema = "# schema arena.metrics v1";
inline constexpr const char* kTableSchema = "# schema arena.table v1";
inline constexpr int kAnalysisSubsamples = 10000;

}  // namespace arena::pipeline

#endif  // ARENA_PIPELINE_HPP_
