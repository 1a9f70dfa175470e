#ifndef ARENA_CONFIG_HPP_
#define ARENA_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arena {

struct GeneratorSpec {
  std::string id;  // D1..D13
  int size = 2;    // square games: size x size
  int instances = 1;
};

// Line-oriented key-value experiment file; `include <path>` splices another
// file (relative to the including file). Keys:
//   algorithm <id>                (repeatable)
//   agent_param <id> <name> <value>
//   generator <id> <size> <instances>   (repeatable)
//   total_iterations / recorded_iterations <n>
//   seed <u64>, out <dir>, workers <n>
//   metrics <name> [<name> ...]
struct ExperimentConfig {
  std::vector<std::string> algorithms;
  std::map<std::string, std::map<std::string, double>> agent_params;
  std::vector<GeneratorSpec> generators;
  long total_iterations = 100000;
  long recorded_iterations = 10000;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  int workers = 1;
  std::vector<std::string> metrics;  // empty = all

  void validate() const;  // throws InvalidInputError
};

ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& text, const std::string& base_dir);

}  // namespace arena

#endif  // ARENA_CONFIG_HPP_
