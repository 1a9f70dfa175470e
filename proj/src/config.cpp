#include "arena/config.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "arena/agents.hpp"
#include "arena/game.hpp"
#include "arena/metrics.hpp"
#include "arena/text_io.hpp"

namespace arena {

namespace fs = std::filesystem;

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw InvalidInputError("config: no algorithms listed");
  for (const auto& a : algorithms) info_model(a);  // throws on unknown ids
  if (generators.empty()) throw InvalidInputError("config: no generators listed");
  const auto& known = generator_ids();
  for (const auto& g : generators) {
    if (std::find(known.begin(), known.end(), g.id) == known.end())
      throw InvalidInputError("config: unknown generator " + g.id);
    if (g.size < 1 || g.instances < 1)
      throw InvalidInputError("config: generator " + g.id + " needs positive size and instances");
    if (g.id == "D13" && g.size != 2)
      throw InvalidInputError("config: D13 is 2x2 only");
  }
  if (recorded_iterations > total_iterations || recorded_iterations < 1 || total_iterations < 1)
    throw InvalidInputError("config: bad iteration counts");
  if (workers < 1) throw InvalidInputError("config: workers must be positive");
  for (const auto& m : metrics)
    if (std::find(metric_names().begin(), metric_names().end(), m) == metric_names().end())
      throw InvalidInputError("config: unknown metric " + m);
  for (const auto& [algo, params] : agent_params) {
    AgentConfig defaults = default_agent_config(algo);
    for (const auto& [name, value] : params) {
      (void)value;
      if (defaults.params.find(name) == defaults.params.end())
        throw InvalidInputError("config: unknown parameter '" + name + "' for " + algo);
    }
  }
}

namespace {

void parse_into(ExperimentConfig& cfg, const std::string& text, const std::string& base_dir,
                int depth) {
  if (depth > 8) throw InvalidInputError("config: include nesting too deep");
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "include") {
      std::string ref;
      ls >> ref;
      const fs::path inc = fs::path(base_dir) / ref;
      parse_into(cfg, read_text_file(inc.string()), inc.parent_path().string(), depth + 1);
    } else if (key == "algorithm") {
      std::string id;
      ls >> id;
      cfg.algorithms.push_back(id);
    } else if (key == "agent_param") {
      std::string id, name;
      double value = 0.0;
      ls >> id >> name >> value;
      if (ls.fail()) throw InvalidInputError("config: bad agent_param line: " + line);
      cfg.agent_params[id][name] = value;
    } else if (key == "generator") {
      GeneratorSpec g;
      ls >> g.id >> g.size >> g.instances;
      if (ls.fail()) throw InvalidInputError("config: bad generator line: " + line);
      cfg.generators.push_back(g);
    } else if (key == "total_iterations") {
      ls >> cfg.total_iterations;
    } else if (key == "recorded_iterations") {
      ls >> cfg.recorded_iterations;
    } else if (key == "seed") {
      ls >> cfg.seed;
    } else if (key == "out") {
      ls >> cfg.out_dir;
    } else if (key == "workers") {
      ls >> cfg.workers;
    } else if (key == "metrics") {
      std::string m;
      while (ls >> m) cfg.metrics.push_back(m);
    } else {
      throw InvalidInputError("config: unknown key '" + key + "'");
    }
    if (ls.fail() && key != "metrics")
      throw InvalidInputError("config: bad line: " + line);
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text, const std::string& base_dir) {
  ExperimentConfig cfg;
  parse_into(cfg, text, base_dir, 0);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  const fs::path p(path);
  return parse_experiment_config(read_text_file(path), p.parent_path().string());
}

}  // namespace arena
