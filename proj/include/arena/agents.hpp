#ifndef ARENA_AGENTS_HPP_
#define ARENA_AGENTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/gt.hpp"

namespace arena {

// Feedback delivered after each iteration, from the receiving agent's own
// perspective. reward == u_self[own_action][opponent_action] of the match game.
struct AgentObservation {
  long t = 0;
  int own_action = 0;
  int opponent_action = 0;
  double reward = 0.0;
};

// What an algorithm is entitled to see. Own-reward-only learners get neither
// the payoff matrices nor the opponent-action guarantee.
struct AgentInfoModel {
  bool payoff_access = false;
  bool opponent_action_access = false;
  bool solutions_access = false;
};

struct AgentConfig {
  std::string algorithm;
  std::map<std::string, double> params;  // defaults from the published settings
};

// The engine-facing slice of the match: dimensions and role always, the game
// and precomputed solutions only when the information model grants them.
struct AgentView {
  int role = 1;  // 1 = row player, 2 = column player
  int own_actions = 0;
  int opp_actions = 0;
  const Game* game = nullptr;
  const SolutionFile* solutions = nullptr;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual Strategy act(long t) = 0;
  virtual void observe(const AgentObservation& obs) = 0;
  // Versioned, algorithm-specific serialization of internal state.
  virtual std::string beliefs() const = 0;
};

const std::vector<std::string>& algorithm_ids();
AgentInfoModel info_model(const std::string& algorithm);
AgentConfig default_agent_config(const std::string& algorithm);

// Constructs an agent, stripping from the view whatever the algorithm's
// information model does not grant. Throws InvalidInputError on unknown
// algorithms, bad parameters, or missing solution files.
std::unique_ptr<Agent> make_agent(const AgentConfig& cfg, const AgentView& view,
                                  std::uint64_t seed);

// Config file format: "algorithm: <id>" then "param <name> = <value>" lines.
// Unknown parameter names are rejected.
void write_agent_config(const AgentConfig& cfg, std::ostream& out);
AgentConfig read_agent_config(std::istream& in);
void save_agent_config(const AgentConfig& cfg, const std::string& path);
AgentConfig load_agent_config(const std::string& path);

}  // namespace arena

#endif  // ARENA_AGENTS_HPP_
