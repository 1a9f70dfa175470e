#ifndef ARENA_AGENTS_INTERNAL_HPP_
#define ARENA_AGENTS_INTERNAL_HPP_

#include <cmath>
#include <memory>
#include <string>

#include "arena/agents.hpp"
#include "arena/matrix.hpp"
#include "arena/text_io.hpp"

namespace arena::detail {

// Own payoffs with rows = own actions, columns = opponent actions.
inline Matrix own_payoff_matrix(const Game& g, int role) {
  return role == 1 ? g.u1 : g.u2.transposed();
}

inline const Strategy& own_component(const EquilibriumProfile& eq, int role) {
  return role == 1 ? eq.s1 : eq.s2;
}

inline const Strategy& opp_component(const EquilibriumProfile& eq, int role) {
  return role == 1 ? eq.s2 : eq.s1;
}

inline double own_payoff(const EquilibriumProfile& eq, int role) {
  return role == 1 ? eq.payoff1 : eq.payoff2;
}

inline int argmax_lowest(const std::vector<double>& v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(best)]) best = i;
  return best;
}

inline std::string join_compact(const std::vector<double>& v) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(';');
    std::snprintf(buf, sizeof(buf), "%.9g", v[i]);
    out += buf;
  }
  return out;
}

double require_param(const AgentConfig& cfg, const std::string& name);

// Implemented in the gradient / portfolio translation units.
std::unique_ptr<Agent> make_giga_wolf(const AgentConfig&, const AgentView&, std::uint64_t seed);
std::unique_ptr<Agent> make_gsa(const AgentConfig&, const AgentView&, std::uint64_t seed);
std::unique_ptr<Agent> make_rvs(const AgentConfig&, const AgentView&, std::uint64_t seed);
std::unique_ptr<Agent> make_awesome(const AgentConfig&, const AgentView&, std::uint64_t seed);
std::unique_ptr<Agent> make_meta(const AgentConfig&, const AgentView&, std::uint64_t seed);

}  // namespace arena::detail

#endif  // ARENA_AGENTS_INTERNAL_HPP_
