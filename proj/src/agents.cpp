#include "arena/agents.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "agents_internal.hpp"
#include "arena/rng.hpp"

namespace arena {

using detail::argmax_lowest;
using detail::join_compact;
using detail::own_payoff_matrix;

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids = {
      "fp",  "determined", "awesome",   "meta",          "giga-wolf", "gsa",
      "rvs", "q",          "minimax-q", "minimax-q-idr", "random"};
  return ids;
}

AgentInfoModel info_model(const std::string& algorithm) {
  if (algorithm == "fp") return {true, true, false};
  if (algorithm == "determined") return {true, false, true};
  if (algorithm == "awesome") return {true, true, true};
  if (algorithm == "meta") return {true, true, true};
  if (algorithm == "rvs") return {true, true, true};
  if (algorithm == "giga-wolf") return {false, false, false};
  if (algorithm == "gsa") return {false, false, false};
  if (algorithm == "q") return {false, false, false};
  if (algorithm == "minimax-q") return {false, true, false};
  if (algorithm == "minimax-q-idr") return {false, true, false};
  if (algorithm == "random") return {false, false, false};
  throw InvalidInputError("unknown algorithm: " + algorithm);
}

AgentConfig default_agent_config(const std::string& algorithm) {
  AgentConfig cfg;
  cfg.algorithm = algorithm;
  auto& p = cfg.params;
  if (algorithm == "q" || algorithm == "minimax-q" || algorithm == "minimax-q-idr") {
    p["alpha_decay"] = 2000;  // alpha(t) = (1 - 1/alpha_decay)^t
    p["eps_scale"] = 0.2;     // eps(t)  = eps_scale * (1 - 1/eps_decay)^t
    p["eps_decay"] = 500;
    p["gamma"] = 0.9;
    if (algorithm != "q") p["cache_lp"] = 0;  // 1: re-solve only when Q changed
  } else if (algorithm == "giga-wolf" || algorithm == "gsa") {
    p["alpha_a"] = 10;   // alpha(t) = 1/sqrt(t/alpha_a + alpha_b)
    p["alpha_b"] = 100;
    p["eta_a"] = 1e4;    // eta(t) = 1/sqrt(eta_a * t + eta_b)
    p["eta_b"] = 1e8;
    if (algorithm == "gsa") {
      p["lambda_a"] = 1e5;  // lambda(t) = 1/sqrt(lambda_a * t + lambda_b)
      p["lambda_b"] = 1e8;
    }
  } else if (algorithm == "rvs") {
    p["sigma_div"] = 25;  // sigma(t) = 1/(1 + sqrt(t)/sigma_div)
    p["eta_a"] = 1000;    // eta(t) = 1/sqrt(eta_a * t + eta_b)
    p["eta_b"] = 1e5;
  } else if (algorithm == "meta") {
    p["eps0"] = 0.01;    // security threshold
    p["eps1"] = 0.01;    // bully threshold
    p["eps2"] = 0.005;   // generous best-response slack
    p["eps3"] = 0.025;   // stationarity threshold (l2)
    p["tau0"] = 90000;   // coordination/exploration period
    p["tau1"] = 10000;   // initial period
    p["tau2"] = 80000;   // secondary (bully) period
    p["tau3"] = 1000;    // security check period
    p["switch_prob"] = 0.00005;
    p["window"] = 1000;
  } else if (algorithm == "fp" || algorithm == "determined" || algorithm == "awesome" ||
             algorithm == "random") {
    // no numeric parameters; schedules are fixed formulas
  } else {
    throw InvalidInputError("unknown algorithm: " + algorithm);
  }
  return cfg;
}

namespace detail {
double require_param(const AgentConfig& cfg, const std::string& name) {
  const auto it = cfg.params.find(name);
  if (it == cfg.params.end())
    throw InvalidInputError("agent " + cfg.algorithm + ": missing parameter " + name);
  if (!std::isfinite(it->second))
    throw InvalidInputError("agent " + cfg.algorithm + ": non-finite parameter " + name);
  return it->second;
}
}  // namespace detail

using detail::require_param;

void write_agent_config(const AgentConfig& cfg, std::ostream& out) {
  out << "algorithm: " << cfg.algorithm << '\n';
  for (const auto& [name, value] : cfg.params)
    out << "param " << name << " = " << format_double(value) << '\n';
}

AgentConfig read_agent_config(std::istream& in) {
  AgentConfig cfg;
  std::string line;
  if (!std::getline(in, line) || line.rfind("algorithm: ", 0) != 0)
    throw InvalidInputError("agent config must start with 'algorithm: <id>'");
  cfg.algorithm = line.substr(11);
  cfg = default_agent_config(cfg.algorithm);  // validates the id, fills defaults
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag, name, eq;
    double value = 0.0;
    ls >> tag >> name >> eq >> value;
    if (tag != "param" || eq != "=" || ls.fail())
      throw InvalidInputError("bad agent config line: " + line);
    if (cfg.params.find(name) == cfg.params.end())
      throw InvalidInputError("unknown parameter '" + name + "' for " + cfg.algorithm);
    cfg.params[name] = value;
  }
  return cfg;
}

void save_agent_config(const AgentConfig& cfg, const std::string& path) {
  std::ostringstream ss;
  write_agent_config(cfg, ss);
  write_text_file(path, ss.str());
}

AgentConfig load_agent_config(const std::string& path) {
  std::istringstream ss(read_text_file(path));
  return read_agent_config(ss);
}

namespace {

constexpr double kBrTieTolerance = 1e-9;

// --------------------------------------------------------------------------
// fictitious play: best response to the opponent's empirical action mix,
// starting from a unit virtual count per action. Ties keep the previous
// action when it is still a best response, and mix uniformly over the
// best-response set otherwise.
// --------------------------------------------------------------------------
class FictitiousPlay final : public Agent {
 public:
  FictitiousPlay(const Game& game, int role)
      : own_u_(own_payoff_matrix(game, role)),
        counts_(static_cast<std::size_t>(own_u_.cols()), 1.0) {}

  Strategy act(long) override {
    double total = 0.0;
    for (double c : counts_) total += c;
    Strategy emp(counts_);
    for (double& c : emp) c /= total;
    const auto payoffs = action_payoffs(own_u_, emp);
    const double best = *std::max_element(payoffs.begin(), payoffs.end());

    if (prev_action_ >= 0 && payoffs[static_cast<std::size_t>(prev_action_)] >= best - kBrTieTolerance)
      return pure_strategy(own_u_.rows(), prev_action_);

    Strategy s(static_cast<std::size_t>(own_u_.rows()), 0.0);
    int ties = 0;
    for (int a = 0; a < own_u_.rows(); ++a)
      if (payoffs[static_cast<std::size_t>(a)] >= best - kBrTieTolerance) {
        s[static_cast<std::size_t>(a)] = 1.0;
        ++ties;
      }
    for (double& x : s) x /= ties;
    return s;
  }

  void observe(const AgentObservation& obs) override {
    counts_[static_cast<std::size_t>(obs.opponent_action)] += 1.0;
    prev_action_ = obs.own_action;
  }

  std::string beliefs() const override {
    return "fp:v1:prev=" + std::to_string(prev_action_) + ":counts=" + join_compact(counts_);
  }

 private:
  Matrix own_u_;
  std::vector<double> counts_;
  int prev_action_ = -1;
};

// --------------------------------------------------------------------------
// determined: plays its component of the precomputed equilibrium with the
// highest own payoff (opponent payoff, then enumeration order, break ties)
// and ignores all feedback.
// --------------------------------------------------------------------------
class Determined final : public Agent {
 public:
  Determined(const SolutionFile& sol, int role) {
    index_ = select_determined_equilibrium(sol.equilibria, role);
    strategy_ = detail::own_component(sol.equilibria.profiles[static_cast<std::size_t>(index_)], role);
  }

  Strategy act(long) override { return strategy_; }
  void observe(const AgentObservation&) override {}
  std::string beliefs() const override { return "determined:v1:eq=" + std::to_string(index_); }

 private:
  Strategy strategy_;
  int index_ = 0;
};

// --------------------------------------------------------------------------
// single-agent Q-learning over own actions; epsilon-greedy with the
// published decay schedules.
// --------------------------------------------------------------------------
class QLearner final : public Agent {
 public:
  QLearner(const AgentConfig& cfg, int own_actions, std::uint64_t seed)
      : q_(static_cast<std::size_t>(own_actions), 0.0),
        alpha_decay_(require_param(cfg, "alpha_decay")),
        eps_scale_(require_param(cfg, "eps_scale")),
        eps_decay_(require_param(cfg, "eps_decay")),
        gamma_(require_param(cfg, "gamma")),
        rng_(seed) {}

  Strategy act(long t) override {
    const double eps = eps_scale_ * std::pow(1.0 - 1.0 / eps_decay_, static_cast<double>(t));
    if (rng_.uniform() < eps) return uniform_strategy(static_cast<int>(q_.size()));
    return pure_strategy(static_cast<int>(q_.size()), argmax_lowest(q_));
  }

  void observe(const AgentObservation& obs) override {
    const double alpha = std::pow(1.0 - 1.0 / alpha_decay_, static_cast<double>(obs.t));
    const double best = *std::max_element(q_.begin(), q_.end());
    double& cell = q_[static_cast<std::size_t>(obs.own_action)];
    cell = (1.0 - alpha) * cell + alpha * (obs.reward + gamma_ * best);
  }

  std::string beliefs() const override { return "q:v1:" + join_compact(q_); }

 private:
  std::vector<double> q_;
  double alpha_decay_, eps_scale_, eps_decay_, gamma_;
  rng::Stream rng_;
};

// --------------------------------------------------------------------------
// minimax-Q over joint actions: the Bellman backup bootstraps with the
// maxmin value of the learned Q matrix, and play mixes the maxmin strategy
// with epsilon-uniform exploration. The IDR variant prunes actions strictly
// dominated in the zero-sum game (Q, -Q) before each LP solve.
// --------------------------------------------------------------------------
class MinimaxQ final : public Agent {
 public:
  MinimaxQ(const AgentConfig& cfg, int own_actions, int opp_actions, bool use_idr)
      : q_(own_actions, opp_actions, 0.0),
        use_idr_(use_idr),
        alpha_decay_(require_param(cfg, "alpha_decay")),
        eps_scale_(require_param(cfg, "eps_scale")),
        eps_decay_(require_param(cfg, "eps_decay")),
        gamma_(require_param(cfg, "gamma")),
        cache_lp_(require_param(cfg, "cache_lp") != 0.0) {}

  Strategy act(long t) override {
    resolve();
    const double eps = eps_scale_ * std::pow(1.0 - 1.0 / eps_decay_, static_cast<double>(t));
    Strategy s = maxmin_.strategy;
    const double u = eps / static_cast<double>(s.size());
    for (double& x : s) x = (1.0 - eps) * x + u;
    return s;
  }

  void observe(const AgentObservation& obs) override {
    resolve();
    const double alpha = std::pow(1.0 - 1.0 / alpha_decay_, static_cast<double>(obs.t));
    double& cell = q_(obs.own_action, obs.opponent_action);
    const double updated = (1.0 - alpha) * cell + alpha * (obs.reward + gamma_ * maxmin_.value);
    if (!(cache_lp_ && updated == cell)) dirty_ = true;
    cell = updated;
  }

  std::string beliefs() const override {
    std::string out = use_idr_ ? "minimax-q-idr:v1:" : "minimax-q:v1:";
    return out + join_compact(q_.data());
  }

 private:
  void resolve() {
    if (!dirty_) return;
    if (!use_idr_) {
      maxmin_ = solve_maxmin_fast(q_);
    } else {
      Matrix neg(q_.rows(), q_.cols());
      for (int i = 0; i < q_.rows(); ++i)
        for (int j = 0; j < q_.cols(); ++j) neg(i, j) = -q_(i, j);
      std::vector<int> rows, cols;
      idr_surviving(q_, neg, rows, cols);
      Matrix reduced(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
          reduced(static_cast<int>(i), static_cast<int>(j)) = q_(rows[i], cols[j]);
      const MaxminSolution sol = solve_maxmin_fast(reduced);
      maxmin_.value = sol.value;
      maxmin_.strategy.assign(static_cast<std::size_t>(q_.rows()), 0.0);
      for (std::size_t i = 0; i < rows.size(); ++i)
        maxmin_.strategy[static_cast<std::size_t>(rows[i])] = sol.strategy[i];
    }
    dirty_ = false;
  }

  Matrix q_;
  bool use_idr_;
  double alpha_decay_, eps_scale_, eps_decay_, gamma_;
  bool cache_lp_;
  MaxminSolution maxmin_;
  bool dirty_ = true;
};

// uniform baseline
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(int own_actions) : n_(own_actions) {}
  Strategy act(long) override { return uniform_strategy(n_); }
  void observe(const AgentObservation&) override {}
  std::string beliefs() const override { return "random:v1"; }

 private:
  int n_;
};

}  // namespace

std::unique_ptr<Agent> make_agent(const AgentConfig& cfg, const AgentView& view,
                                  std::uint64_t seed) {
  const AgentInfoModel model = info_model(cfg.algorithm);

  // Enforce the information model by construction: entitlements the model
  // does not grant are dropped before any agent sees the view.
  AgentView v = view;
  if (!model.payoff_access) v.game = nullptr;
  if (!model.solutions_access) v.solutions = nullptr;

  if (model.payoff_access && v.game == nullptr)
    throw InvalidInputError(cfg.algorithm + " requires the payoff matrices");
  if (model.solutions_access && v.solutions == nullptr)
    throw InvalidInputError(cfg.algorithm + " requires a solution file");
  if (model.solutions_access && v.solutions->equilibria.profiles.empty())
    throw InvalidInputError(cfg.algorithm + ": solution file has no equilibria");

  if (cfg.algorithm == "fp") return std::make_unique<FictitiousPlay>(*v.game, v.role);
  if (cfg.algorithm == "determined") return std::make_unique<Determined>(*v.solutions, v.role);
  if (cfg.algorithm == "q") return std::make_unique<QLearner>(cfg, v.own_actions, seed);
  if (cfg.algorithm == "minimax-q")
    return std::make_unique<MinimaxQ>(cfg, v.own_actions, v.opp_actions, false);
  if (cfg.algorithm == "minimax-q-idr")
    return std::make_unique<MinimaxQ>(cfg, v.own_actions, v.opp_actions, true);
  if (cfg.algorithm == "random") return std::make_unique<RandomAgent>(v.own_actions);
  if (cfg.algorithm == "giga-wolf") return detail::make_giga_wolf(cfg, v, seed);
  if (cfg.algorithm == "gsa") return detail::make_gsa(cfg, v, seed);
  if (cfg.algorithm == "rvs") return detail::make_rvs(cfg, v, seed);
  if (cfg.algorithm == "awesome") return detail::make_awesome(cfg, v, seed);
  if (cfg.algorithm == "meta") return detail::make_meta(cfg, v, seed);
  throw InvalidInputError("unknown algorithm: " + cfg.algorithm);
}

}  // namespace arena
