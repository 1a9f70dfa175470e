#include <cmath>

#include "agents_internal.hpp"
#include "arena/rng.hpp"

// The gradient learners. GIGA-WoLF and GSA observe only their own sampled
// reward and maintain the decayed reward estimate
//   rhat'[a] = (1 - alpha) * r * [a == played] + alpha * rhat[a]
// (the estimate of unplayed actions decays; this is the published form).
// RVsigma(t) knows the game and the reference equilibrium, follows the exact
// reward vector, and renormalizes instead of retracting.

namespace arena::detail {

namespace {

double l2(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

void decay_reward_estimate(std::vector<double>& rhat, double alpha, int played, double reward) {
  for (std::size_t a = 0; a < rhat.size(); ++a) {
    const double fresh = (static_cast<int>(a) == played) ? (1.0 - alpha) * reward : 0.0;
    rhat[a] = fresh + alpha * rhat[a];
  }
}

class GigaWolf final : public Agent {
 public:
  GigaWolf(const AgentConfig& cfg, int own_actions)
      : x_(uniform_strategy(own_actions)),
        z_(uniform_strategy(own_actions)),
        rhat_(static_cast<std::size_t>(own_actions), 0.0),
        alpha_a_(require_param(cfg, "alpha_a")),
        alpha_b_(require_param(cfg, "alpha_b")),
        eta_a_(require_param(cfg, "eta_a")),
        eta_b_(require_param(cfg, "eta_b")) {}

  Strategy act(long) override { return x_; }

  void observe(const AgentObservation& obs) override {
    const double t = static_cast<double>(obs.t);
    const double alpha = 1.0 / std::sqrt(t / alpha_a_ + alpha_b_);
    const double eta = 1.0 / std::sqrt(eta_a_ * t + eta_b_);
    decay_reward_estimate(rhat_, alpha, obs.own_action, obs.reward);

    const int n = static_cast<int>(x_.size());
    std::vector<double> step(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) step[static_cast<std::size_t>(a)] = x_[static_cast<std::size_t>(a)] + eta * rhat_[static_cast<std::size_t>(a)];
    const Strategy xhat = project_to_simplex(step);
    for (int a = 0; a < n; ++a) step[static_cast<std::size_t>(a)] = z_[static_cast<std::size_t>(a)] + eta * rhat_[static_cast<std::size_t>(a)] / 3.0;
    const Strategy znext = project_to_simplex(step);

    // Step toward the cautious baseline z by the WoLF fraction delta.
    const double num = l2(znext, z_);
    const double den = l2(znext, xhat);
    const double delta = den == 0.0 ? 1.0 : std::min(1.0, num / den);
    for (int a = 0; a < n; ++a)
      x_[static_cast<std::size_t>(a)] = xhat[static_cast<std::size_t>(a)] +
                                        delta * (znext[static_cast<std::size_t>(a)] - xhat[static_cast<std::size_t>(a)]);
    z_ = znext;
  }

  std::string beliefs() const override {
    return "giga-wolf:v1:x=" + join_compact(x_) + ":z=" + join_compact(z_) +
           ":rhat=" + join_compact(rhat_);
  }

 private:
  Strategy x_, z_;
  std::vector<double> rhat_;
  double alpha_a_, alpha_b_, eta_a_, eta_b_;
};

// Global stochastic approximation: projected ascent on rhat plus decaying
// Gaussian exploration noise.
class Gsa final : public Agent {
 public:
  Gsa(const AgentConfig& cfg, int own_actions, std::uint64_t seed)
      : x_(uniform_strategy(own_actions)),
        rhat_(static_cast<std::size_t>(own_actions), 0.0),
        alpha_a_(require_param(cfg, "alpha_a")),
        alpha_b_(require_param(cfg, "alpha_b")),
        eta_a_(require_param(cfg, "eta_a")),
        eta_b_(require_param(cfg, "eta_b")),
        lambda_a_(require_param(cfg, "lambda_a")),
        lambda_b_(require_param(cfg, "lambda_b")),
        rng_(seed) {}

  Strategy act(long) override { return x_; }

  void observe(const AgentObservation& obs) override {
    const double t = static_cast<double>(obs.t);
    const double alpha = 1.0 / std::sqrt(t / alpha_a_ + alpha_b_);
    const double eta = 1.0 / std::sqrt(eta_a_ * t + eta_b_);
    const double lambda = 1.0 / std::sqrt(lambda_a_ * t + lambda_b_);
    decay_reward_estimate(rhat_, alpha, obs.own_action, obs.reward);

    std::vector<double> step(x_.size());
    for (std::size_t a = 0; a < x_.size(); ++a)
      step[a] = x_[a] + eta * rhat_[a] + lambda * rng_.normal();
    x_ = project_to_simplex(step);
  }

  std::string beliefs() const override {
    return "gsa:v1:x=" + join_compact(x_) + ":rhat=" + join_compact(rhat_);
  }

 private:
  Strategy x_;
  std::vector<double> rhat_;
  double alpha_a_, alpha_b_, eta_a_, eta_b_, lambda_a_, lambda_b_;
  rng::Stream rng_;
};

// RVsigma(t): exact reward vector against the opponent's last action; the
// step is scaled by sigma(t) while performing at least at the reference
// equilibrium payoff against the opponent's empirical mix, and by 1 below it.
class Rvs final : public Agent {
 public:
  Rvs(const AgentConfig& cfg, const Game& game, const SolutionFile& sol, int role)
      : own_u_(own_payoff_matrix(game, role)),
        pi_(uniform_strategy(own_u_.rows())),
        counts_(static_cast<std::size_t>(own_u_.cols()), 0.0),
        sigma_div_(require_param(cfg, "sigma_div")),
        eta_a_(require_param(cfg, "eta_a")),
        eta_b_(require_param(cfg, "eta_b")) {
    const auto& reference = sol.equilibria.profiles.front();  // label-0 run
    ne_payoff_ = own_payoff(reference, role);
  }

  Strategy act(long) override { return pi_; }

  void observe(const AgentObservation& obs) override {
    const double t = static_cast<double>(obs.t);
    const double sigma = 1.0 / (1.0 + std::sqrt(t) / sigma_div_);
    const double eta = 1.0 / std::sqrt(eta_a_ * t + eta_b_);

    counts_[static_cast<std::size_t>(obs.opponent_action)] += 1.0;
    double total = 0.0;
    for (double c : counts_) total += c;
    Strategy emp(counts_);
    for (double& c : emp) c /= total;

    const auto vs_empirical = action_payoffs(own_u_, emp);
    double current = 0.0;
    for (std::size_t a = 0; a < pi_.size(); ++a) current += pi_[a] * vs_empirical[a];
    const double k = current >= ne_payoff_ ? sigma : 1.0;

    std::vector<double> r(pi_.size());
    for (std::size_t a = 0; a < pi_.size(); ++a)
      r[a] = own_u_(static_cast<int>(a), obs.opponent_action);
    double mean_r = 0.0;
    for (std::size_t a = 0; a < pi_.size(); ++a) mean_r += pi_[a] * r[a];

    std::vector<double> w(pi_.size());
    for (std::size_t a = 0; a < pi_.size(); ++a) w[a] = pi_[a] + eta * k * (r[a] - mean_r);
    pi_ = normalize_to_simplex(w);
  }

  std::string beliefs() const override { return "rvs:v1:pi=" + join_compact(pi_); }

 private:
  Matrix own_u_;
  Strategy pi_;
  std::vector<double> counts_;
  double sigma_div_, eta_a_, eta_b_;
  double ne_payoff_ = 0.0;
};

}  // namespace

std::unique_ptr<Agent> make_giga_wolf(const AgentConfig& cfg, const AgentView& v, std::uint64_t) {
  return std::make_unique<GigaWolf>(cfg, v.own_actions);
}

std::unique_ptr<Agent> make_gsa(const AgentConfig& cfg, const AgentView& v, std::uint64_t seed) {
  return std::make_unique<Gsa>(cfg, v.own_actions, seed);
}

std::unique_ptr<Agent> make_rvs(const AgentConfig& cfg, const AgentView& v, std::uint64_t) {
  return std::make_unique<Rvs>(cfg, *v.game, *v.solutions, v.role);
}

}  // namespace arena::detail
