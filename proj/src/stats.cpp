#include "arena/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "arena/rng.hpp"

namespace arena::stats {

SQD SQD::of(std::vector<double> values, std::string metric, std::string filter) {
  SQD s;
  s.metric = std::move(metric);
  s.filter = std::move(filter);
  s.values = std::move(values);
  std::sort(s.values.begin(), s.values.end());
  return s;
}

double empirical_quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
  if (sorted.size() == 1) return sorted[0];
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

double statistic_of(std::vector<double>& scratch, StatKind stat, double q) {
  if (stat == StatKind::kMean)
    return std::accumulate(scratch.begin(), scratch.end(), 0.0) /
           static_cast<double>(scratch.size());
  std::sort(scratch.begin(), scratch.end());
  return empirical_quantile(scratch, q);
}

}  // namespace

BootstrapCI bootstrap_ci(std::span<const double> sample, StatKind stat, double quantile_q,
                         std::size_t l, std::size_t k, double level, std::uint64_t seed) {
  if (sample.empty()) throw std::invalid_argument("bootstrap_ci: empty sample");
  if (l == 0) l = std::max<std::size_t>(1, sample.size() / 2);
  if (k == 0) k = kDefaultReplicates;

  rng::Stream rng(seed);
  std::vector<double> stats(k);
  std::vector<double> scratch(l);
  for (std::size_t rep = 0; rep < k; ++rep) {
    for (std::size_t i = 0; i < l; ++i)
      scratch[i] = sample[static_cast<std::size_t>(rng.uniform_int(sample.size()))];
    stats[rep] = statistic_of(scratch, stat, quantile_q);
  }
  std::sort(stats.begin(), stats.end());

  BootstrapCI ci;
  ci.statistic = stat == StatKind::kMean ? "mean" : "quantile";
  ci.l = l;
  ci.k = k;
  ci.seed = seed;
  const double tail = (1.0 - level) / 2.0;
  ci.lower = empirical_quantile(stats, tail);
  ci.upper = empirical_quantile(stats, 1.0 - tail);
  return ci;
}

KsResult ks_two_sample(const SQD& a, const SQD& b, double alpha) {
  const auto& xs = a.values;
  const auto& ys = b.values;
  if (xs.empty() || ys.empty()) throw std::invalid_argument("ks_two_sample: empty sample");

  // Sweep both sorted samples; the CDF gap can only change at sample points.
  const double na = static_cast<double>(xs.size());
  const double nb = static_cast<double>(ys.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double x = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] <= x) ++i;
    while (j < ys.size() && ys[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  d = std::max(d, 1.0 - static_cast<double>(std::min(i, xs.size())) / na);
  d = std::max(d, 1.0 - static_cast<double>(std::min(j, ys.size())) / nb);
  // The loop always ends with one side exhausted; the final max covers the
  // other side's remaining mass.

  // Asymptotic two-sample critical value; the familiar 1.358 at alpha 0.05.
  const double c_alpha = alpha == 0.05 ? 1.358 : std::sqrt(-std::log(alpha / 2.0) / 2.0);
  const double critical = c_alpha * std::sqrt((na + nb) / (na * nb));
  return {d, d > critical};
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

SpearmanResult spearman(std::span<const double> x, std::span<const double> y, double alpha) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("spearman: need at least 3 pairs");

  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("spearman: degenerate input (all values tied)");

  SpearmanResult out;
  out.rho = sxy / std::sqrt(sxx * syy);
  if (out.rho >= 1.0 || out.rho <= -1.0) {
    out.p = 0.0;
  } else {
    const double t = out.rho * std::sqrt((static_cast<double>(n) - 2.0) / (1.0 - out.rho * out.rho));
    const boost::math::students_t dist(static_cast<double>(n) - 2.0);
    out.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  }
  out.significant = out.p < alpha;
  return out;
}

DominanceResult prob_dominance(const SQD& a, const SQD& b) {
  if (a.values.empty() || b.values.empty())
    throw std::invalid_argument("prob_dominance: empty sample");
  const std::size_t n = std::min(a.values.size(), b.values.size());

  bool a_ge = true, b_ge = true, a_strict = false, b_strict = false;
  for (std::size_t i = 1; i < n; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(n);
    const double qa = empirical_quantile(a.values, q);
    const double qb = empirical_quantile(b.values, q);
    if (qa < qb) a_ge = false;
    if (qb < qa) b_ge = false;
    if (qa > qb) a_strict = true;
    if (qb > qa) b_strict = true;
  }
  // A single-point grid (n == 1) compares nothing; treat as no dominance.

  DominanceResult out;
  if (a_ge && a_strict) out.verdict = Dominance::kAOverB;
  else if (b_ge && b_strict) out.verdict = Dominance::kBOverA;
  if (a_ge && !b_ge) out.weak_verdict = Dominance::kAOverB;
  else if (b_ge && !a_ge) out.weak_verdict = Dominance::kBOverA;
  return out;
}

double skewness(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 3) throw std::invalid_argument("skewness: need at least 3 values");
  const double nn = static_cast<double>(n);
  double mean = 0.0;
  for (double x : sample) mean += x;
  mean /= nn;
  double m2 = 0.0, m3 = 0.0;
  for (double x : sample) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= nn;
  m3 /= nn;
  if (m2 == 0.0) throw std::invalid_argument("skewness: zero variance");
  const double g1 = m3 / std::pow(m2, 1.5);
  return g1 * std::sqrt(nn * (nn - 1.0)) / (nn - 2.0);
}

VarianceDemo sampling_scheme_variance_demo(const std::function<double(double, double)>& f,
                                           int n_total, int strata, int replications,
                                           std::uint64_t seed) {
  if (n_total <= 0 || strata <= 0 || n_total % strata != 0)
    throw std::invalid_argument("variance demo: n_total must be divisible by strata");
  const int per_stratum = n_total / strata;

  rng::Stream rng(seed);
  std::vector<double> ind_means(static_cast<std::size_t>(replications));
  std::vector<double> strat_means(static_cast<std::size_t>(replications));
  for (int rep = 0; rep < replications; ++rep) {
    double acc = 0.0;
    for (int i = 0; i < n_total; ++i) acc += f(rng.normal(), rng.normal());
    ind_means[static_cast<std::size_t>(rep)] = acc / n_total;

    acc = 0.0;
    for (int s = 0; s < strata; ++s) {
      const double mu = rng.normal();
      for (int i = 0; i < per_stratum; ++i) acc += f(mu, rng.normal());
    }
    strat_means[static_cast<std::size_t>(rep)] = acc / n_total;
  }

  auto variance = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / static_cast<double>(v.size() - 1);
  };

  VarianceDemo out;
  out.var_independent = variance(ind_means);
  out.var_stratified = variance(strat_means);
  // Var(s^2) ~ 2 sigma^4 / (R - 1) for near-normal estimator distributions.
  const double r = static_cast<double>(replications);
  out.se_independent = out.var_independent * std::sqrt(2.0 / (r - 1.0));
  out.se_stratified = out.var_stratified * std::sqrt(2.0 / (r - 1.0));
  return out;
}

}  // namespace arena::stats
