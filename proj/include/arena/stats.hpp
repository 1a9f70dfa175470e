#ifndef ARENA_STATS_HPP_
#define ARENA_STATS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace arena::stats {

// Empirical distribution of one metric over a set of runs, with the filter
// that produced it.
struct SQD {
  std::string metric;
  std::string filter;
  std::vector<double> values;  // kept sorted ascending

  static SQD of(std::vector<double> values, std::string metric = "", std::string filter = "");
};

struct BootstrapCI {
  std::string statistic;
  double lower = 0.0, upper = 0.0;
  std::size_t l = 0, k = 0;
  std::uint64_t seed = 0;
};

enum class StatKind { kMean, kQuantile };

inline constexpr std::size_t kDefaultReplicates = 2500;

// Percentile confidence interval from k subsamples of size l drawn with
// replacement. Defaults: l = floor(m/2), k = 2500, level = 0.95.
BootstrapCI bootstrap_ci(std::span<const double> sample, StatKind stat, double quantile_q,
                         std::size_t l, std::size_t k, double level, std::uint64_t seed);

inline BootstrapCI bootstrap_mean_ci(std::span<const double> sample, std::uint64_t seed) {
  return bootstrap_ci(sample, StatKind::kMean, 0.0, sample.size() / 2, kDefaultReplicates, 0.95,
                      seed);
}

struct KsResult {
  double d = 0.0;
  bool reject = false;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic critical value
// c(alpha) * sqrt((na+nb)/(na*nb)); c(0.05) = 1.358.
KsResult ks_two_sample(const SQD& a, const SQD& b, double alpha = 0.05);

struct SpearmanResult {
  double rho = 0.0;
  double p = 1.0;
  bool significant = false;
};

// Spearman rank correlation with average ranks on ties and the
// t-approximation p-value. Throws on all-tied inputs.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y,
                        double alpha = 0.05);

enum class Dominance { kAOverB, kBOverA, kNone };

struct DominanceResult {
  Dominance verdict = Dominance::kNone;     // weak everywhere + strict somewhere
  Dominance weak_verdict = Dominance::kNone;  // weak everywhere (possibly nowhere strict)
};

// Probabilistic domination compared on the quantile grid q = i/N,
// i = 1..N-1, N = min(sample sizes), with interpolated empirical quantiles.
DominanceResult prob_dominance(const SQD& a, const SQD& b);

// Adjusted Fisher-Pearson sample skewness, g1 * sqrt(n(n-1))/(n-2).
double skewness(std::span<const double> sample);

struct VarianceDemo {
  double var_independent = 0.0;
  double var_stratified = 0.0;
  double se_independent = 0.0;  // Monte Carlo standard error of each variance
  double se_stratified = 0.0;
};

// Monte Carlo comparison of the mean-estimator variance under independent
// sampling (n fresh (mu, zeta) pairs per replication) versus stratified
// sampling (k strata of n/k seeds each). M and Z are standard normal.
VarianceDemo sampling_scheme_variance_demo(const std::function<double(double, double)>& f,
                                           int n_total, int strata, int replications,
                                           std::uint64_t seed);

// Interpolated empirical quantile (linear between order statistics).
double empirical_quantile(std::span<const double> sorted, double q);

}  // namespace arena::stats

#endif  // ARENA_STATS_HPP_
