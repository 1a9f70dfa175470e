#include "arena/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arena/rng.hpp"

namespace arena::analysis {

namespace {

int index_of(const std::vector<std::string>& list, const std::string& name) {
  const auto it = std::find(list.begin(), list.end(), name);
  if (it == list.end()) throw std::invalid_argument("unknown algorithm in data: " + name);
  return static_cast<int>(it - list.begin());
}

// data grouped into the |A| x |A| ordered-pair cells
std::vector<std::vector<std::vector<double>>> cell_rewards(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms) {
  const std::size_t n = algorithms.size();
  std::vector<std::vector<std::vector<double>>> cells(n, std::vector<std::vector<double>>(n));
  for (const auto& r : data) {
    const auto i = static_cast<std::size_t>(index_of(algorithms, r.protagonist));
    const auto j = static_cast<std::size_t>(index_of(algorithms, r.opponent));
    cells[i][j].push_back(r.value);
  }
  return cells;
}

double mean_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

bool strictly_dominated_row(const Matrix& m, int row) {
  for (int other = 0; other < m.rows(); ++other) {
    if (other == row) continue;
    bool all_above = true;
    for (int c = 0; c < m.cols(); ++c)
      if (m(other, c) <= m(row, c)) {
        all_above = false;
        break;
      }
    if (all_above) return true;
  }
  return false;
}

bool weakly_dominated_row(const Matrix& m, int row) {
  for (int other = 0; other < m.rows(); ++other) {
    if (other == row) continue;
    bool all_at_least = true, some_above = false;
    for (int c = 0; c < m.cols(); ++c) {
      if (m(other, c) < m(row, c)) {
        all_at_least = false;
        break;
      }
      if (m(other, c) > m(row, c)) some_above = true;
    }
    if (all_at_least && some_above) return true;
  }
  return false;
}

// One bootstrap replicate of the algorithm game: each cell's mean recomputed
// from a with-replacement subsample of half the cell's runs.
Matrix subsampled_game(const std::vector<std::vector<std::vector<double>>>& cells,
                       rng::Stream& rng) {
  const int n = static_cast<int>(cells.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& runs = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const std::size_t l = std::max<std::size_t>(1, runs.size() / 2);
      double acc = 0.0;
      for (std::size_t k = 0; k < l; ++k)
        acc += runs[static_cast<std::size_t>(rng.uniform_int(runs.size()))];
      m(i, j) = acc / static_cast<double>(l);
    }
  return m;
}

void require_cells(const std::vector<std::vector<std::vector<double>>>& cells,
                   std::size_t minimum) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[i][j].size() < minimum)
        throw std::invalid_argument("algorithm-game cell (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") has fewer than " +
                                    std::to_string(minimum) + " runs");
}

}  // namespace

AlgorithmGame build_algorithm_game(const std::vector<RunReward>& data,
                                   const std::vector<std::string>& algorithms) {
  const auto cells = cell_rewards(data, algorithms);
  require_cells(cells, 1);
  const int n = static_cast<int>(algorithms.size());
  AlgorithmGame game;
  game.algorithms = algorithms;
  game.mean = Matrix(n, n);
  game.counts.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& runs = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      game.mean(i, j) = mean_of(runs);
      game.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(runs.size());
    }
  return game;
}

std::vector<DominationShare> dominated_algorithms(const std::vector<RunReward>& data,
                                                  const std::vector<std::string>& algorithms,
                                                  int n_subsamples, std::uint64_t seed) {
  const auto cells = cell_rewards(data, algorithms);
  require_cells(cells, 2);
  const int n = static_cast<int>(algorithms.size());
  std::vector<long> strict_hits(static_cast<std::size_t>(n), 0);
  std::vector<long> weak_hits(static_cast<std::size_t>(n), 0);

  rng::Stream rng(seed);
  for (int rep = 0; rep < n_subsamples; ++rep) {
    const Matrix m = subsampled_game(cells, rng);
    for (int row = 0; row < n; ++row) {
      if (strictly_dominated_row(m, row)) ++strict_hits[static_cast<std::size_t>(row)];
      if (weakly_dominated_row(m, row)) ++weak_hits[static_cast<std::size_t>(row)];
    }
  }

  std::vector<DominationShare> out;
  for (int row = 0; row < n; ++row) {
    DominationShare share;
    share.algorithm = algorithms[static_cast<std::size_t>(row)];
    share.strict_share = static_cast<double>(strict_hits[static_cast<std::size_t>(row)]) / n_subsamples;
    share.weak_share = static_cast<double>(weak_hits[static_cast<std::size_t>(row)]) / n_subsamples;
    share.strict_dominated = share.strict_share >= kSignificanceShare;
    share.weak_dominated = share.weak_share >= kSignificanceShare;
    out.push_back(std::move(share));
  }
  return out;
}

std::vector<PureCellFrequency> pure_equilibria_of_algorithm_game(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    int n_subsamples, std::uint64_t seed) {
  const auto cells = cell_rewards(data, algorithms);
  require_cells(cells, 2);
  const int n = static_cast<int>(algorithms.size());
  std::vector<std::vector<long>> hits(static_cast<std::size_t>(n),
                                      std::vector<long>(static_cast<std::size_t>(n), 0));

  rng::Stream rng(seed);
  for (int rep = 0; rep < n_subsamples; ++rep) {
    const Matrix m = subsampled_game(cells, rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // Row payoff at (i,j) is m(i,j); the column player's payoff is the
        // mirrored protagonist mean m(j,i).
        bool row_br = true;
        for (int i2 = 0; i2 < n && row_br; ++i2) row_br = m(i2, j) <= m(i, j);
        bool col_br = true;
        for (int j2 = 0; j2 < n && col_br; ++j2) col_br = m(j2, i) <= m(j, i);
        if (row_br && col_br) ++hits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
  }

  std::vector<PureCellFrequency> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double freq =
          static_cast<double>(hits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
          n_subsamples;
      if (freq > 0.0)
        out.push_back({i, j, freq, freq >= kSignificanceShare});
    }
  std::sort(out.begin(), out.end(), [](const PureCellFrequency& a, const PureCellFrequency& b) {
    return a.frequency > b.frequency;
  });
  return out;
}

namespace {

std::map<std::string, std::vector<SetEntry>> overlap_sets(
    const std::map<std::string, std::map<std::string, std::vector<double>>>& blocks,
    std::uint64_t seed) {
  std::map<std::string, std::vector<SetEntry>> out;
  for (const auto& [block, per_algorithm] : blocks) {
    std::vector<SetEntry> entries;
    for (const auto& [algorithm, values] : per_algorithm) {
      if (values.empty()) throw std::invalid_argument("empty sample for " + algorithm + " in " + block);
      SetEntry e;
      e.algorithm = algorithm;
      e.mean = mean_of(values);
      const auto ci = stats::bootstrap_mean_ci(
          values, rng::derive_seed(seed, block + "/" + algorithm));
      e.ci_lower = ci.lower;
      e.ci_upper = ci.upper;
      entries.push_back(std::move(e));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].mean > entries[best].mean) best = i;
    for (auto& e : entries)
      e.member = e.ci_upper >= entries[best].ci_lower && entries[best].ci_upper >= e.ci_lower;
    entries[best].member = true;
    out[block] = std::move(entries);
  }
  return out;
}

}  // namespace

std::map<std::string, std::vector<SetEntry>> best_response_sets(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    std::uint64_t seed) {
  std::map<std::string, std::map<std::string, std::vector<double>>> blocks;
  for (const auto& r : data) {
    index_of(algorithms, r.protagonist);  // validate
    blocks[r.opponent][r.protagonist].push_back(r.value);
  }
  return overlap_sets(blocks, seed);
}

std::map<std::string, std::vector<SetEntry>> best_algorithm_sets_per_generator(
    const std::vector<RunReward>& data, const std::vector<std::string>& algorithms,
    std::uint64_t seed) {
  std::map<std::string, std::map<std::string, std::vector<double>>> blocks;
  for (const auto& r : data) {
    index_of(algorithms, r.protagonist);
    blocks[r.generator][r.protagonist].push_back(r.value);
  }
  return overlap_sets(blocks, seed);
}

std::vector<SimilarityCount> similarity_matrix(const std::vector<RunReward>& data,
                                               const std::vector<std::string>& algorithms,
                                               double alpha) {
  // SQD per (protagonist, generator, opponent)
  std::map<std::string, std::map<std::pair<std::string, std::string>, std::vector<double>>> sqds;
  std::set<std::pair<std::string, std::string>> all_cells;
  for (const auto& r : data) {
    sqds[r.protagonist][{r.generator, r.opponent}].push_back(r.value);
    all_cells.insert({r.generator, r.opponent});
  }

  std::vector<SimilarityCount> out;
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
      SimilarityCount count;
      count.a = algorithms[i];
      count.b = algorithms[j];
      for (const auto& cell : all_cells) {
        const auto& ma = sqds[count.a];
        const auto& mb = sqds[count.b];
        const auto ita = ma.find(cell);
        const auto itb = mb.find(cell);
        if (ita == ma.end() || itb == mb.end() || ita->second.empty() || itb->second.empty()) {
          ++count.skipped;
          continue;
        }
        ++count.tested;
        const auto res = stats::ks_two_sample(stats::SQD::of(ita->second),
                                              stats::SQD::of(itb->second), alpha);
        if (!res.reject) ++count.similar;
      }
      out.push_back(std::move(count));
    }
  }
  return out;
}

std::vector<CorrelationCell> correlation_screens(const std::vector<PairedMetrics>& blocks,
                                                 double alpha) {
  std::vector<CorrelationCell> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) {
    CorrelationCell cell;
    cell.algorithm = block.algorithm;
    cell.generator = block.generator;
    try {
      const auto res = stats::spearman(block.x, block.y, alpha);
      cell.rho = res.rho;
      cell.p = res.p;
      cell.sign = res.significant ? (res.rho > 0 ? '+' : '-') : 'x';
    } catch (const std::invalid_argument&) {
      cell.degenerate = true;
      cell.sign = 'x';
    }
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace arena::analysis
