#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "arena/gt.hpp"
#include "arena/text_io.hpp"

namespace arena {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatProfile = std::pair<RatVec, RatVec>;  // (s1, s2), exact

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> v;

  static RatMatrix from(const Matrix& m) {
    RatMatrix r;
    r.rows = m.rows();
    r.cols = m.cols();
    r.v.reserve(static_cast<std::size_t>(r.rows) * r.cols);
    for (int i = 0; i < r.rows; ++i)
      for (int j = 0; j < r.cols; ++j) r.v.emplace_back(m(i, j));
    return r;
  }

  const Rational& operator()(int i, int j) const {
    return v[static_cast<std::size_t>(i) * cols + j];
  }
};

// ---------------------------------------------------------------------------
// Lemke-Howson with exact rational pivoting.
//
// Two constraint systems are kept in tableau form (von Stengel's description):
//   I  (n rows):  B' x + s = 1,  x >= 0 over row actions, s slack per column
//   II (m rows):  A  y + r = 1,  y >= 0 over column actions, r slack per row
// with A = u1 + offset, B = u2 + offset strictly positive. Variable labels:
// x_i and r_i carry row-action label i; s_j and y_j carry column-action label
// m+j. Starting from the artificial origin and dropping one label, alternate
// complementary pivots until the dropped label is re-acquired.
//
// The ratio test is lexicographic (rhs first, then the columns in fixed
// order), which resolves degenerate ties deterministically and keeps the path
// acyclic; a generous pivot bound guards the remaining pathological cases.
// ---------------------------------------------------------------------------

struct Tableau {
  int nvars = 0;
  std::vector<std::vector<Rational>> row;  // each: nvars coefficients + rhs
  std::vector<int> basis;

  Rational& rhs(int i) { return row[i][static_cast<std::size_t>(nvars)]; }

  // Pivots variable `enter` in; returns the variable forced out.
  int pivot_in(int enter) {
    int leave = -1;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i][static_cast<std::size_t>(enter)] <= 0) continue;
      if (leave < 0 || lex_less(static_cast<int>(i), leave, enter)) leave = static_cast<int>(i);
    }
    if (leave < 0) throw DegenerateGameError("lemke-howson: no admissible pivot row");

    auto& prow = row[static_cast<std::size_t>(leave)];
    const Rational pivot = prow[static_cast<std::size_t>(enter)];
    for (auto& x : prow) x /= pivot;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == leave) continue;
      const Rational f = row[i][static_cast<std::size_t>(enter)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row[i].size(); ++j) row[i][j] -= f * prow[j];
    }
    const int out = basis[static_cast<std::size_t>(leave)];
    basis[static_cast<std::size_t>(leave)] = enter;
    return out;
  }

 private:
  // Lexicographic comparison of candidate pivot rows a and b, both scaled by
  // their entry in the entering column.
  bool lex_less(int a, int b, int enter) const {
    const auto& ra = row[static_cast<std::size_t>(a)];
    const auto& rb = row[static_cast<std::size_t>(b)];
    const Rational& pa = ra[static_cast<std::size_t>(enter)];
    const Rational& pb = rb[static_cast<std::size_t>(enter)];
    const Rational r = ra[static_cast<std::size_t>(nvars)] / pa -
                       rb[static_cast<std::size_t>(nvars)] / pb;
    if (r != 0) return r < 0;
    for (int j = 0; j < nvars; ++j) {
      const Rational d = ra[static_cast<std::size_t>(j)] / pa - rb[static_cast<std::size_t>(j)] / pb;
      if (d != 0) return d < 0;
    }
    return false;  // identical rows cannot occur in a full-rank tableau
  }
};

RatProfile lemke_howson_exact(const RatMatrix& a, const RatMatrix& b, int initial_label) {
  const int m = a.rows, n = a.cols;

  Rational lo = a.v[0];
  for (const auto& x : a.v) lo = std::min(lo, x);
  for (const auto& x : b.v) lo = std::min(lo, x);
  const Rational offset = 1 - lo;

  Tableau t1;  // n rows; vars: x_0..x_{m-1}, s_0..s_{n-1}
  t1.nvars = m + n;
  t1.row.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(m + n + 1), Rational(0)));
  t1.basis.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) t1.row[j][static_cast<std::size_t>(i)] = b(i, j) + offset;
    t1.row[j][static_cast<std::size_t>(m + j)] = 1;
    t1.rhs(j) = 1;
    t1.basis[static_cast<std::size_t>(j)] = m + j;
  }

  Tableau t2;  // m rows; vars: y_0..y_{n-1}, r_0..r_{m-1}
  t2.nvars = m + n;
  t2.row.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m + n + 1), Rational(0)));
  t2.basis.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t2.row[i][static_cast<std::size_t>(j)] = a(i, j) + offset;
    t2.row[i][static_cast<std::size_t>(n + i)] = 1;
    t2.rhs(i) = 1;
    t2.basis[static_cast<std::size_t>(i)] = n + i;
  }

  // Variable label within each system (labels: 0..m-1 rows, m..m+n-1 columns).
  auto label1 = [&](int var) { return var; };                        // x_i -> i, s_j -> m+j
  auto label2 = [&](int var) { return var < n ? m + var : var - n; };  // y_j -> m+j, r_i -> i

  bool in_first = initial_label < m;
  int entering = initial_label < m ? initial_label : initial_label - m;

  const long bound = 50000;
  long pivots = 0;
  while (true) {
    if (++pivots > bound) throw DegenerateGameError("lemke-howson: pivot bound exceeded");
    const int evicted = in_first ? t1.pivot_in(entering) : t2.pivot_in(entering);
    const int evicted_label = in_first ? label1(evicted) : label2(evicted);
    if (evicted_label == initial_label) break;
    if (in_first) {
      // complement of x_i is r_i (var n+i in II); of s_j it is y_j (var j)
      entering = evicted < m ? n + evicted : evicted - m;
    } else {
      // complement of y_j is s_j (var m+j in I); of r_i it is x_i (var i)
      entering = evicted < n ? m + evicted : evicted - n;
    }
    in_first = !in_first;
  }

  RatVec x(static_cast<std::size_t>(m), Rational(0)), y(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < n; ++j)
    if (t1.basis[static_cast<std::size_t>(j)] < m) x[static_cast<std::size_t>(t1.basis[static_cast<std::size_t>(j)])] = t1.rhs(j);
  for (int i = 0; i < m; ++i)
    if (t2.basis[static_cast<std::size_t>(i)] < n) y[static_cast<std::size_t>(t2.basis[static_cast<std::size_t>(i)])] = t2.rhs(i);

  Rational sx(0), sy(0);
  for (const auto& v : x) sx += v;
  for (const auto& v : y) sy += v;
  if (sx == 0 || sy == 0) throw DegenerateGameError("lemke-howson: returned to artificial vertex");
  for (auto& v : x) v /= sx;
  for (auto& v : y) v /= sy;
  return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------------
// Support enumeration, exact. For equal-size supports (S1, S2) solve the two
// indifference systems and verify nonnegativity plus off-support optimality.
// Complete for nondegenerate games; singular systems are skipped.
// ---------------------------------------------------------------------------

// Opponent mixture over S_mix making every row in S_eq indifferent:
//   sum_j u(i, j) sigma_j = v  for i in S_eq,  sum sigma = 1.
std::optional<std::pair<RatVec, Rational>> solve_indifference(const RatMatrix& u,
                                                              const std::vector<int>& s_eq,
                                                              const std::vector<int>& s_mix) {
  const int k = static_cast<int>(s_mix.size());
  const int dim = k + 1;  // sigma entries + common value v
  std::vector<RatVec> aug(static_cast<std::size_t>(dim),
                          RatVec(static_cast<std::size_t>(dim + 1), Rational(0)));
  for (int r = 0; r < k; ++r) {  // indifference rows
    for (int c = 0; c < k; ++c) aug[r][c] = u(s_eq[r], s_mix[c]);
    aug[r][static_cast<std::size_t>(k)] = -1;  // -v
  }
  for (int c = 0; c < k; ++c) aug[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = 1;
  aug[static_cast<std::size_t>(k)][static_cast<std::size_t>(dim)] = 1;

  // Gaussian elimination with first-nonzero pivoting; exact arithmetic, so
  // only structural singularity can stop us.
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r)
      if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(aug[static_cast<std::size_t>(col)], aug[static_cast<std::size_t>(pivot)]);
    const Rational p = aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& x : aug[static_cast<std::size_t>(col)]) x /= p;
    for (int r = 0; r < dim; ++r) {
      if (r == col) continue;
      const Rational f = aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c <= dim; ++c)
        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }

  RatVec sigma(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) sigma[static_cast<std::size_t>(c)] = aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(dim)];
  return std::make_pair(std::move(sigma), aug[static_cast<std::size_t>(k)][static_cast<std::size_t>(dim)]);
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<RatProfile> support_enumeration_exact(const RatMatrix& u1, const RatMatrix& u2t) {
  const int m = u1.rows, n = u1.cols;
  std::vector<RatProfile> found;

  auto expand = [](const RatVec& compact, const std::vector<int>& support, int size) {
    RatVec full(static_cast<std::size_t>(size), Rational(0));
    for (std::size_t i = 0; i < support.size(); ++i) full[static_cast<std::size_t>(support[i])] = compact[i];
    return full;
  };

  for (int k = 1; k <= std::min(m, n); ++k) {
    combinations(m, k, [&](const std::vector<int>& s1) {
      combinations(n, k, [&](const std::vector<int>& s2) {
        const auto ind2 = solve_indifference(u1, s1, s2);  // sigma2 over s2, value v1
        if (!ind2) return;
        for (const auto& p : ind2->first)
          if (p < 0) return;
        const auto ind1 = solve_indifference(u2t, s2, s1);  // sigma1 over s1, value v2
        if (!ind1) return;
        for (const auto& p : ind1->first)
          if (p < 0) return;

        const RatVec sigma1 = expand(ind1->first, s1, m);
        const RatVec sigma2 = expand(ind2->first, s2, n);
        // Off-support best-response checks, exact.
        for (int i = 0; i < m; ++i) {
          Rational payoff(0);
          for (int j = 0; j < n; ++j) payoff += u1(i, j) * sigma2[static_cast<std::size_t>(j)];
          if (payoff > ind2->second) return;
        }
        for (int j = 0; j < n; ++j) {
          Rational payoff(0);
          for (int i = 0; i < m; ++i) payoff += u2t(j, i) * sigma1[static_cast<std::size_t>(i)];
          if (payoff > ind1->second) return;
        }
        found.emplace_back(sigma1, sigma2);
      });
    });
  }
  return found;
}

Strategy to_double_vec(const RatVec& v) {
  Strategy out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.convert_to<double>());
  return out;
}

double linf_gap(const Strategy& a, const Strategy& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

EquilibriumProfile make_profile(const Game& g, const RatMatrix& u1, const RatMatrix& u2,
                                const RatProfile& p) {
  EquilibriumProfile out;
  out.s1 = to_double_vec(p.first);
  out.s2 = to_double_vec(p.second);
  Rational pay1(0), pay2(0);
  for (int i = 0; i < g.rows; ++i) {
    if (p.first[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < g.cols; ++j) {
      if (p.second[static_cast<std::size_t>(j)] == 0) continue;
      const Rational w = p.first[static_cast<std::size_t>(i)] * p.second[static_cast<std::size_t>(j)];
      pay1 += w * u1(i, j);
      pay2 += w * u2(i, j);
    }
  }
  out.payoff1 = pay1.convert_to<double>();
  out.payoff2 = pay2.convert_to<double>();
  return out;
}

void mark_pareto(std::vector<EquilibriumProfile>& profiles) {
  constexpr double tol = 1e-9;
  for (auto& p : profiles) {
    bool dominated = false;
    for (const auto& q : profiles) {
      if (&q == &p) continue;
      if (q.payoff1 >= p.payoff1 - tol && q.payoff2 >= p.payoff2 - tol &&
          (q.payoff1 > p.payoff1 + tol || q.payoff2 > p.payoff2 + tol)) {
        dominated = true;
        break;
      }
    }
    p.pareto_optimal = !dominated;
  }
}

}  // namespace

EquilibriumProfile lemke_howson(const Game& g, int initial_label) {
  if (initial_label < 0 || initial_label >= g.rows + g.cols)
    throw InvalidInputError("lemke_howson: label out of range");
  const RatMatrix a = RatMatrix::from(g.u1);
  const RatMatrix b = RatMatrix::from(g.u2);
  const auto prof = lemke_howson_exact(a, b, initial_label);
  EquilibriumProfile out = make_profile(g, a, b, prof);
  return out;
}

EquilibriumSet enumerate_equilibria(const Game& g) {
  const RatMatrix a = RatMatrix::from(g.u1);
  const RatMatrix b = RatMatrix::from(g.u2);
  const bool small = g.rows <= 6 && g.cols <= 6;

  std::vector<RatProfile> lh_found;
  bool lh_degenerate = false;
  for (int label = 0; label < g.rows + g.cols; ++label) {
    try {
      lh_found.push_back(lemke_howson_exact(a, b, label));
    } catch (const DegenerateGameError&) {
      lh_degenerate = true;
    }
  }

  std::vector<RatProfile> all;
  EquilibriumSet out;
  if (lh_degenerate && small) {
    all = support_enumeration_exact(a, RatMatrix::from(g.u2.transposed()));
  } else {
    all = std::move(lh_found);
    if (small) {
      auto se = support_enumeration_exact(a, RatMatrix::from(g.u2.transposed()));
      all.insert(all.end(), std::make_move_iterator(se.begin()), std::make_move_iterator(se.end()));
    } else if (lh_degenerate) {
      out.possibly_incomplete = true;
    }
  }

  for (const auto& prof : all) {
    EquilibriumProfile candidate = make_profile(g, a, b, prof);
    bool duplicate = false;
    for (const auto& kept : out.profiles) {
      if (linf_gap(kept.s1, candidate.s1) <= kEquilibriumDedupTolerance &&
          linf_gap(kept.s2, candidate.s2) <= kEquilibriumDedupTolerance) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.profiles.push_back(std::move(candidate));
  }
  mark_pareto(out.profiles);
  return out;
}

int select_determined_equilibrium(const EquilibriumSet& eqs, int player) {
  if (eqs.profiles.empty())
    throw InvalidInputError("select_determined_equilibrium: empty equilibrium set");
  constexpr double tol = 1e-9;
  int best = 0;
  for (int i = 1; i < static_cast<int>(eqs.profiles.size()); ++i) {
    const auto& cand = eqs.profiles[static_cast<std::size_t>(i)];
    const auto& cur = eqs.profiles[static_cast<std::size_t>(best)];
    const double own_c = player == 1 ? cand.payoff1 : cand.payoff2;
    const double own_b = player == 1 ? cur.payoff1 : cur.payoff2;
    const double opp_c = player == 1 ? cand.payoff2 : cand.payoff1;
    const double opp_b = player == 1 ? cur.payoff2 : cur.payoff1;
    if (own_c > own_b + tol || (std::abs(own_c - own_b) <= tol && opp_c > opp_b + tol)) best = i;
  }
  return best;
}

SolutionFile solve_game(const Game& g) {
  SolutionFile s;
  s.maxmin1 = solve_maxmin(g, 1);
  s.maxmin2 = solve_maxmin(g, 2);
  s.equilibria = enumerate_equilibria(g);
  return s;
}

void write_solution(const SolutionFile& s, std::ostream& out) {
  out << "maxmin 1 " << format_double(s.maxmin1.value);
  for (double p : s.maxmin1.strategy) out << ' ' << format_double(p);
  out << '\n';
  out << "maxmin 2 " << format_double(s.maxmin2.value);
  for (double p : s.maxmin2.strategy) out << ' ' << format_double(p);
  out << '\n';
  for (const auto& eq : s.equilibria.profiles) {
    out << "eq";
    for (double p : eq.s1) out << ' ' << format_double(p);
    out << " |";
    for (double p : eq.s2) out << ' ' << format_double(p);
    out << ' ' << format_double(eq.payoff1) << ' ' << format_double(eq.payoff2) << ' '
        << (eq.pareto_optimal ? 1 : 0) << '\n';
  }
  if (s.equilibria.possibly_incomplete) out << "incomplete 1\n";
}

SolutionFile read_solution(std::istream& in) {
  SolutionFile s;
  std::string line;
  int maxmin_seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "maxmin") {
      int player = 0;
      ls >> player;
      MaxminSolution& mm = player == 1 ? s.maxmin1 : s.maxmin2;
      ls >> mm.value;
      double p = 0.0;
      mm.strategy.clear();
      while (ls >> p) mm.strategy.push_back(p);
      ++maxmin_seen;
    } else if (tag == "eq") {
      EquilibriumProfile eq;
      std::vector<std::string> toks;
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      const auto bar = std::find(toks.begin(), toks.end(), "|");
      if (bar == toks.end() || toks.end() - bar < 4)
        throw InvalidInputError("bad eq line: " + line);
      for (auto it = toks.begin(); it != bar; ++it) eq.s1.push_back(std::stod(*it));
      for (auto it = bar + 1; it != toks.end() - 3; ++it) eq.s2.push_back(std::stod(*it));
      eq.payoff1 = std::stod(*(toks.end() - 3));
      eq.payoff2 = std::stod(*(toks.end() - 2));
      eq.pareto_optimal = std::stoi(*(toks.end() - 1)) != 0;
      s.equilibria.profiles.push_back(std::move(eq));
    } else if (tag == "incomplete") {
      int flag = 0;
      ls >> flag;
      s.equilibria.possibly_incomplete = flag != 0;
    } else {
      throw InvalidInputError("unknown solution line: " + line);
    }
  }
  if (maxmin_seen != 2) throw InvalidInputError("solution file missing maxmin lines");
  return s;
}

void save_solution(const SolutionFile& s, const std::string& path) {
  std::ostringstream ss;
  write_solution(s, ss);
  write_text_file(path, ss.str());
}

SolutionFile load_solution(const std::string& path) {
  std::istringstream ss(read_text_file(path));
  return read_solution(ss);
}

}  // namespace arena
