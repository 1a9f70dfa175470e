#ifndef ARENA_LP_HPP_
#define ARENA_LP_HPP_

#include <stdexcept>
#include <vector>

namespace arena::lp {

// Numeric traits: the simplex below runs either in doubles (feasibility
// tolerance 1e-9) or in an exact rational type (tolerance 0).
template <class T>
struct Tolerance {
  static T value() { return T(0); }
};
template <>
struct Tolerance<double> {
  static double value() { return 1e-9; }
};

template <class T>
struct MaxminSolutionT {
  T value{};
  std::vector<T> strategy;
};

// Maxmin of the row player of an m x n payoff matrix U (row-major):
//   max over mixtures sigma of min over opponent pure columns of sigma'U.
//
// Solved through the classic zero-sum reduction: shift U positive, then solve
//   max 1'y  s.t.  U'y <= 1, y >= 0
// by primal simplex from the slack basis (no phase 1 needed). The duals read
// off the final objective row are the unnormalized maxmin mixture, and the
// optimal objective Z gives the shifted game value 1/Z.
//
// Pivoting uses Bland's rule (lowest-index entering column; ratio ties broken
// by lowest basic variable index), which cannot cycle.
template <class T>
MaxminSolutionT<T> maxmin(int m, int n, const std::vector<T>& u_row_major) {
  if (m < 1 || n < 1 || static_cast<int>(u_row_major.size()) != m * n)
    throw std::invalid_argument("maxmin: bad matrix shape");
  const T tol = Tolerance<T>::value();

  T lo = u_row_major[0];
  for (const T& x : u_row_major)
    if (x < lo) lo = x;
  const T shift = T(1) - lo;  // entries of U' lie in [1, ...)

  // Tableau: m rows, columns [0,n) structural y, [n,n+m) slacks, rhs separate.
  const int cols = n + m;
  std::vector<std::vector<T>> a(m, std::vector<T>(cols, T(0)));
  std::vector<T> rhs(m, T(1));
  std::vector<T> z(cols, T(0));  // reduced costs z_j - c_j
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = u_row_major[i * n + j] + shift;
    a[i][n + i] = T(1);
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) z[j] = T(-1);

  const long pivot_limit = 2000L + 50L * static_cast<long>(m + n) * (m + n);
  for (long pivots = 0;; ++pivots) {
    if (pivots > pivot_limit) throw std::runtime_error("maxmin: simplex pivot limit hit");

    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (z[j] < -tol) {
        enter = j;
        break;
      }
    if (enter < 0) break;  // optimal

    int leave = -1;
    T best_ratio = T(0);
    for (int i = 0; i < m; ++i) {
      if (a[i][enter] <= tol) continue;
      const T ratio = rhs[i] / a[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("maxmin: unbounded (matrix not positive?)");

    const T pivot = a[leave][enter];
    for (int j = 0; j < cols; ++j) a[leave][j] /= pivot;
    rhs[leave] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const T f = a[i][enter];
      if (f == T(0)) continue;
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const T fz = z[enter];
    if (fz != T(0))
      for (int j = 0; j < cols; ++j) z[j] -= fz * a[leave][j];
    basis[leave] = enter;
  }

  // Duals on the slack columns = unnormalized row mixture.
  MaxminSolutionT<T> out;
  out.strategy.assign(m, T(0));
  T total = T(0);
  for (int i = 0; i < m; ++i) {
    T xi = z[n + i];
    if (xi < T(0)) xi = T(0);  // clip float dust
    out.strategy[i] = xi;
    total += xi;
  }
  if (total == T(0)) throw std::runtime_error("maxmin: degenerate dual (zero mass)");
  for (int i = 0; i < m; ++i) out.strategy[i] /= total;
  out.value = T(1) / total - shift;
  return out;
}

}  // namespace arena::lp

#endif  // ARENA_LP_HPP_
