#ifndef ARENA_MATRIX_HPP_
#define ARENA_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace arena {

// Dense row-major matrix of doubles. Small games only; no linear algebra
// beyond element access lives here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(static_cast<int>(rows.size()),
             rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && v_ == other.v_;
  }

  const std::vector<double>& data() const { return v_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> v_;
};

}  // namespace arena

#endif  // ARENA_MATRIX_HPP_
