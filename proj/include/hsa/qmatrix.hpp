#ifndef HSA_QMATRIX_HPP
#define HSA_QMATRIX_HPP

#include "hsa/scalar.hpp"

#include <optional>
#include <vector>

namespace hsa {

using QVector = std::vector<Scalar>;

/// Dense rational matrix; the sizes here are tiny (tens of rows).
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Scalar(0)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Scalar& c) const;
  QMatrix transpose() const;
  QVector apply(const QVector& v) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero entry
/// scanning columns left to right, rows top to bottom).
struct Rref {
  QMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Rref rref(QMatrix m);

/// Basis of the nullspace, one vector per free column in ascending column
/// order; the free coordinate is set to 1.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Solves A x = b. Returns the solution only when it exists and is unique.
std::optional<QVector> solve_unique(const QMatrix& A, const QVector& b);

/// Coordinates of vectors in the span of a fixed column family.
class SpanSolver {
public:
  explicit SpanSolver(QMatrix columns);
  /// Coefficients c with columns * c = v, when v lies in the span (the family
  /// is assumed independent, as produced by kernel_basis).
  std::optional<QVector> coords(const QVector& v) const;

private:
  QMatrix cols_;
  Rref rref_;
};

int rank(const QMatrix& m);
bool invertible(const QMatrix& m);

} // namespace hsa

#endif
