#include "hsa/qmatrix.hpp"

namespace hsa {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& q : a_)
    if (!hsa::is_zero(q)) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& f = at(i, k);
      if (hsa::is_zero(f)) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += f * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix difference shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::scaled(const Scalar& c) const {
  QMatrix r = *this;
  for (auto& q : r.a_) q *= c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVector QMatrix::apply(const QVector& v) const {
  if (int(v.size()) != cols_) throw input_error("matrix apply shape mismatch");
  QVector r(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!hsa::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
  return r;
}

Rref rref(QMatrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      Scalar f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.mat = std::move(m);
  return out;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : r.pivot_cols) is_pivot[c] = 1;
  std::vector<QVector> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (int p = 0; p < r.rank; ++p) v[r.pivot_cols[p]] = -r.mat.at(p, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVector> solve_unique(const QMatrix& A, const QVector& b) {
  if (int(b.size()) != A.rows()) throw input_error("solve shape mismatch");
  QMatrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  // inconsistent when the last column is a pivot
  for (int c : r.pivot_cols)
    if (c == A.cols()) return std::nullopt;
  if (r.rank != A.cols()) return std::nullopt; // free variables: not unique
  QVector x(A.cols(), Scalar(0));
  for (int p = 0; p < r.rank; ++p) x[r.pivot_cols[p]] = r.mat.at(p, A.cols());
  return x;
}

SpanSolver::SpanSolver(QMatrix columns) : cols_(std::move(columns)), rref_(rref(cols_)) {}

std::optional<QVector> SpanSolver::coords(const QVector& v) const {
  if (int(v.size()) != cols_.rows()) throw input_error("coords shape mismatch");
  QMatrix aug(cols_.rows(), cols_.cols() + 1);
  for (int i = 0; i < cols_.rows(); ++i) {
    for (int j = 0; j < cols_.cols(); ++j) aug.at(i, j) = cols_.at(i, j);
    aug.at(i, cols_.cols()) = v[i];
  }
  Rref r = rref(std::move(aug));
  for (int c : r.pivot_cols)
    if (c == cols_.cols()) return std::nullopt;
  QVector x(cols_.cols(), Scalar(0));
  for (int p = 0; p < int(r.pivot_cols.size()); ++p)
    x[r.pivot_cols[p]] = r.mat.at(p, cols_.cols());
  return x;
}

int rank(const QMatrix& m) { return rref(m).rank; }

bool invertible(const QMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

} // namespace hsa
