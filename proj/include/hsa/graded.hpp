#ifndef HSA_GRADED_HPP
#define HSA_GRADED_HPP

#include "hsa/scalar.hpp"

#include <array>
#include <span>
#include <vector>

namespace hsa {

/// Degrees live in {0, -1, -2}. Anything else is rejected at construction.
constexpr int kMinDegree = -2;

inline bool degree_ok(int d) { return d <= 0 && d >= kMinDegree; }

/// Parity for Koszul signs; degree -1 is the odd one.
inline bool degree_odd(int d) { return (d & 1) != 0; }

struct BasisElement {
  int degree = 0;
  int index = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Canonical order: degree descending (0 before -1 before -2), index ascending.
inline bool canonical_less(const BasisElement& a, const BasisElement& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.index < b.index;
}

std::string to_string(const BasisElement& b);

class GradedVectorSpace {
public:
  GradedVectorSpace() = default;
  /// dims in degree order 0, -1, -2.
  GradedVectorSpace(int d0, int d1, int d2 = 0);

  int dim(int degree) const;
  void set_dim(int degree, int d);
  int total_dim() const { return dims_[0] + dims_[1] + dims_[2]; }
  bool contains(const BasisElement& b) const {
    return degree_ok(b.degree) && b.index >= 0 && b.index < dim(b.degree);
  }
  /// Lowest degree with nonzero dimension (0 for the zero space).
  int min_degree() const;

  /// Ordinal of a basis element in canonical order (degree 0 block first).
  int ordinal(const BasisElement& b) const;
  BasisElement from_ordinal(int ord) const;
  std::vector<BasisElement> basis() const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

private:
  std::array<int, 3> dims_{0, 0, 0}; // dims_[k] = dim of degree -k
};

/// Sparse vector with exact coefficients; terms sorted canonically, zeros
/// dropped eagerly.
class GradedVector {
public:
  GradedVector() = default;

  static GradedVector basis(const BasisElement& b, Scalar c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void clear() { terms_.clear(); }

  /// this += c * e_b
  void add(const BasisElement& b, const Scalar& c);
  /// this += c * v
  void axpy(const Scalar& c, const GradedVector& v);
  GradedVector& operator+=(const GradedVector& v);
  GradedVector& operator-=(const GradedVector& v);
  GradedVector& operator*=(const Scalar& c);

  Scalar coeff(const BasisElement& b) const;

  /// True iff all terms share one degree; a zero vector is homogeneous of any
  /// degree and reports true without touching *degree_out.
  bool homogeneous(int* degree_out = nullptr) const;

  std::span<const std::pair<BasisElement, Scalar>> terms() const& { return terms_; }
  /// Rvalue form hands the storage over, so ranging over a temporary's terms
  /// is safe.
  std::vector<std::pair<BasisElement, Scalar>> terms() && { return std::move(terms_); }

  friend bool operator==(const GradedVector&, const GradedVector&) = default;

private:
  std::vector<std::pair<BasisElement, Scalar>> terms_;
};

std::string to_string(const GradedVector& v);

} // namespace hsa

#endif
