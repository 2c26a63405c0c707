#ifndef HSA_MULTIMAP_HPP
#define HSA_MULTIMAP_HPP

#include "hsa/graded.hpp"

#include <map>
#include <optional>

namespace hsa {

/// Sign of the graded-antisymmetric wedge: X_1^...^X_k = sign * X_{p(1)}^...^X_{p(k)}.
/// An adjacent transposition of degrees a,b contributes -(-1)^{ab}.
/// perm[i] = p(i+1)-1 (0-based); degrees[i] is the degree of X_{i+1}.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

/// Sorts a tuple into canonical order. Returns the sorted tuple and the wedge
/// sign of the sorting permutation; the sign is 0 when an even-degree element
/// repeats (the tuple then vanishes identically).
std::pair<std::vector<BasisElement>, int> canonicalize(std::vector<BasisElement> tuple);

/// All (i,j)-unshuffles of {0..i+j-1}: increasing on the first i and last j
/// slots, in lexicographic order of the first block. Count = C(i+j, i).
std::vector<std::vector<int>> unshuffles(int i, int j);

/// Graded-antisymmetric multilinear map of fixed arity and degree, stored as
/// exact coefficients on canonical input tuples. Domain and codomain may be
/// different spaces (morphism components use that).
class GradedMultiMap {
public:
  GradedMultiMap() = default;
  GradedMultiMap(int arity, int degree, GradedVectorSpace domain, GradedVectorSpace codomain);

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const GradedVectorSpace& domain() const { return domain_; }
  const GradedVectorSpace& codomain() const { return codomain_; }

  bool is_zero() const { return table_.empty(); }

  /// Adds value (with the canonicalization sign applied) into the entry for
  /// the canonicalized tuple. Ignores tuples that vanish identically.
  void accumulate(std::span<const BasisElement> tuple, const GradedVector& value);
  void accumulate(std::span<const BasisElement> tuple, const BasisElement& out, const Scalar& c);

  /// Value on a canonical tuple (nullptr when absent = zero).
  const GradedVector* find(std::span<const BasisElement> canonical_tuple) const;

  /// Value on an arbitrary basis tuple (canonicalization sign applied).
  GradedVector eval_basis(std::span<const BasisElement> tuple) const;

  /// Multilinear extension.
  GradedVector eval(std::span<const GradedVector> args) const;

  /// Deterministic iteration over stored entries (canonical tuple order).
  template <class F> void for_each(F&& f) const {
    for (const auto& [key, val] : table_) f(decode(key), val);
  }

  /// Checks stored shape: canonical keys inside the domain, outputs inside the
  /// codomain and homogeneous of (sum of input degrees) + degree. Throws
  /// input_error otherwise.
  void validate() const;

  friend bool operator==(const GradedMultiMap&, const GradedMultiMap&) = default;

private:
  static constexpr int kMaxArity = 4;
  using Key = std::array<int, kMaxArity>;

  Key encode(std::span<const BasisElement> canonical_tuple) const;
  std::vector<BasisElement> decode(const Key& k) const;

  int arity_ = 1;
  int degree_ = 0;
  GradedVectorSpace domain_, codomain_;
  std::map<Key, GradedVector> table_;
};

} // namespace hsa

#endif
