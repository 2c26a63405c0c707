#ifndef HSA_LINFTY_HPP
#define HSA_LINFTY_HPP

#include "hsa/multimap.hpp"

#include <functional>
#include <string>

namespace hsa {

struct CheckFailure {
  std::string identity;
  std::vector<BasisElement> inputs;
  GradedVector residual;
};

/// Outcome of an exact identity check. pass <=> failures empty; residuals are
/// the exact nonzero values, never rounded.
struct CheckReport {
  bool pass = true;
  std::vector<CheckFailure> failures;
  std::string note;

  void add(std::string identity, std::vector<BasisElement> inputs, GradedVector residual) {
    pass = false;
    failures.push_back({std::move(identity), std::move(inputs), std::move(residual)});
  }
  void merge(CheckReport other) {
    pass = pass && other.pass;
    for (auto& f : other.failures) failures.push_back(std::move(f));
    if (note.empty()) note = std::move(other.note);
  }
};

/// Lie n-algebra (n <= 3) on a graded space in degrees 0..-(n-1); brackets
/// l_1..l_{n+1} of arity i and degree 2-i. The anchor vanishes (point base),
/// so no Leibniz-rule data exists.
class LieNAlgebra {
public:
  LieNAlgebra() = default;
  LieNAlgebra(int n, GradedVectorSpace space);

  int n() const { return n_; }
  const GradedVectorSpace& space() const { return space_; }

  GradedMultiMap& l(int i) { return l_.at(i - 1); }
  const GradedMultiMap& l(int i) const { return l_.at(i - 1); }
  int max_bracket() const { return n_ + 1; }

  /// l_3 and l_4 (where present) vanish.
  bool is_strict() const;

  /// Shape check: bracket arities/degrees, grading of outputs, degrees used
  /// within 0..-(n-1). Throws input_error on violation.
  void validate() const;

  friend bool operator==(const LieNAlgebra&, const LieNAlgebra&) = default;

private:
  int n_ = 1;
  GradedVectorSpace space_;
  std::array<GradedMultiMap, 4> l_;
};

/// The k-th generalized Jacobi expression
///   sum_{i+j=k+1} (-1)^{i(j-1)} sum_{unshuffles} sgn*Ksgn * l_j(l_i(...),...)
/// evaluated exactly on the given inputs. The per-unshuffle coefficient
/// sgn(s)*Ksgn(s) is koszul_sign in the wedge convention of this library.
GradedVector jacobi_identity(const LieNAlgebra& alg, int k, std::span<const BasisElement> inputs);

/// Exhaustive check of all degree-admissible identities (k = 1..n+2) over all
/// canonical basis tuples; k = 1 is the chain condition l1(l1(x)) = 0.
CheckReport check_lie_n(const LieNAlgebra& alg);

/// As check_lie_n but for one fixed k and without the degree-count filter;
/// used to confirm that out-of-range identities vanish identically.
CheckReport check_jacobi_arity(const LieNAlgebra& alg, int k);

/// Morphism from a Lie 2-algebra to a strict Lie 3-algebra, stored as the
/// three aggregated components: F1 (arity 1, degree 0; F^0 on degree 0 and
/// F^1 on degree -1), F2 (arity 2, degree -1; F^2_0 on (0,0) and F^2_1 on
/// (0,-1)), F3 (arity 3, degree -2).
struct MorphismData {
  const LieNAlgebra* source = nullptr; // n = 2
  const LieNAlgebra* target = nullptr; // n = 3, strict
  GradedMultiMap F1, F2, F3;

  static MorphismData zero(const LieNAlgebra& src, const LieNAlgebra& tgt);
  void validate() const;
};

/// Checks the eight defining equations (the anchor one degenerates at a
/// point) on every canonical source tuple. When equation 8 is the sole
/// failure the report carries a note: that equation's cyclic-sum reading
/// follows the standard L-infinity morphism expansion and other readings of
/// the displayed sum exist.
CheckReport check_morphism(const MorphismData& m);

/// Covector: sparse coefficients on the dual basis of one degree of a space.
struct Covector {
  int degree = 0; // degree of the space being dualized
  std::vector<std::pair<int, Scalar>> coeffs;

  void add(int index, const Scalar& c);
  Scalar coeff(int index) const;
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const Covector&, const Covector&) = default;
};

enum class CoadjointKind { L0, L1, L3 };

/// Coadjoint actions of a Lie 2-algebra on dual spaces (anchor = 0):
///   <L0_X a, Y> = -<a, l2(X,Y)>   (a in A_0^* or A_{-1}^*, X in A_0)
///   <L1_X1 a1, Y0> = -<a1, l2(X1,Y0)>
///   <L3_{X0,Y0} a1, Z0> = -<a1, l3(X0,Y0,Z0)>
Covector coadjoint_L0(const LieNAlgebra& g, int actor0, const Covector& alpha);
Covector coadjoint_L1(const LieNAlgebra& g, int actor1, const Covector& alpha1);
Covector coadjoint_L3(const LieNAlgebra& g, int a0, int b0, const Covector& alpha1);

/// Dispatcher form; actors are basis indices of the kind's required degrees.
Covector coadjoint(CoadjointKind kind, const LieNAlgebra& g, std::span<const int> actors,
                   const Covector& alpha);

} // namespace hsa

#endif
