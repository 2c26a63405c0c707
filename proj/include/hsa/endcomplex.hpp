#ifndef HSA_ENDCOMPLEX_HPP
#define HSA_ENDCOMPLEX_HPP

#include "hsa/linfty.hpp"
#include "hsa/qmatrix.hpp"

#include <map>

namespace hsa {

/// 3-term complex E_{-2} -> E_{-1} -> E_0 with pi0 o pi1 = 0.
struct ThreeTermComplex {
  int dim0 = 0, dim1 = 0, dim2 = 0;
  QMatrix pi0; // dim0 x dim1
  QMatrix pi1; // dim1 x dim2

  ThreeTermComplex() = default;
  ThreeTermComplex(int d0, int d1, int d2)
      : dim0(d0), dim1(d1), dim2(d2), pi0(d0, d1), pi1(d1, d2) {}

  void validate() const;
  friend bool operator==(const ThreeTermComplex&, const ThreeTermComplex&) = default;
};

/// Degree-0 endomorphism triple; lives in dev_pi when it commutes with pi.
struct ChainOperator {
  QMatrix d0, d1, d2;
  bool chain(const ThreeTermComplex& c) const;
  friend bool operator==(const ChainOperator&, const ChainOperator&) = default;
};

/// Degree -1 part: (E0 -> E-1, E-1 -> E-2).
struct EndDeg1 {
  QMatrix t01; // dim1 x dim0
  QMatrix t12; // dim2 x dim1
  friend bool operator==(const EndDeg1&, const EndDeg1&) = default;
};

/// Degree -2 part: E0 -> E-2.
struct EndDeg2 {
  QMatrix t02; // dim2 x dim0
  friend bool operator==(const EndDeg2&, const EndDeg2&) = default;
};

/// d_M(theta^2) = pi o theta^2 - theta^2 o pi.
EndDeg1 d_M(const ThreeTermComplex& c, const EndDeg2& h);
/// d_M(theta^1) = pi o theta^1 + theta^1 o pi; lands in dev_pi.
ChainOperator d_M(const ThreeTermComplex& c, const EndDeg1& h);

/// Graded commutator family [.,.]_C: commutator when one side has degree 0,
/// anticommutator on two degree -1 elements; degree below -2 vanishes.
ChainOperator bracket_C(const ChainOperator& a, const ChainOperator& b);
EndDeg1 bracket_C(const ChainOperator& a, const EndDeg1& b);
EndDeg2 bracket_C(const ChainOperator& a, const EndDeg2& b);
EndDeg2 bracket_C(const EndDeg1& a, const EndDeg1& b);

/// Basis of the solution space of pi o d = d o pi, by rational elimination
/// with deterministic pivoting (unknown order: d0 row-major, then d1, d2).
std::vector<ChainOperator> dev_pi_basis(const ThreeTermComplex& c);

/// The strict Lie 3-algebra End^{-2} + End^{-1} + dev_pi of a complex,
/// together with the coordinate bookkeeping for its basis.
class EndLie3 {
public:
  explicit EndLie3(ThreeTermComplex c);

  const LieNAlgebra& algebra() const { return alg_; }
  const ThreeTermComplex& complex_() const { return c_; }
  const std::vector<ChainOperator>& deg0_basis() const { return dev_basis_; }

  /// Coordinates in the degree-0 basis; nullopt when not a chain operator
  /// (not in the span).
  std::optional<QVector> deg0_coords(const ChainOperator& op) const;
  GradedVector embed(const ChainOperator& op) const;
  GradedVector embed(const EndDeg1& h) const;
  GradedVector embed(const EndDeg2& h) const;

  /// Hom-coordinate layout of degree -1: Hom(E0,E-1) entries first
  /// (source-major), then Hom(E-1,E-2); degree -2 is Hom(E0,E-2).
  EndDeg1 deg1_from_vector(const GradedVector& v) const;
  EndDeg2 deg2_from_vector(const GradedVector& v) const;
  ChainOperator deg0_from_vector(const GradedVector& v) const;

private:
  ThreeTermComplex c_;
  std::vector<ChainOperator> dev_basis_;
  SpanSolver dev_solver_;
  LieNAlgebra alg_;
};

/// build_end_lie3: the algebra of Theorem-4.1 type for this complex.
inline LieNAlgebra build_end_lie3(const ThreeTermComplex& c) { return EndLie3(c).algebra(); }

/// Superconnection data of a Lie 2-algebra on a complex, in matrix form.
struct SuperconnectionData {
  std::vector<ChainOperator> F0;           // per A_0 basis element
  std::vector<EndDeg1> F1;                 // per A_{-1} basis element
  std::map<std::pair<int, int>, EndDeg1> F2_0; // canonical (i<j) A_0 pairs
  std::map<std::pair<int, int>, EndDeg2> F2_1; // (A_0 index, A_{-1} index)
  std::map<std::array<int, 3>, EndDeg2> F3;    // canonical A_0 triples
};

/// Flatness check: first the chain-map condition on every F0 value (failures
/// are reported under "superconnection" — a non-superconnection is rejected
/// before any morphism equation runs), then the morphism equations into the
/// End Lie 3-algebra.
CheckReport check_flat_superconnection(const LieNAlgebra& src, const ThreeTermComplex& c,
                                       const SuperconnectionData& F);

/// The adjoint superconnection of a strict Lie 2-algebra on its own complex
/// 0 -> A_{-1} -> A_0 (pi0 = l1): F0 = l2(x, .), F1 = l2(x1, .), F2 = F3 = 0.
std::pair<ThreeTermComplex, SuperconnectionData> adjoint_superconnection(const LieNAlgebra& g);

} // namespace hsa

#endif
