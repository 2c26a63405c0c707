#ifndef HSA_CONSTRUCTIONS_HPP
#define HSA_CONSTRUCTIONS_HPP

#include "hsa/endcomplex.hpp"
#include "hsa/lwx.hpp"

namespace hsa {

/// Lie 2-algebra with a degree-1 invariant nondegenerate pairing of g_0 with
/// g_{-1}: S(l1 x1,y1)=S(l1 y1,x1), S(l2(x0,y0),z1)=-S(l2(x0,z1),y0),
/// S(l3(x0,y0,z0),u0)=-S(l3(x0,y0,u0),z0).
struct QuadraticLie2 {
  LieNAlgebra alg; // n = 2
  QMatrix S;       // S(e0_i, e1_j)
  friend bool operator==(const QuadraticLie2&, const QuadraticLie2&) = default;
};

/// Exhaustive check of the three invariance conditions plus nondegeneracy of
/// S (shape errors throw; a degenerate S is reported as a failure).
CheckReport check_quadratic(const QuadraticLie2& q);

/// g_0 = h, g_{-1} = h^*, l_1 = 0, l_2 = (bracket, coadjoint action), l_3 = 0,
/// S = canonical pairing.
QuadraticLie2 quad_lie2_from_lie_algebra(const LieNAlgebra& h);

/// String-type Lie 2-algebra of an invariant form: g_0 = h, g_{-1} = R,
/// l_3(x,y,z) = B([x,y],z).
LieNAlgebra string_lie2_from_quadratic_lie_algebra(const LieNAlgebra& h, const QMatrix& B);

/// The Lie 3-algebra on R + g_{-1} + g_0 attached to a quadratic Lie
/// 2-algebra: l3(x0,y0,z1) = S(z1,l2(x0,y0))/2, l4 = S(l3(.,.,.),.).
LieNAlgebra build_higher_string(const QuadraticLie2& q);

/// A Lie 2-algebra as a Lie 3-algebra with g_{-2} = R and every bracket
/// touching R equal to zero.
LieNAlgebra embed_lie2_as_lie3(const LieNAlgebra& g);

/// The E-LWX 2-algebra of a Lie 3-algebra g: E = g_{-2},
/// K_{-1} = Hom(g_0,g_{-2}) + g_{-1}, K_0 = Hom(g_{-1},g_{-2}) + g_0.
/// Hom parts come first in the index order; Hom(V,W) entries are
/// source-major (index = src*dimW + tgt).
ELWX2Algebra build_elwx_from_lie3(const LieNAlgebra& g, bool check = true);

/// The double of a Lie 3-algebra: direct transcription of the derived-table
/// formulas on g_{-2} + (Hom(g_0,g_{-2})+g_{-1}) + (Hom(g_{-1},g_{-2})+g_0).
/// Produces structure constants identical to
/// derive_lie3_from_elwx(build_elwx_from_lie3(g)).
LieNAlgebra lie3_double(const LieNAlgebra& g, bool check = true);

/// Independent oracle: the double of a 3-term complex viewed as an abelian
/// Lie 3-algebra, transcribed term by term from its explicit table.
LieNAlgebra abelian_lie3_double(const ThreeTermComplex& v);

/// Independent oracle: the double of an embedded Lie 2-algebra (the higher
/// string-type table with the coadjoint actions written out).
LieNAlgebra string_type_lie3_explicit(const LieNAlgebra& g);

/// Standard LWX 2-algebra of a Lie 2-algebra on (A_0+A_{-1}^*, A_{-1}+A_0^*).
/// delta_sign flips the frozen Chevalley-Eilenberg contraction sign; anything
/// but the default -1 deliberately breaks axiom (i) on nonabelian input.
LWX2Algebra build_std_lwx_from_lie2(const LieNAlgebra& g, int delta_sign = -1);

/// A Lie 2-algebra structure on (g_{-1}, g_0) and a second one on the shifted
/// dual (g_0^*, g_{-1}^*); compatibility is certified operationally by
/// check_lwx on the double.
struct Lie2BialgebraPair {
  LieNAlgebra primal;    // on (g_{-1}, g_0)
  LieNAlgebra dual_side; // on (g_0^*, g_{-1}^*): degree 0 part has dim(g_{-1})
  void validate() const;
  friend bool operator==(const Lie2BialgebraPair&, const Lie2BialgebraPair&) = default;
};

LWX2Algebra double_of_lie2_bialgebra(const Lie2BialgebraPair& p);

/// Strict Lie 2-algebra on Hom(B,C_{-1}) + Hom(B,C_0) from a complex
/// C_{-1} -> C_0 -> B (E_0 = B, pi0 = rho, pi1 = l1_C).
LieNAlgebra build_hom_lie2(const ThreeTermComplex& c);

} // namespace hsa

#endif
