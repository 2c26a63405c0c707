#ifndef HSA_GALLERY_HPP
#define HSA_GALLERY_HPP

#include "hsa/format.hpp"

namespace hsa {

/// Names of the shipped example structures, in emission order.
std::vector<std::string> gallery_names();

/// The named structure; throws input_error for unknown names.
StructureFile gallery_structure(const std::string& name);

/// Serialized form of the named structure.
std::string gallery_emit(const std::string& name);

// building blocks used by the gallery and the test suites
LieNAlgebra make_sl2();
LieNAlgebra make_so3();
LieNAlgebra make_aff2();
/// h semidirect h^* with the coadjoint action; quadratic via the canonical
/// pairing B(x+a, y+b) = a(y) + b(x).
std::pair<LieNAlgebra, QMatrix> make_semidirect_coadjoint(const LieNAlgebra& h);
/// Killing-type invariant forms used by the string examples.
QMatrix sl2_trace_form();
QMatrix so3_identity_form();
/// Strict Lie 2-algebra on dims (2,1): l1(m)=e2, l2(e1,e2)=e2, l2(e1,m)=m.
LieNAlgebra make_strict2();
/// Complexes with a canonical differential; dims given by degree (d0,d1,d2).
ThreeTermComplex make_complex(int d0, int d1, int d2);
/// A complex viewed as an abelian Lie 3-algebra (l1 = the differential).
LieNAlgebra abelian_lie3(const ThreeTermComplex& c);

} // namespace hsa

#endif
