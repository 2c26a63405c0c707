#ifndef HSA_FORMAT_HPP
#define HSA_FORMAT_HPP

#include "hsa/constructions.hpp"

#include <optional>
#include <variant>

namespace hsa {

enum class Kind { LieN, Lie2, QuadLie2, Lwx2, Elwx2, Complex3, Morphism, BialgebraPair };

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& s);

/// Morphism data as stored in a file: component maps plus declared source and
/// target dimensions. Binding to actual algebras happens at check time.
struct MorphismFile {
  GradedVectorSpace source;
  GradedVectorSpace target;
  GradedMultiMap F1, F2, F3;
  friend bool operator==(const MorphismFile&, const MorphismFile&) = default;
};

/// A parsed structure-constants file.
struct StructureFile {
  Kind kind = Kind::LieN;
  std::variant<LieNAlgebra, QuadraticLie2, LWX2Algebra, ELWX2Algebra, ThreeTermComplex,
               MorphismFile, Lie2BialgebraPair>
      data;
  /// Degree-0 invariant form entries (`pairing S (0,i) (0,j)`) on a Lie
  /// algebra file; consumed by the string-lie2 builder.
  std::optional<QMatrix> form0;

  const LieNAlgebra& lie() const;
  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

/// Parse failure with a 1-based line number; what() starts with "line N:".
class parse_error : public input_error {
public:
  parse_error(int line, const std::string& msg)
      : input_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

StructureFile parse_structure(const std::string& text);
std::string serialize_structure(const StructureFile& f);

/// Runs the kind's checker (morphism kinds need a bound context, see
/// check_morphism_file). Complex files have nothing beyond well-formedness,
/// which parsing already enforced; they report pass.
CheckReport check_structure(const StructureFile& f);

/// Morphism check against a source Lie 2-algebra and either a strict Lie
/// 3-algebra target or (superconnection flavor) a 3-term complex.
CheckReport check_morphism_file(const MorphismFile& m, const LieNAlgebra& source,
                                const LieNAlgebra& target);
CheckReport check_superconnection_file(const MorphismFile& m, const LieNAlgebra& source,
                                       const ThreeTermComplex& c);

/// One build step (the CLI's `build` verbs): end-complex, higher-string,
/// double, elwx, derived-lie3, std-lwx, bialgebra-double, string-lie2,
/// quad-lie2, embed-lie3, hom-lie2, abelian-double, string-type.
StructureFile build_structure(const std::string& op, const StructureFile& in);
std::vector<std::string> build_ops();

} // namespace hsa

#endif
