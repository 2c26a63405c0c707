#ifndef HSA_LWX_HPP
#define HSA_LWX_HPP

#include "hsa/linfty.hpp"
#include "hsa/qmatrix.hpp"

#include <map>

namespace hsa {

/// One mixed-degree component of the Dorfman-type operation: a plain bilinear
/// table (no symmetry assumed), values in the ambient graded space.
class Bilinear {
public:
  void add(int i, int j, const GradedVector& v);
  const GradedVector* find(int i, int j) const;
  GradedVector value(int i, int j) const;
  bool is_zero() const { return table_.empty(); }
  template <class F> void for_each(F&& f) const {
    for (const auto& [k, v] : table_) f(k.first, k.second, v);
  }
  friend bool operator==(const Bilinear&, const Bilinear&) = default;

private:
  std::map<std::pair<int, int>, GradedVector> table_;
};

/// The operation diamond, split by degree: skew (0,0) part stored as a
/// graded-antisymmetric map, mixed parts as independent tables. The (-1,-1)
/// part vanishes for degree reasons.
struct Diamond {
  GradedMultiMap d00; // arity 2, degree 0, entries on (0,0)
  Bilinear d01;       // K0 x K-1 -> K-1
  Bilinear d10;       // K-1 x K0 -> K-1

  /// Bilinear extension on arbitrary K-vectors.
  GradedVector eval(const GradedVector& a, const GradedVector& b) const;
  friend bool operator==(const Diamond&, const Diamond&) = default;
};

/// Skew-symmetrization [[a,b]] = (a<>b - b<>a)/2.
GradedVector skew_bracket(const Diamond& d, const GradedVector& a, const GradedVector& b);

/// Frozen sign table of the Leibniz 2-algebra identity set used by axiom (i)
/// and (E1). These are the signs for which every construction in this library
/// (standard double of a Lie 2-algebra, doubles of Lie 3-algebras) satisfies
/// the axioms; they agree with the classical Chevalley-Eilenberg convention
/// (d alpha)(X,Y) = -alpha([X,Y]).
struct Leibniz2Signs {
  int jacobiator_rhs = +1; // x<>(y<>z) - (x<>y)<>z - y<>(x<>z) = +dOmega(x,y,z)
  int lowered_rhs = +1;    // ... = +Omega(x,y,da), +Omega(x,da,y), +Omega(da,x,y)
};
constexpr Leibniz2Signs kLeibniz2Signs{};

/// View of the data entering the Leibniz-2 identities.
struct Leibniz2View {
  const GradedVectorSpace* K = nullptr;
  const QMatrix* partial = nullptr; // dim K0 x dim K-1
  const Diamond* diamond = nullptr;
  const GradedMultiMap* omega = nullptr; // arity 3, degree -1
};

/// Checks L1-L3 (partial equivariance), J0-J3 (Jacobiator families) and C4
/// (the arity-4 coherence of Omega, in Loday-coboundary form) exhaustively on
/// basis tuples. Labels get the given prefix (e.g. "axiom-(i)").
CheckReport check_leibniz2(const Leibniz2View& v, const std::string& label_prefix);

/// LWX 2-algebra at a point: anchor and the induced D vanish.
struct LWX2Algebra {
  GradedVectorSpace K; // degrees 0, -1
  QMatrix partial;     // K-1 -> K0
  QMatrix S;           // S(e0_i, e1_j), scalar pairing
  Diamond diamond;
  GradedMultiMap omega;

  void validate() const; // shapes + nondegenerate S; throws input_error
  friend bool operator==(const LWX2Algebra&, const LWX2Algebra&) = default;
};

CheckReport check_lwx(const LWX2Algebra& a);

/// E-LWX 2-algebra at a point: E-valued pairing, anchor into End(E).
struct ELWX2Algebra {
  int dimE = 0;
  GradedVectorSpace K;
  QMatrix partial;
  std::vector<std::vector<QVector>> S; // S[i][j] in Q^dimE
  std::vector<QMatrix> rho;            // per K0 basis element, dimE x dimE
  Diamond diamond;
  GradedMultiMap omega;
  std::vector<GradedVector> D; // D(u) in K-1 per E basis; from compute_D

  void validate() const; // shapes, nondegeneracy, surjectivity of S
  QVector pair(const GradedVector& a, const GradedVector& b) const; // S on K-vectors
  QMatrix rho_of(const GradedVector& a) const;
  GradedVector D_of(const QVector& u) const;
  friend bool operator==(const ELWX2Algebra&, const ELWX2Algebra&) = default;
};

/// Solves S(D u, e0) = rho(e0)(u) for D on each basis vector of E; throws
/// input_error("degenerate pairing") when the system is unsolvable or not
/// unique. Stores the result into a.D and returns it.
std::vector<GradedVector>& compute_D(ELWX2Algebra& a);

CheckReport check_elwx(const ELWX2Algebra& a);

/// The totally skew T of the derived bracket table:
/// T = (S(e01,[[e02,e1]]) + S(e1,[[e01,e02]]) + S(e02,[[e1,e01]])) / 6.
QVector compute_T(const ELWX2Algebra& a, int e01, int e02, int e1);

/// The Lie 3-algebra on E + K-1 + K0 derived from an E-LWX 2-algebra.
/// Precondition: check_elwx passes (bypass with allow_invalid for mutation
/// experiments; the output is then only the canonicalized shadow).
LieNAlgebra derive_lie3_from_elwx(const ELWX2Algebra& a, bool allow_invalid = false);

} // namespace hsa

#endif
