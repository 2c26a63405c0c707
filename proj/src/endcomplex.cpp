#include "hsa/endcomplex.hpp"

namespace hsa {

void ThreeTermComplex::validate() const {
  if (dim0 < 0 || dim1 < 0 || dim2 < 0) throw input_error("complex with negative dimension");
  if (pi0.rows() != dim0 || pi0.cols() != dim1 || pi1.rows() != dim1 || pi1.cols() != dim2)
    throw input_error("complex map shape mismatch");
  if (!(pi0 * pi1).is_zero()) throw input_error("complex maps do not compose to zero");
}

bool ChainOperator::chain(const ThreeTermComplex& c) const {
  return d0 * c.pi0 == c.pi0 * d1 && d1 * c.pi1 == c.pi1 * d2;
}

EndDeg1 d_M(const ThreeTermComplex& c, const EndDeg2& h) {
  return {c.pi1 * h.t02, (h.t02 * c.pi0).scaled(rat(-1))};
}

ChainOperator d_M(const ThreeTermComplex& c, const EndDeg1& h) {
  return {c.pi0 * h.t01, c.pi1 * h.t12 + h.t01 * c.pi0, h.t12 * c.pi1};
}

ChainOperator bracket_C(const ChainOperator& a, const ChainOperator& b) {
  return {a.d0 * b.d0 - b.d0 * a.d0, a.d1 * b.d1 - b.d1 * a.d1, a.d2 * b.d2 - b.d2 * a.d2};
}

EndDeg1 bracket_C(const ChainOperator& a, const EndDeg1& b) {
  return {a.d1 * b.t01 - b.t01 * a.d0, a.d2 * b.t12 - b.t12 * a.d1};
}

EndDeg2 bracket_C(const ChainOperator& a, const EndDeg2& b) {
  return {a.d2 * b.t02 - b.t02 * a.d0};
}

EndDeg2 bracket_C(const EndDeg1& a, const EndDeg1& b) {
  return {a.t12 * b.t01 + b.t12 * a.t01};
}

std::vector<ChainOperator> dev_pi_basis(const ThreeTermComplex& c) {
  c.validate();
  const int n0 = c.dim0, n1 = c.dim1, n2 = c.dim2;
  const int vars = n0 * n0 + n1 * n1 + n2 * n2;
  const int eqs = n0 * n1 + n1 * n2;
  // unknown order: d0 row-major, then d1, then d2
  auto v0 = [&](int r, int col) { return r * n0 + col; };
  auto v1 = [&](int r, int col) { return n0 * n0 + r * n1 + col; };
  auto v2 = [&](int r, int col) { return n0 * n0 + n1 * n1 + r * n2 + col; };
  QMatrix A(eqs, vars);
  int e = 0;
  // d0*pi0 - pi0*d1 = 0 : rows n0, cols n1
  for (int r = 0; r < n0; ++r)
    for (int col = 0; col < n1; ++col, ++e) {
      for (int k = 0; k < n0; ++k) A.at(e, v0(r, k)) += c.pi0.at(k, col);
      for (int k = 0; k < n1; ++k) A.at(e, v1(k, col)) -= c.pi0.at(r, k);
    }
  // d1*pi1 - pi1*d2 = 0 : rows n1, cols n2
  for (int r = 0; r < n1; ++r)
    for (int col = 0; col < n2; ++col, ++e) {
      for (int k = 0; k < n1; ++k) A.at(e, v1(r, k)) += c.pi1.at(k, col);
      for (int k = 0; k < n2; ++k) A.at(e, v2(k, col)) -= c.pi1.at(r, k);
    }
  std::vector<ChainOperator> basis;
  for (const QVector& x : kernel_basis(A)) {
    ChainOperator op{QMatrix(n0, n0), QMatrix(n1, n1), QMatrix(n2, n2)};
    for (int r = 0; r < n0; ++r)
      for (int col = 0; col < n0; ++col) op.d0.at(r, col) = x[v0(r, col)];
    for (int r = 0; r < n1; ++r)
      for (int col = 0; col < n1; ++col) op.d1.at(r, col) = x[v1(r, col)];
    for (int r = 0; r < n2; ++r)
      for (int col = 0; col < n2; ++col) op.d2.at(r, col) = x[v2(r, col)];
    basis.push_back(std::move(op));
  }
  return basis;
}

namespace {

QVector flatten(const ChainOperator& op) {
  QVector v;
  auto push = [&](const QMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  };
  push(op.d0);
  push(op.d1);
  push(op.d2);
  return v;
}

QMatrix columns_of(const std::vector<ChainOperator>& ops, int rows) {
  QMatrix m(rows, int(ops.size()));
  for (int j = 0; j < int(ops.size()); ++j) {
    QVector v = flatten(ops[j]);
    for (int r = 0; r < rows; ++r) m.at(r, j) = v[r];
  }
  return m;
}

} // namespace

EndLie3::EndLie3(ThreeTermComplex c)
    : c_(std::move(c)), dev_basis_(dev_pi_basis(c_)),
      dev_solver_(columns_of(dev_basis_, c_.dim0 * c_.dim0 + c_.dim1 * c_.dim1 + c_.dim2 * c_.dim2)) {
  const int n0 = c_.dim0, n1 = c_.dim1, n2 = c_.dim2;
  const int h1 = n0 * n1 + n1 * n2; // Hom(E0,E-1) then Hom(E-1,E-2)
  const int h2 = n0 * n2;
  alg_ = LieNAlgebra(3, GradedVectorSpace(int(dev_basis_.size()), h1, h2));

  auto deg1_basis = [&](int idx) {
    EndDeg1 h{QMatrix(n1, n0), QMatrix(n2, n1)};
    if (idx < n0 * n1)
      h.t01.at(idx % n1, idx / n1) = 1; // source-major: idx = src*n1 + tgt
    else {
      int k = idx - n0 * n1;
      h.t12.at(k % n2, k / n2) = 1;
    }
    return h;
  };
  auto deg2_basis = [&](int idx) {
    EndDeg2 h{QMatrix(n2, n0)};
    h.t02.at(idx % n2, idx / n2) = 1;
    return h;
  };

  // l1 = d_M on degrees -1 and -2 (zero on dev_pi)
  for (int i = 0; i < h1; ++i) {
    BasisElement b{-1, i};
    alg_.l(1).accumulate(std::span(&b, 1), embed(d_M(c_, deg1_basis(i))));
  }
  for (int i = 0; i < h2; ++i) {
    BasisElement b{-2, i};
    alg_.l(1).accumulate(std::span(&b, 1), embed(d_M(c_, deg2_basis(i))));
  }
  // l2 = [.,.]_C on all canonical pairs
  const int nd = int(dev_basis_.size());
  for (int i = 0; i < nd; ++i) {
    for (int j = i + 1; j < nd; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      alg_.l(2).accumulate(t, embed(bracket_C(dev_basis_[i], dev_basis_[j])));
    }
    for (int j = 0; j < h1; ++j) {
      BasisElement t[2] = {{0, i}, {-1, j}};
      alg_.l(2).accumulate(t, embed(bracket_C(dev_basis_[i], deg1_basis(j))));
    }
    for (int j = 0; j < h2; ++j) {
      BasisElement t[2] = {{0, i}, {-2, j}};
      alg_.l(2).accumulate(t, embed(bracket_C(dev_basis_[i], deg2_basis(j))));
    }
  }
  for (int i = 0; i < h1; ++i)
    for (int j = i; j < h1; ++j) {
      BasisElement t[2] = {{-1, i}, {-1, j}};
      alg_.l(2).accumulate(t, embed(bracket_C(deg1_basis(i), deg1_basis(j))));
    }
}

std::optional<QVector> EndLie3::deg0_coords(const ChainOperator& op) const {
  if (!op.chain(c_)) return std::nullopt;
  return dev_solver_.coords(flatten(op));
}

GradedVector EndLie3::embed(const ChainOperator& op) const {
  auto coords = deg0_coords(op);
  if (!coords) throw input_error("operator is not in dev_pi");
  GradedVector v;
  for (int j = 0; j < int(coords->size()); ++j) v.add({0, j}, (*coords)[j]);
  return v;
}

GradedVector EndLie3::embed(const EndDeg1& h) const {
  GradedVector v;
  const int n1 = c_.dim1, n2 = c_.dim2;
  for (int s = 0; s < c_.dim0; ++s)
    for (int t = 0; t < n1; ++t) v.add({-1, s * n1 + t}, h.t01.at(t, s));
  for (int s = 0; s < n1; ++s)
    for (int t = 0; t < n2; ++t) v.add({-1, c_.dim0 * n1 + s * n2 + t}, h.t12.at(t, s));
  return v;
}

GradedVector EndLie3::embed(const EndDeg2& h) const {
  GradedVector v;
  for (int s = 0; s < c_.dim0; ++s)
    for (int t = 0; t < c_.dim2; ++t) v.add({-2, s * c_.dim2 + t}, h.t02.at(t, s));
  return v;
}

EndDeg1 EndLie3::deg1_from_vector(const GradedVector& v) const {
  EndDeg1 h{QMatrix(c_.dim1, c_.dim0), QMatrix(c_.dim2, c_.dim1)};
  for (const auto& [b, q] : v.terms()) {
    if (b.degree != -1) throw input_error("vector not of degree -1");
    if (b.index < c_.dim0 * c_.dim1)
      h.t01.at(b.index % c_.dim1, b.index / c_.dim1) = q;
    else {
      int k = b.index - c_.dim0 * c_.dim1;
      h.t12.at(k % c_.dim2, k / c_.dim2) = q;
    }
  }
  return h;
}

EndDeg2 EndLie3::deg2_from_vector(const GradedVector& v) const {
  EndDeg2 h{QMatrix(c_.dim2, c_.dim0)};
  for (const auto& [b, q] : v.terms()) {
    if (b.degree != -2) throw input_error("vector not of degree -2");
    h.t02.at(b.index % c_.dim2, b.index / c_.dim2) = q;
  }
  return h;
}

ChainOperator EndLie3::deg0_from_vector(const GradedVector& v) const {
  ChainOperator op{QMatrix(c_.dim0, c_.dim0), QMatrix(c_.dim1, c_.dim1), QMatrix(c_.dim2, c_.dim2)};
  for (const auto& [b, q] : v.terms()) {
    if (b.degree != 0) throw input_error("vector not of degree 0");
    op.d0 = op.d0 + dev_basis_[b.index].d0.scaled(q);
    op.d1 = op.d1 + dev_basis_[b.index].d1.scaled(q);
    op.d2 = op.d2 + dev_basis_[b.index].d2.scaled(q);
  }
  return op;
}

CheckReport check_flat_superconnection(const LieNAlgebra& src, const ThreeTermComplex& c,
                                       const SuperconnectionData& F) {
  if (src.n() != 2) throw input_error("superconnection source must be a Lie 2-algebra");
  const int d0 = src.space().dim(0), d1 = src.space().dim(-1);
  if (int(F.F0.size()) != d0 || int(F.F1.size()) != d1)
    throw input_error("superconnection component count mismatch");

  EndLie3 end(c);
  CheckReport report;
  for (int i = 0; i < d0; ++i)
    if (!F.F0[i].chain(c)) {
      CheckFailure f;
      f.identity = "superconnection";
      f.inputs = {{0, i}};
      report.pass = false;
      report.failures.push_back(std::move(f));
    }
  if (!report.pass) {
    report.note = "F0 image violates the chain-map condition: not a superconnection";
    return report;
  }

  MorphismData m = MorphismData::zero(src, end.algebra());
  for (int i = 0; i < d0; ++i) {
    BasisElement b{0, i};
    m.F1.accumulate(std::span(&b, 1), end.embed(F.F0[i]));
  }
  for (int i = 0; i < d1; ++i) {
    BasisElement b{-1, i};
    m.F1.accumulate(std::span(&b, 1), end.embed(F.F1[i]));
  }
  for (const auto& [ij, h] : F.F2_0) {
    BasisElement t[2] = {{0, ij.first}, {0, ij.second}};
    m.F2.accumulate(t, end.embed(h));
  }
  for (const auto& [ij, h] : F.F2_1) {
    BasisElement t[2] = {{0, ij.first}, {-1, ij.second}};
    m.F2.accumulate(t, end.embed(h));
  }
  for (const auto& [ijk, h] : F.F3) {
    BasisElement t[3] = {{0, ijk[0]}, {0, ijk[1]}, {0, ijk[2]}};
    m.F3.accumulate(t, end.embed(h));
  }
  report.merge(check_morphism(m));
  return report;
}

std::pair<ThreeTermComplex, SuperconnectionData> adjoint_superconnection(const LieNAlgebra& g) {
  if (g.n() != 2) throw input_error("adjoint superconnection needs a Lie 2-algebra");
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1);
  ThreeTermComplex c(d0, d1, 0);
  for (int j = 0; j < d1; ++j) {
    BasisElement b{-1, j};
    GradedVector v = g.l(1).eval_basis(std::span(&b, 1));
    for (const auto& [e, q] : v.terms()) c.pi0.at(e.index, j) = q;
  }
  SuperconnectionData F;
  for (int i = 0; i < d0; ++i) {
    ChainOperator op{QMatrix(d0, d0), QMatrix(d1, d1), QMatrix(0, 0)};
    for (int j = 0; j < d0; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      for (const auto& [e, q] : g.l(2).eval_basis(t).terms()) op.d0.at(e.index, j) = q;
    }
    for (int j = 0; j < d1; ++j) {
      BasisElement t[2] = {{0, i}, {-1, j}};
      for (const auto& [e, q] : g.l(2).eval_basis(t).terms()) op.d1.at(e.index, j) = q;
    }
    F.F0.push_back(std::move(op));
  }
  for (int i = 0; i < d1; ++i) {
    EndDeg1 h{QMatrix(d1, d0), QMatrix(0, d1)};
    for (int j = 0; j < d0; ++j) {
      BasisElement t[2] = {{-1, i}, {0, j}};
      for (const auto& [e, q] : g.l(2).eval_basis(t).terms()) h.t01.at(e.index, j) = q;
    }
    F.F1.push_back(std::move(h));
  }
  return {std::move(c), std::move(F)};
}

} // namespace hsa
