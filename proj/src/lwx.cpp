#include "hsa/lwx.hpp"

namespace hsa {

void Bilinear::add(int i, int j, const GradedVector& v) {
  if (v.is_zero()) return;
  auto& slot = table_[{i, j}];
  slot += v;
  if (slot.is_zero()) table_.erase({i, j});
}

const GradedVector* Bilinear::find(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

GradedVector Bilinear::value(int i, int j) const {
  if (const GradedVector* v = find(i, j)) return *v;
  return {};
}

GradedVector Diamond::eval(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [ba, qa] : a.terms())
    for (const auto& [bb, qb] : b.terms()) {
      if (ba.degree == 0 && bb.degree == 0) {
        BasisElement t[2] = {ba, bb};
        out.axpy(qa * qb, d00.eval_basis(t));
      } else if (ba.degree == 0 && bb.degree == -1) {
        if (const GradedVector* v = d01.find(ba.index, bb.index)) out.axpy(qa * qb, *v);
      } else if (ba.degree == -1 && bb.degree == 0) {
        if (const GradedVector* v = d10.find(ba.index, bb.index)) out.axpy(qa * qb, *v);
      }
      // (-1,-1) lands below degree -1 and vanishes
    }
  return out;
}

GradedVector skew_bracket(const Diamond& d, const GradedVector& a, const GradedVector& b) {
  GradedVector out = d.eval(a, b);
  out -= d.eval(b, a);
  out *= rat(1, 2);
  return out;
}

namespace {

GradedVector apply_partial(const QMatrix& partial, const GradedVector& v) {
  GradedVector out;
  for (const auto& [b, q] : v.terms()) {
    if (b.degree != -1) continue;
    for (int k = 0; k < partial.rows(); ++k) out.add({0, k}, q * partial.at(k, b.index));
  }
  return out;
}

GradedVector omega3(const GradedMultiMap& omega, const GradedVector& a, const GradedVector& b,
                    const GradedVector& c) {
  std::array<GradedVector, 3> args{a, b, c};
  return omega.eval(args);
}

} // namespace

CheckReport check_leibniz2(const Leibniz2View& v, const std::string& prefix) {
  CheckReport report;
  const int n0 = v.K->dim(0), n1 = v.K->dim(-1);
  const QMatrix& P = *v.partial;
  const Diamond& D = *v.diamond;
  auto e0 = [](int i) { return GradedVector::basis({0, i}); };
  auto e1 = [](int i) { return GradedVector::basis({-1, i}); };
  auto de1 = [&](int i) { return apply_partial(P, e1(i)); };

  // L1: partial(x<>a) = x<>(partial a)
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a) {
      GradedVector r = apply_partial(P, D.eval(e0(x), e1(a)));
      r -= D.eval(e0(x), de1(a));
      if (!r.is_zero()) report.add(prefix + "-L1", {{0, x}, {-1, a}}, std::move(r));
    }
  // L2: partial(a<>x) = (partial a)<>x
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n0; ++x) {
      GradedVector r = apply_partial(P, D.eval(e1(a), e0(x)));
      r -= D.eval(de1(a), e0(x));
      if (!r.is_zero()) report.add(prefix + "-L2", {{-1, a}, {0, x}}, std::move(r));
    }
  // L3: (partial a)<>b = a<>(partial b)
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      GradedVector r = D.eval(de1(a), e1(b));
      r -= D.eval(e1(a), de1(b));
      if (!r.is_zero()) report.add(prefix + "-L3", {{-1, a}, {-1, b}}, std::move(r));
    }
  const Scalar j_rhs = rat(kLeibniz2Signs.jacobiator_rhs);
  const Scalar low_rhs = rat(kLeibniz2Signs.lowered_rhs);
  // J0: x<>(y<>z) - (x<>y)<>z - y<>(x<>z) = partial Omega(x,y,z)
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z) {
        GradedVector r = D.eval(e0(x), D.eval(e0(y), e0(z)));
        r -= D.eval(D.eval(e0(x), e0(y)), e0(z));
        r -= D.eval(e0(y), D.eval(e0(x), e0(z)));
        r.axpy(-j_rhs, apply_partial(P, omega3(*v.omega, e0(x), e0(y), e0(z))));
        if (!r.is_zero()) report.add(prefix + "-J0", {{0, x}, {0, y}, {0, z}}, std::move(r));
      }
  // J1: x<>(y<>a) - (x<>y)<>a - y<>(x<>a) = Omega(x,y,partial a)
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int a = 0; a < n1; ++a) {
        GradedVector r = D.eval(e0(x), D.eval(e0(y), e1(a)));
        r -= D.eval(D.eval(e0(x), e0(y)), e1(a));
        r -= D.eval(e0(y), D.eval(e0(x), e1(a)));
        r.axpy(-low_rhs, omega3(*v.omega, e0(x), e0(y), de1(a)));
        if (!r.is_zero()) report.add(prefix + "-J1", {{0, x}, {0, y}, {-1, a}}, std::move(r));
      }
  // J2: x<>(a<>y) - (x<>a)<>y - a<>(x<>y) = Omega(x,partial a,y)
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a)
      for (int y = 0; y < n0; ++y) {
        GradedVector r = D.eval(e0(x), D.eval(e1(a), e0(y)));
        r -= D.eval(D.eval(e0(x), e1(a)), e0(y));
        r -= D.eval(e1(a), D.eval(e0(x), e0(y)));
        r.axpy(-low_rhs, omega3(*v.omega, e0(x), de1(a), e0(y)));
        if (!r.is_zero()) report.add(prefix + "-J2", {{0, x}, {-1, a}, {0, y}}, std::move(r));
      }
  // J3: a<>(x<>y) - (a<>x)<>y - x<>(a<>y) = Omega(partial a,x,y)
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n0; ++x)
      for (int y = 0; y < n0; ++y) {
        GradedVector r = D.eval(e1(a), D.eval(e0(x), e0(y)));
        r -= D.eval(D.eval(e1(a), e0(x)), e0(y));
        r -= D.eval(e0(x), D.eval(e1(a), e0(y)));
        r.axpy(-low_rhs, omega3(*v.omega, de1(a), e0(x), e0(y)));
        if (!r.is_zero()) report.add(prefix + "-J3", {{-1, a}, {0, x}, {0, y}}, std::move(r));
      }
  // C4 (Loday coboundary of Omega):
  for (int x1 = 0; x1 < n0; ++x1)
    for (int x2 = 0; x2 < n0; ++x2)
      for (int x3 = 0; x3 < n0; ++x3)
        for (int x4 = 0; x4 < n0; ++x4) {
          GradedVector r = D.eval(e0(x1), omega3(*v.omega, e0(x2), e0(x3), e0(x4)));
          r -= D.eval(e0(x2), omega3(*v.omega, e0(x1), e0(x3), e0(x4)));
          r += D.eval(e0(x3), omega3(*v.omega, e0(x1), e0(x2), e0(x4)));
          r += D.eval(omega3(*v.omega, e0(x1), e0(x2), e0(x3)), e0(x4));
          r -= omega3(*v.omega, D.eval(e0(x1), e0(x2)), e0(x3), e0(x4));
          r -= omega3(*v.omega, e0(x2), D.eval(e0(x1), e0(x3)), e0(x4));
          r -= omega3(*v.omega, e0(x2), e0(x3), D.eval(e0(x1), e0(x4)));
          r += omega3(*v.omega, e0(x1), D.eval(e0(x2), e0(x3)), e0(x4));
          r += omega3(*v.omega, e0(x1), e0(x3), D.eval(e0(x2), e0(x4)));
          r -= omega3(*v.omega, e0(x1), e0(x2), D.eval(e0(x3), e0(x4)));
          if (!r.is_zero())
            report.add(prefix + "-C4", {{0, x1}, {0, x2}, {0, x3}, {0, x4}}, std::move(r));
        }
  return report;
}

namespace {

void validate_d00(const GradedMultiMap& d00) {
  if (d00.arity() != 2 || d00.degree() != 0) throw input_error("diamond (0,0) arity/degree mismatch");
  d00.validate();
  d00.for_each([](const std::vector<BasisElement>& t, const GradedVector&) {
    if (t[0].degree != 0 || t[1].degree != 0)
      throw input_error("diamond (0,0) component holds a mixed-degree entry");
  });
}

} // namespace

void LWX2Algebra::validate() const {
  if (K.dim(-2) != 0) throw input_error("LWX graded space has degrees 0 and -1 only");
  const int n0 = K.dim(0), n1 = K.dim(-1);
  if (partial.rows() != n0 || partial.cols() != n1) throw input_error("partial shape mismatch");
  if (S.rows() != n0 || S.cols() != n1) throw input_error("pairing shape mismatch");
  if (n0 != n1 || !invertible(S)) throw input_error("degenerate pairing");
  if (omega.arity() != 3 || omega.degree() != -1) throw input_error("omega arity/degree mismatch");
  omega.validate();
  validate_d00(diamond.d00);
}

void ELWX2Algebra::validate() const {
  if (K.dim(-2) != 0) throw input_error("E-LWX graded space has degrees 0 and -1 only");
  const int n0 = K.dim(0), n1 = K.dim(-1);
  if (partial.rows() != n0 || partial.cols() != n1) throw input_error("partial shape mismatch");
  if (int(S.size()) != n0) throw input_error("pairing shape mismatch");
  for (const auto& row : S) {
    if (int(row.size()) != n1) throw input_error("pairing shape mismatch");
    for (const auto& v : row)
      if (int(v.size()) != dimE) throw input_error("pairing shape mismatch");
  }
  if (int(rho.size()) != n0) throw input_error("anchor shape mismatch");
  for (const auto& m : rho)
    if (m.rows() != dimE || m.cols() != dimE) throw input_error("anchor shape mismatch");
  if (omega.arity() != 3 || omega.degree() != -1) throw input_error("omega arity/degree mismatch");
  omega.validate();
  validate_d00(diamond.d00);
  // nondegeneracy: K0 -> Hom(K-1,E) and K-1 -> Hom(K0,E) injective
  QMatrix m0(n1 * dimE, n0), m1(n0 * dimE, n1);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int r = 0; r < dimE; ++r) {
        m0.at(j * dimE + r, i) = S[i][j][r];
        m1.at(i * dimE + r, j) = S[i][j][r];
      }
  if (rank(m0) != n0 || rank(m1) != n1) throw input_error("degenerate pairing");
  // surjectivity: the values of S span E
  QMatrix span(dimE, n0 * n1);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int r = 0; r < dimE; ++r) span.at(r, i * n1 + j) = S[i][j][r];
  if (rank(span) != dimE) throw input_error("pairing not surjective");
}

QVector ELWX2Algebra::pair(const GradedVector& a, const GradedVector& b) const {
  QVector out(dimE, Scalar(0));
  auto acc = [&](const Scalar& c, const QVector& v) {
    for (int r = 0; r < dimE; ++r) out[r] += c * v[r];
  };
  for (const auto& [ba, qa] : a.terms())
    for (const auto& [bb, qb] : b.terms()) {
      if (ba.degree == 0 && bb.degree == -1) acc(qa * qb, S[ba.index][bb.index]);
      else if (ba.degree == -1 && bb.degree == 0) acc(qa * qb, S[bb.index][ba.index]);
    }
  return out;
}

QMatrix ELWX2Algebra::rho_of(const GradedVector& a) const {
  QMatrix m(dimE, dimE);
  for (const auto& [b, q] : a.terms())
    if (b.degree == 0) m = m + rho[b.index].scaled(q);
  return m;
}

GradedVector ELWX2Algebra::D_of(const QVector& u) const {
  GradedVector out;
  for (int r = 0; r < int(u.size()); ++r) out.axpy(u[r], D.at(r));
  return out;
}

std::vector<GradedVector>& compute_D(ELWX2Algebra& a) {
  const int n0 = a.K.dim(0), n1 = a.K.dim(-1);
  QMatrix A(n0 * a.dimE, n1);
  for (int i = 0; i < n0; ++i)
    for (int r = 0; r < a.dimE; ++r)
      for (int j = 0; j < n1; ++j) A.at(i * a.dimE + r, j) = a.S[i][j][r];
  a.D.clear();
  for (int u = 0; u < a.dimE; ++u) {
    QVector b(n0 * a.dimE, Scalar(0));
    for (int i = 0; i < n0; ++i)
      for (int r = 0; r < a.dimE; ++r) b[i * a.dimE + r] = a.rho[i].at(r, u);
    auto x = solve_unique(A, b);
    if (!x) throw input_error("degenerate pairing");
    GradedVector d;
    for (int j = 0; j < n1; ++j) d.add({-1, j}, (*x)[j]);
    a.D.push_back(std::move(d));
  }
  return a.D;
}

namespace {

GradedVector from_E(const QVector& v) {
  GradedVector out;
  for (int r = 0; r < int(v.size()); ++r) out.add({0, r}, v[r]);
  return out;
}

} // namespace

CheckReport check_lwx(const LWX2Algebra& a) {
  a.validate();
  const int n0 = a.K.dim(0), n1 = a.K.dim(-1);
  Leibniz2View view{&a.K, &a.partial, &a.diamond, &a.omega};
  CheckReport report = check_leibniz2(view, "axiom-(i)");
  auto e0 = [](int i) { return GradedVector::basis({0, i}); };
  auto e1 = [](int i) { return GradedVector::basis({-1, i}); };
  auto scalar_residual = [](const Scalar& s) { return GradedVector::basis({0, 0}, s); };

  // (ii) at a point: e0<>e1 + e1<>e0 = 0 (the (0,0) part is skew by type)
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      GradedVector r = a.diamond.d01.value(i, j);
      r += a.diamond.d10.value(j, i);
      if (!r.is_zero()) report.add("axiom-(ii)", {{0, i}, {-1, j}}, std::move(r));
    }
  // (iii) S(partial e1_i, e1_j) = S(e1_i, partial e1_j)
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) {
      Scalar lhs(0), rhs(0);
      for (int k = 0; k < n0; ++k) {
        lhs += a.partial.at(k, i) * a.S.at(k, j);
        rhs += a.partial.at(k, j) * a.S.at(k, i);
      }
      if (lhs != rhs) report.add("axiom-(iii)", {{-1, i}, {-1, j}}, scalar_residual(lhs - rhs));
    }
  // (iv) with rho = 0: S(e1<>e2, e3) + S(e2, e1<>e3) = 0
  auto S_pair = [&](const GradedVector& u, const GradedVector& v) {
    Scalar s(0);
    for (const auto& [bu, qu] : u.terms())
      for (const auto& [bv, qv] : v.terms()) {
        if (bu.degree == 0 && bv.degree == -1) s += qu * qv * a.S.at(bu.index, bv.index);
        else if (bu.degree == -1 && bv.degree == 0) s += qu * qv * a.S.at(bv.index, bu.index);
      }
    return s;
  };
  auto check_iv = [&](const GradedVector& x, const GradedVector& y, const GradedVector& z,
                      std::vector<BasisElement> in) {
    Scalar s = S_pair(a.diamond.eval(x, y), z) + S_pair(y, a.diamond.eval(x, z));
    if (!is_zero(s)) report.add("axiom-(iv)", std::move(in), scalar_residual(s));
  };
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      for (int k = 0; k < n1; ++k)
        check_iv(e0(i), e0(j), e1(k), {{0, i}, {0, j}, {-1, k}});
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n0; ++k)
        check_iv(e0(i), e1(j), e0(k), {{0, i}, {-1, j}, {0, k}});
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n0; ++j)
      for (int k = 0; k < n0; ++k)
        check_iv(e1(i), e0(j), e0(k), {{-1, i}, {0, j}, {0, k}});
  // (v) S(Omega(e1,e2,e3), e4) = -S(e3, Omega(e1,e2,e4))
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int k = 0; k < n0; ++k)
        for (int l = k; l < n0; ++l) {
          BasisElement t1[3] = {{0, i}, {0, j}, {0, k}};
          BasisElement t2[3] = {{0, i}, {0, j}, {0, l}};
          Scalar s = S_pair(a.omega.eval_basis(t1), e0(l)) +
                     S_pair(e0(k), a.omega.eval_basis(t2));
          if (!is_zero(s))
            report.add("axiom-(v)", {{0, i}, {0, j}, {0, k}, {0, l}}, scalar_residual(s));
        }
  return report;
}

CheckReport check_elwx(const ELWX2Algebra& a) {
  a.validate();
  if (int(a.D.size()) != a.dimE) throw input_error("D not computed (run compute_D)");
  const int n0 = a.K.dim(0), n1 = a.K.dim(-1);
  Leibniz2View view{&a.K, &a.partial, &a.diamond, &a.omega};
  CheckReport report = check_leibniz2(view, "axiom-(E1)");
  auto e0 = [](int i) { return GradedVector::basis({0, i}); };
  auto e1 = [](int i) { return GradedVector::basis({-1, i}); };
  auto E_residual = [&](const QVector& v) { return from_E(v); };
  auto nonzero = [](const QVector& v) {
    for (const auto& q : v)
      if (!is_zero(q)) return true;
    return false;
  };

  // (E2): e0<>e1 + e1<>e0 = D S(e0,e1); the (0,0) part is skew by type
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      GradedVector r = a.diamond.d01.value(i, j);
      r += a.diamond.d10.value(j, i);
      r -= a.D_of(a.S[i][j]);
      if (!r.is_zero()) report.add("axiom-(E2)", {{0, i}, {-1, j}}, std::move(r));
    }
  // (E3)
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) {
      QVector d(a.dimE, Scalar(0));
      for (int k = 0; k < n0; ++k)
        for (int r = 0; r < a.dimE; ++r)
          d[r] += a.partial.at(k, i) * a.S[k][j][r] - a.partial.at(k, j) * a.S[k][i][r];
      if (nonzero(d)) report.add("axiom-(E3)", {{-1, i}, {-1, j}}, E_residual(d));
    }
  // (E4): rho(e1) S(e2,e3) = S(e1<>e2,e3) + S(e2,e1<>e3); rho vanishes on K-1
  auto check_E4 = [&](const GradedVector& x, const GradedVector& y, const GradedVector& z,
                      std::vector<BasisElement> in) {
    QVector lhs = a.rho_of(x).apply(a.pair(y, z));
    QVector r1 = a.pair(a.diamond.eval(x, y), z);
    QVector r2 = a.pair(y, a.diamond.eval(x, z));
    QVector d(a.dimE, Scalar(0));
    for (int r = 0; r < a.dimE; ++r) d[r] = lhs[r] - r1[r] - r2[r];
    if (nonzero(d)) report.add("axiom-(E4)", std::move(in), E_residual(d));
  };
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      for (int k = 0; k < n1; ++k)
        check_E4(e0(i), e0(j), e1(k), {{0, i}, {0, j}, {-1, k}});
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n0; ++k)
        check_E4(e0(i), e1(j), e0(k), {{0, i}, {-1, j}, {0, k}});
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n0; ++j)
      for (int k = 0; k < n0; ++k)
        check_E4(e1(i), e0(j), e0(k), {{-1, i}, {0, j}, {0, k}});
  // (E5)
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int k = 0; k < n0; ++k)
        for (int l = k; l < n0; ++l) {
          BasisElement t1[3] = {{0, i}, {0, j}, {0, k}};
          BasisElement t2[3] = {{0, i}, {0, j}, {0, l}};
          QVector s1 = a.pair(a.omega.eval_basis(t1), e0(l));
          QVector s2 = a.pair(e0(k), a.omega.eval_basis(t2));
          QVector d(a.dimE, Scalar(0));
          for (int r = 0; r < a.dimE; ++r) d[r] = s1[r] + s2[r];
          if (nonzero(d))
            report.add("axiom-(E5)", {{0, i}, {0, j}, {0, k}, {0, l}}, E_residual(d));
        }
  // (E6): rho(e0_i <> e0_j) = [rho_i, rho_j]
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      QMatrix lhs = a.rho_of(a.diamond.d00.eval_basis(t));
      QMatrix rhs = a.rho[i] * a.rho[j] - a.rho[j] * a.rho[i];
      QMatrix d = lhs - rhs;
      if (!d.is_zero()) {
        GradedVector flat;
        for (int r = 0; r < a.dimE; ++r)
          for (int c = 0; c < a.dimE; ++c) flat.add({0, r * a.dimE + c}, d.at(r, c));
        report.add("axiom-(E6)", {{0, i}, {0, j}}, std::move(flat));
      }
    }
  return report;
}

QVector compute_T(const ELWX2Algebra& a, int e01, int e02, int e1) {
  GradedVector x = GradedVector::basis({0, e01});
  GradedVector y = GradedVector::basis({0, e02});
  GradedVector m = GradedVector::basis({-1, e1});
  QVector t1 = a.pair(x, skew_bracket(a.diamond, y, m));
  QVector t2 = a.pair(m, skew_bracket(a.diamond, x, y));
  QVector t3 = a.pair(y, skew_bracket(a.diamond, m, x));
  QVector out(a.dimE, Scalar(0));
  const Scalar sixth = rat(1, 6);
  for (int r = 0; r < a.dimE; ++r) out[r] = sixth * (t1[r] + t2[r] + t3[r]);
  return out;
}

LieNAlgebra derive_lie3_from_elwx(const ELWX2Algebra& a, bool allow_invalid) {
  if (!allow_invalid) {
    CheckReport r = check_elwx(a);
    if (!r.pass) throw precondition_error("E-LWX axioms fail; refusing to derive (see check_elwx)");
  } else {
    a.validate();
  }
  const int n0 = a.K.dim(0), n1 = a.K.dim(-1);
  LieNAlgebra g(3, GradedVectorSpace(n0, n1, a.dimE));
  auto to_deg2 = [&](const QVector& v) {
    GradedVector out;
    for (int r = 0; r < a.dimE; ++r) out.add({-2, r}, v[r]);
    return out;
  };
  // l1 = partial on K-1, D on E
  for (int i = 0; i < n1; ++i) {
    GradedVector v;
    for (int k = 0; k < n0; ++k) v.add({0, k}, a.partial.at(k, i));
    BasisElement b{-1, i};
    g.l(1).accumulate(std::span(&b, 1), v);
  }
  for (int u = 0; u < a.dimE; ++u) {
    BasisElement b{-2, u};
    g.l(1).accumulate(std::span(&b, 1), a.D[u]);
  }
  // l2
  auto e0 = [](int i) { return GradedVector::basis({0, i}); };
  auto e1 = [](int i) { return GradedVector::basis({-1, i}); };
  for (int i = 0; i < n0; ++i) {
    for (int j = i + 1; j < n0; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      g.l(2).accumulate(t, skew_bracket(a.diamond, e0(i), e0(j)));
    }
    for (int j = 0; j < n1; ++j) {
      BasisElement t[2] = {{0, i}, {-1, j}};
      g.l(2).accumulate(t, skew_bracket(a.diamond, e0(i), e1(j)));
    }
    for (int u = 0; u < a.dimE; ++u) {
      BasisElement t[2] = {{0, i}, {-2, u}};
      QVector s = a.pair(e0(i), a.D[u]);
      for (auto& q : s) q *= rat(1, 2);
      g.l(2).accumulate(t, to_deg2(s));
    }
  }
  // l3 = Omega on K0 triples, -T on mixed
  a.omega.for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
    g.l(3).accumulate(t, v);
  });
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int k = 0; k < n1; ++k) {
        QVector t = compute_T(a, i, j, k);
        for (auto& q : t) q *= rat(-1);
        BasisElement tup[3] = {{0, i}, {0, j}, {-1, k}};
        g.l(3).accumulate(tup, to_deg2(t));
      }
  // l4 = S(Omega(.,.,.),.)
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int k = j + 1; k < n0; ++k)
        for (int l = k + 1; l < n0; ++l) {
          BasisElement t3[3] = {{0, i}, {0, j}, {0, k}};
          QVector s = a.pair(a.omega.eval_basis(t3), e0(l));
          BasisElement t4[4] = {{0, i}, {0, j}, {0, k}, {0, l}};
          g.l(4).accumulate(t4, to_deg2(s));
        }
  return g;
}

} // namespace hsa
