#include "hsa/constructions.hpp"

namespace hsa {

namespace {

// Hom(V,W) basis order: source-major, index = src*dimW + tgt.
int hom_idx(int src, int tgt, int dim_tgt) { return src * dim_tgt + tgt; }

GradedVector lie_l1(const LieNAlgebra& g, BasisElement a) {
  return g.l(1).eval_basis(std::span(&a, 1));
}
GradedVector lie_l2(const LieNAlgebra& g, BasisElement a, BasisElement b) {
  BasisElement t[2] = {a, b};
  return g.l(2).eval_basis(t);
}
GradedVector lie_l3(const LieNAlgebra& g, BasisElement a, BasisElement b, BasisElement c) {
  BasisElement t[3] = {a, b, c};
  return g.l(3).eval_basis(t);
}
GradedVector lie_l4(const LieNAlgebra& g, BasisElement a, BasisElement b, BasisElement c,
                    BasisElement d) {
  BasisElement t[4] = {a, b, c, d};
  return g.l(4).eval_basis(t);
}

void require_lie(const LieNAlgebra& g, int n, const char* who) {
  if (g.n() != n) throw input_error(std::string(who) + ": wrong n");
  CheckReport r = check_lie_n(g);
  if (!r.pass) throw precondition_error(std::string(who) + ": input fails check_lie_n");
}

} // namespace

CheckReport check_quadratic(const QuadraticLie2& q) {
  q.alg.validate();
  if (q.alg.n() != 2) throw input_error("quadratic structure needs a Lie 2-algebra");
  const int d0 = q.alg.space().dim(0), d1 = q.alg.space().dim(-1);
  if (q.S.rows() != d0 || q.S.cols() != d1) throw input_error("pairing shape mismatch");
  CheckReport report = check_lie_n(q.alg);
  if (d0 != d1 || !invertible(q.S)) {
    report.add("nondegeneracy", {}, GradedVector::basis({0, 0}, rat(1)));
    return report;
  }
  auto S10 = [&](const GradedVector& x1, const GradedVector& y0) {
    Scalar s(0);
    for (const auto& [b1, q1] : x1.terms())
      for (const auto& [b0, q0] : y0.terms())
        if (b1.degree == -1 && b0.degree == 0) s += q1 * q0 * q.S.at(b0.index, b1.index);
    return s;
  };
  auto scalar_res = [](const Scalar& s) { return GradedVector::basis({0, 0}, s); };
  // inv1: S(l1 x1, y1) = S(l1 y1, x1)
  for (int i = 0; i < d1; ++i)
    for (int j = i; j < d1; ++j) {
      Scalar lhs(0), rhs(0);
      GradedVector li = lie_l1(q.alg, {-1, i}), lj = lie_l1(q.alg, {-1, j});
      for (const auto& [b, c] : li.terms()) lhs += c * q.S.at(b.index, j);
      for (const auto& [b, c] : lj.terms()) rhs += c * q.S.at(b.index, i);
      if (lhs != rhs) report.add("invariance-1", {{-1, i}, {-1, j}}, scalar_res(lhs - rhs));
    }
  // inv2: S(l2(x0,y0), z1) = -S(l2(x0,z1), y0)
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d0; ++j)
      for (int k = 0; k < d1; ++k) {
        Scalar lhs(0);
        for (const auto& [b, c] : lie_l2(q.alg, {0, i}, {0, j}).terms())
          if (b.degree == 0) lhs += c * q.S.at(b.index, k);
        Scalar rhs = S10(lie_l2(q.alg, {0, i}, {-1, k}), GradedVector::basis({0, j}));
        if (!is_zero(lhs + rhs))
          report.add("invariance-2", {{0, i}, {0, j}, {-1, k}}, scalar_res(lhs + rhs));
      }
  // inv3: S(l3(x0,y0,z0), u0) = -S(l3(x0,y0,u0), z0)
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = 0; k < d0; ++k)
        for (int l = k; l < d0; ++l) {
          Scalar s = S10(lie_l3(q.alg, {0, i}, {0, j}, {0, k}), GradedVector::basis({0, l})) +
                     S10(lie_l3(q.alg, {0, i}, {0, j}, {0, l}), GradedVector::basis({0, k}));
          if (!is_zero(s))
            report.add("invariance-3", {{0, i}, {0, j}, {0, k}, {0, l}}, scalar_res(s));
        }
  return report;
}

QuadraticLie2 quad_lie2_from_lie_algebra(const LieNAlgebra& h) {
  require_lie(h, 1, "quad_lie2_from_lie_algebra");
  const int d = h.space().dim(0);
  QuadraticLie2 q;
  q.alg = LieNAlgebra(2, GradedVectorSpace(d, d));
  q.S = QMatrix::identity(d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      BasisElement t[2] = {{0, a}, {0, b}};
      GradedVector v;
      for (const auto& [e, c] : lie_l2(h, {0, a}, {0, b}).terms()) v.add({0, e.index}, c);
      q.alg.l(2).accumulate(t, v);
    }
  // coadjoint: <l2(x_a, alpha_b), y_c> = -alpha_b([x_a, y_c])
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      GradedVector v;
      for (int c = 0; c < d; ++c) {
        Scalar s = -lie_l2(h, {0, a}, {0, c}).coeff({0, b});
        v.add({-1, c}, s);
      }
      BasisElement t[2] = {{0, a}, {-1, b}};
      q.alg.l(2).accumulate(t, v);
    }
  return q;
}

LieNAlgebra string_lie2_from_quadratic_lie_algebra(const LieNAlgebra& h, const QMatrix& B) {
  require_lie(h, 1, "string_lie2_from_quadratic_lie_algebra");
  const int d = h.space().dim(0);
  if (B.rows() != d || B.cols() != d) throw input_error("form shape mismatch");
  if (B != B.transpose()) throw input_error("form not symmetric");
  LieNAlgebra g(2, GradedVectorSpace(d, 1));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      BasisElement t[2] = {{0, a}, {0, b}};
      GradedVector v;
      for (const auto& [e, c] : lie_l2(h, {0, a}, {0, b}).terms()) v.add({0, e.index}, c);
      g.l(2).accumulate(t, v);
    }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Scalar s(0);
        for (const auto& [e, q] : lie_l2(h, {0, a}, {0, b}).terms()) s += q * B.at(e.index, c);
        BasisElement t[3] = {{0, a}, {0, b}, {0, c}};
        g.l(3).accumulate(t, {-1, 0}, s);
      }
  return g;
}

LieNAlgebra build_higher_string(const QuadraticLie2& q) {
  CheckReport pre = check_quadratic(q);
  if (!pre.pass) throw precondition_error("build_higher_string: input fails check_quadratic");
  const int d0 = q.alg.space().dim(0), d1 = q.alg.space().dim(-1);
  LieNAlgebra g(3, GradedVectorSpace(d0, d1, 1));
  // l1, l2 copied; nothing touches R
  q.alg.l(1).for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
    g.l(1).accumulate(t, v);
  });
  q.alg.l(2).for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
    g.l(2).accumulate(t, v);
  });
  // l3 = (l3, S(z1, l2(x0,y0))/2)
  q.alg.l(3).for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
    g.l(3).accumulate(t, v);
  });
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = 0; k < d1; ++k) {
        Scalar s(0);
        for (const auto& [b, c] : lie_l2(q.alg, {0, i}, {0, j}).terms())
          if (b.degree == 0) s += c * q.S.at(b.index, k);
        BasisElement t[3] = {{0, i}, {0, j}, {-1, k}};
        g.l(3).accumulate(t, {-2, 0}, s * rat(1, 2));
      }
  // l4 = S(l3(x0,y0,z0), u0)
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k)
        for (int l = 0; l < d0; ++l) {
          Scalar s(0);
          for (const auto& [b, c] : lie_l3(q.alg, {0, i}, {0, j}, {0, k}).terms())
            s += c * q.S.at(l, b.index);
          if (is_zero(s)) continue;
          BasisElement t[4] = {{0, i}, {0, j}, {0, k}, {0, l}};
          g.l(4).accumulate(t, {-2, 0}, s);
        }
  return g;
}

LieNAlgebra embed_lie2_as_lie3(const LieNAlgebra& g2) {
  if (g2.n() != 2) throw input_error("embed_lie2_as_lie3 needs a Lie 2-algebra");
  LieNAlgebra g(3, GradedVectorSpace(g2.space().dim(0), g2.space().dim(-1), 1));
  for (int i = 1; i <= 3; ++i)
    g2.l(i).for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
      g.l(i).accumulate(t, v);
    });
  return g;
}

namespace {

// assembles the E-LWX data of a Lie 3-algebra; D is filled from the explicit
// formula D(u) = l2(., x2_u) + l1(x2_u) and not from the pairing system
ELWX2Algebra elwx_data_from_lie3(const LieNAlgebra& g) {
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1), d2 = g.space().dim(-2);
  const int h0 = d1 * d2; // Hom(g-1,g-2) block of K0
  const int h1 = d0 * d2; // Hom(g0,g-2) block of K-1
  ELWX2Algebra a;
  a.dimE = d2;
  a.K = GradedVectorSpace(h0 + d0, h1 + d1);
  a.partial = QMatrix(h0 + d0, h1 + d1);
  a.S.assign(h0 + d0, std::vector<QVector>(h1 + d1, QVector(d2, Scalar(0))));
  a.rho.assign(h0 + d0, QMatrix(d2, d2));
  a.diamond.d00 = GradedMultiMap(2, 0, a.K, a.K);
  a.omega = GradedMultiMap(3, -1, a.K, a.K);

  // D per the derived formula: D(u) = l2(., x2_u)|_{g0} + l1(x2_u)
  auto D_of_basis = [&](int u) {
    GradedVector out;
    for (int c = 0; c < d0; ++c)
      for (const auto& [e, q] : lie_l2(g, {0, c}, {-2, u}).terms())
        out.add({-1, hom_idx(c, e.index, d2)}, q);
    for (const auto& [e, q] : lie_l1(g, {-2, u}).terms()) out.add({-1, h1 + e.index}, q);
    return out;
  };

  // partial(phi0 + x1) = phi0 o l1 + l2(x1,.)|_{g-1} + l1(x1)
  for (int c = 0; c < d0; ++c)
    for (int u = 0; u < d2; ++u) {
      int col = hom_idx(c, u, d2);
      for (int b = 0; b < d1; ++b) {
        Scalar s = lie_l1(g, {-1, b}).coeff({0, c});
        a.partial.at(hom_idx(b, u, d2), col) += s;
      }
    }
  for (int m = 0; m < d1; ++m) {
    int col = h1 + m;
    for (int b = 0; b < d1; ++b)
      for (const auto& [e, q] : lie_l2(g, {-1, m}, {-1, b}).terms())
        a.partial.at(hom_idx(b, e.index, d2), col) += q;
    for (const auto& [e, q] : lie_l1(g, {-1, m}).terms()) a.partial.at(h0 + e.index, col) += q;
  }
  // rho(phi1 + x0) = phi1 o l1 + l2(x0,.)|_{g-2}
  for (int b = 0; b < d1; ++b)
    for (int u = 0; u < d2; ++u) {
      int i = hom_idx(b, u, d2);
      for (int v = 0; v < d2; ++v) a.rho[i].at(u, v) += lie_l1(g, {-2, v}).coeff({-1, b});
    }
  for (int x = 0; x < d0; ++x)
    for (int v = 0; v < d2; ++v)
      for (const auto& [e, q] : lie_l2(g, {0, x}, {-2, v}).terms())
        a.rho[h0 + x].at(e.index, v) += q;
  // S(phi1 + x0, psi0 + y1) = phi1(y1) + psi0(x0)
  for (int b = 0; b < d1; ++b)
    for (int u = 0; u < d2; ++u) a.S[hom_idx(b, u, d2)][h1 + b][u] = 1;
  for (int x = 0; x < d0; ++x)
    for (int u = 0; u < d2; ++u) a.S[h0 + x][hom_idx(x, u, d2)][u] = 1;

  // diamond, by block. K0 element i: i < h0 -> phi1 with (b,u); else x0.
  // K-1 element j: j < h1 -> phi0 with (c,v); else x1.
  auto hom0_add = [&](GradedVector& out, int src, const GradedVector& val, const Scalar& pm) {
    // out += pm * (z0_src |-> val in g_{-2}) as Hom(g0,g-2) part of K-1
    for (const auto& [e, q] : val.terms()) out.add({-1, hom_idx(src, e.index, d2)}, pm * q);
  };
  auto hom1_add = [&](GradedVector& out, int src, const GradedVector& val, const Scalar& pm) {
    // out += pm * (z1_src |-> val) as Hom(g-1,g-2) part of K0
    for (const auto& [e, q] : val.terms()) out.add({0, hom_idx(src, e.index, d2)}, pm * q);
  };

  // (x0+psi1) <> (y0+phi1), values in K0
  auto diamond00_value = [&](int i, int j) {
    GradedVector out;
    const bool i_hom = i < h0, j_hom = j < h0;
    if (!i_hom && !j_hom) {
      BasisElement xa{0, i - h0}, yb{0, j - h0};
      for (const auto& [e, q] : lie_l2(g, xa, yb).terms()) out.add({0, h0 + e.index}, q);
      for (int m = 0; m < d1; ++m) hom1_add(out, m, lie_l3(g, xa, yb, {-1, m}), rat(1));
    } else if (!i_hom && j_hom) {
      BasisElement xa{0, i - h0};
      int c = (j) / d2, u = (j) % d2; // phi1_{c,u}
      hom1_add(out, c, lie_l2(g, xa, {-2, u}), rat(1)); // l2(x0, phi1(.))
      for (int m = 0; m < d1; ++m) {                    // -phi1 o l2(x0,.)|g-1
        Scalar s = lie_l2(g, xa, {-1, m}).coeff({-1, c});
        out.add({0, hom_idx(m, u, d2)}, -s);
      }
    } else if (i_hom && !j_hom) {
      int c = i / d2, u = i % d2; // psi1_{c,u}
      BasisElement yb{0, j - h0};
      for (int m = 0; m < d1; ++m) { // psi1 o l2(y0,.)|g-1
        Scalar s = lie_l2(g, yb, {-1, m}).coeff({-1, c});
        out.add({0, hom_idx(m, u, d2)}, s);
      }
      hom1_add(out, c, lie_l2(g, yb, {-2, u}), rat(-1)); // -l2(y0, psi1(.))
    } else {
      int c = i / d2, u = i % d2; // psi1
      int dd = j / d2, v = j % d2; // phi1
      // psi1 o l1 o phi1 - phi1 o l1 o psi1
      Scalar s1 = lie_l1(g, {-2, v}).coeff({-1, c});
      out.add({0, hom_idx(dd, u, d2)}, s1);
      Scalar s2 = lie_l1(g, {-2, u}).coeff({-1, dd});
      out.add({0, hom_idx(c, v, d2)}, -s2);
    }
    return out;
  };
  // (x0+psi1) <> (y1+phi0), values in K-1
  auto diamond01_value = [&](int i, int j) {
    GradedVector out;
    const bool i_hom = i < h0, j_hom = j < h1;
    if (!i_hom && !j_hom) {
      BasisElement xa{0, i - h0}, ym{-1, j - h1};
      for (const auto& [e, q] : lie_l2(g, xa, ym).terms()) out.add({-1, h1 + e.index}, q);
      // calibrated: the axioms force this mixed term to carry the sign
      // opposite to the (0,0)->Hom term of the first line
      for (int dd = 0; dd < d0; ++dd) hom0_add(out, dd, lie_l3(g, xa, {0, dd}, ym), rat(-1));
    } else if (!i_hom && j_hom) {
      BasisElement xa{0, i - h0};
      int dd = j / d2, v = j % d2; // phi0_{d,v}
      hom0_add(out, dd, lie_l2(g, xa, {-2, v}), rat(1)); // l2(x0, phi0(.))
      for (int m = 0; m < d0; ++m) {                     // -phi0 o l2(x0,.)|g0
        Scalar s = lie_l2(g, xa, {0, m}).coeff({0, dd});
        out.add({-1, hom_idx(m, v, d2)}, -s);
      }
    } else if (i_hom && !j_hom) {
      int c = i / d2, u = i % d2; // psi1_{c,u}
      int m = j - h1;             // y1_m
      for (int dd = 0; dd < d0; ++dd) { // -psi1 o l2(.,y1)|g0
        Scalar s = lie_l2(g, {0, dd}, {-1, m}).coeff({-1, c});
        out.add({-1, hom_idx(dd, u, d2)}, -s);
      }
      if (c == m) out += D_of_basis(u); // delta(psi1(y1)) = D of it
    } else {
      int c = i / d2, u = i % d2;  // psi1
      int dd = j / d2, v = j % d2; // phi0
      Scalar s = lie_l1(g, {-2, v}).coeff({-1, c}); // psi1 o l1 o phi0
      out.add({-1, hom_idx(dd, u, d2)}, s);
    }
    return out;
  };
  // (y1+phi0) <> (x0+psi1), values in K-1
  auto diamond10_value = [&](int j, int i) {
    GradedVector out;
    const bool i_hom = i < h0, j_hom = j < h1;
    if (!j_hom && !i_hom) {
      BasisElement ym{-1, j - h1}, xa{0, i - h0};
      for (const auto& [e, q] : lie_l2(g, ym, xa).terms()) out.add({-1, h1 + e.index}, q);
      for (int dd = 0; dd < d0; ++dd) hom0_add(out, dd, lie_l3(g, xa, {0, dd}, ym), rat(1));
    } else if (j_hom && !i_hom) {
      int dd = j / d2, v = j % d2; // phi0_{d,v}
      BasisElement xa{0, i - h0};
      hom0_add(out, dd, lie_l2(g, xa, {-2, v}), rat(-1)); // -l2(x0, phi0(.))
      for (int m = 0; m < d0; ++m) {                      // +phi0 o l2(x0,.)|g0
        Scalar s = lie_l2(g, xa, {0, m}).coeff({0, dd});
        out.add({-1, hom_idx(m, v, d2)}, s);
      }
      if (dd == i - h0) out += D_of_basis(v); // delta(phi0(x0))
    } else if (!j_hom && i_hom) {
      int m = j - h1;             // y1_m
      int c = i / d2, u = i % d2; // psi1_{c,u}
      for (int dd = 0; dd < d0; ++dd) { // +psi1 o l2(.,y1)|g0
        Scalar s = lie_l2(g, {0, dd}, {-1, m}).coeff({-1, c});
        out.add({-1, hom_idx(dd, u, d2)}, s);
      }
    } else {
      int dd = j / d2, v = j % d2; // phi0
      int c = i / d2, u = i % d2;  // psi1
      Scalar s = lie_l1(g, {-2, v}).coeff({-1, c}); // -psi1 o l1 o phi0
      out.add({-1, hom_idx(dd, u, d2)}, -s);
    }
    return out;
  };

  const int n0 = h0 + d0, n1 = h1 + d1;
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      a.diamond.d00.accumulate(t, diamond00_value(i, j));
    }
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      a.diamond.d01.add(i, j, diamond01_value(i, j));
      a.diamond.d10.add(j, i, diamond10_value(j, i));
    }

  // Omega (cyclic form): inputs a_s = phi1_s + x0_s
  auto omega_value = [&](int i, int j, int k) {
    GradedVector out;
    int idx[3] = {i, j, k};
    bool hom[3];
    for (int s = 0; s < 3; ++s) hom[s] = idx[s] < h0;
    int nhom = hom[0] + hom[1] + hom[2];
    if (nhom == 0) {
      BasisElement x{0, idx[0] - h0}, y{0, idx[1] - h0}, z{0, idx[2] - h0};
      for (const auto& [e, q] : lie_l3(g, x, y, z).terms()) out.add({-1, h1 + e.index}, q);
      for (int dd = 0; dd < d0; ++dd) hom0_add(out, dd, lie_l4(g, x, y, z, {0, dd}), rat(1));
    } else if (nhom == 1) {
      int s = hom[0] ? 0 : (hom[1] ? 1 : 2);
      int c = idx[s] / d2, u = idx[s] % d2; // the Hom(g-1,g-2) input
      BasisElement p{0, idx[(s + 1) % 3] - h0}, q2{0, idx[(s + 2) % 3] - h0};
      // cyclic: slot s pairs with l3(x_{s+1}, x_{s+2}, .)
      for (int dd = 0; dd < d0; ++dd) {
        Scalar v = lie_l3(g, p, q2, {0, dd}).coeff({-1, c});
        out.add({-1, hom_idx(dd, u, d2)}, -v);
      }
    }
    return out;
  };
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int k = j + 1; k < n0; ++k) {
        BasisElement t[3] = {{0, i}, {0, j}, {0, k}};
        a.omega.accumulate(t, omega_value(i, j, k));
      }

  for (int u = 0; u < d2; ++u) a.D.push_back(D_of_basis(u));
  return a;
}

} // namespace

ELWX2Algebra build_elwx_from_lie3(const LieNAlgebra& g, bool check) {
  if (check) require_lie(g, 3, "build_elwx_from_lie3");
  ELWX2Algebra a = elwx_data_from_lie3(g);
  a.D.clear();
  compute_D(a); // must agree with the explicit formula; tests assert it
  return a;
}

LieNAlgebra lie3_double(const LieNAlgebra& g, bool check) {
  if (check) require_lie(g, 3, "lie3_double");
  ELWX2Algebra a = elwx_data_from_lie3(g);
  const int d2 = g.space().dim(-2);
  const int n0 = a.K.dim(0), n1 = a.K.dim(-1);
  LieNAlgebra out(3, GradedVectorSpace(n0, n1, d2));
  // l1 = partial and the derived D (transcribed table)
  for (int j = 0; j < n1; ++j) {
    GradedVector v;
    for (int i = 0; i < n0; ++i) v.add({0, i}, a.partial.at(i, j));
    BasisElement b{-1, j};
    out.l(1).accumulate(std::span(&b, 1), v);
  }
  for (int u = 0; u < d2; ++u) {
    GradedVector v; // D(x2_u) = l2(., x2_u) + l1(x2_u)
    const int d0g = g.space().dim(0), d1g = g.space().dim(-1);
    const int h1 = d0g * d2;
    for (int c = 0; c < d0g; ++c)
      for (const auto& [e, q] : lie_l2(g, {0, c}, {-2, u}).terms())
        v.add({-1, hom_idx(c, e.index, d2)}, q);
    for (const auto& [e, q] : lie_l1(g, {-2, u}).terms()) v.add({-1, h1 + e.index}, q);
    (void)d1g;
    BasisElement b{-2, u};
    out.l(1).accumulate(std::span(&b, 1), v);
  }
  // l2(e0,e0) = e0 <> e0 (already skew), l2(e0,e1) = (e0<>e1 - e1<>e0)/2,
  // l2(e0,x2) = S(e0, D x2)/2, l2(e1,e1) = 0
  auto e0 = [](int i) { return GradedVector::basis({0, i}); };
  auto e1 = [](int i) { return GradedVector::basis({-1, i}); };
  for (int i = 0; i < n0; ++i) {
    for (int j = i + 1; j < n0; ++j) {
      BasisElement t[2] = {{0, i}, {0, j}};
      out.l(2).accumulate(t, a.diamond.eval(e0(i), e0(j)));
    }
    for (int j = 0; j < n1; ++j) {
      GradedVector v = a.diamond.eval(e0(i), e1(j));
      v -= a.diamond.eval(e1(j), e0(i));
      v *= rat(1, 2);
      BasisElement t[2] = {{0, i}, {-1, j}};
      out.l(2).accumulate(t, v);
    }
    for (int u = 0; u < d2; ++u) {
      QVector s = a.pair(e0(i), a.D[u]);
      GradedVector v;
      for (int r = 0; r < d2; ++r) v.add({-2, r}, s[r] * rat(1, 2));
      BasisElement t[2] = {{0, i}, {-2, u}};
      out.l(2).accumulate(t, v);
    }
  }
  // l3 = (Omega, -T), l4 = S(Omega(.,.,.), .)
  a.omega.for_each([&](const std::vector<BasisElement>& t, const GradedVector& v) {
    out.l(3).accumulate(t, v);
  });
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      for (int k = 0; k < n1; ++k) {
        QVector t = compute_T(a, i, j, k);
        GradedVector v;
        for (int r = 0; r < d2; ++r) v.add({-2, r}, -t[r]);
        BasisElement tup[3] = {{0, i}, {0, j}, {-1, k}};
        out.l(3).accumulate(tup, v);
      }
      for (int k = j + 1; k < n0; ++k)
        for (int l = k + 1; l < n0; ++l) {
          BasisElement t3[3] = {{0, i}, {0, j}, {0, k}};
          QVector s = a.pair(a.omega.eval_basis(t3), e0(l));
          GradedVector v;
          for (int r = 0; r < d2; ++r) v.add({-2, r}, s[r]);
          BasisElement t4[4] = {{0, i}, {0, j}, {0, k}, {0, l}};
          out.l(4).accumulate(t4, v);
        }
    }
  return out;
}

LieNAlgebra abelian_lie3_double(const ThreeTermComplex& v) {
  v.validate();
  const int d0 = v.dim0, d1 = v.dim1, d2 = v.dim2;
  const int h0 = d1 * d2, h1 = d0 * d2;
  LieNAlgebra out(3, GradedVectorSpace(h0 + d0, h1 + d1, d2));
  // l1(x2) = pi1(x2); l1(phi0 + y1) = phi0 o pi0 + pi0(y1)
  for (int u = 0; u < d2; ++u) {
    GradedVector w;
    for (int b = 0; b < d1; ++b) w.add({-1, h1 + b}, v.pi1.at(b, u));
    BasisElement e{-2, u};
    out.l(1).accumulate(std::span(&e, 1), w);
  }
  for (int c = 0; c < d0; ++c)
    for (int u = 0; u < d2; ++u) {
      GradedVector w; // phi0_{c,u} o pi0 in Hom(V-1, V-2)
      for (int b = 0; b < d1; ++b) w.add({0, hom_idx(b, u, d2)}, v.pi0.at(c, b));
      BasisElement e{-1, hom_idx(c, u, d2)};
      out.l(1).accumulate(std::span(&e, 1), w);
    }
  for (int m = 0; m < d1; ++m) {
    GradedVector w;
    for (int c = 0; c < d0; ++c) w.add({0, h0 + c}, v.pi0.at(c, m));
    BasisElement e{-1, h1 + m};
    out.l(1).accumulate(std::span(&e, 1), w);
  }
  // l2(psi1+x0, phi1+y0) = psi1 o pi1 o phi1 - phi1 o pi1 o psi1
  for (int i = 0; i < h0; ++i)
    for (int j = i + 1; j < h0; ++j) {
      int c1 = i / d2, u1 = i % d2, c2 = j / d2, u2 = j % d2;
      GradedVector w;
      // psi1=E_{c1,u1}, phi1=E_{c2,u2}: psi1 o pi1 o phi1 = [pi1]_{c1,u2} E_{c2,u1}
      w.add({0, hom_idx(c2, u1, d2)}, v.pi1.at(c1, u2));
      w.add({0, hom_idx(c1, u2, d2)}, -v.pi1.at(c2, u1));
      BasisElement t[2] = {{0, i}, {0, j}};
      out.l(2).accumulate(t, w);
    }
  // l2(psi1+x0, phi0+y1) = pi1(psi1(y1) - phi0(x0))/2 + psi1 o pi1 o phi0
  for (int i = 0; i < h0 + d0; ++i)
    for (int j = 0; j < h1 + d1; ++j) {
      GradedVector w;
      if (i < h0 && j >= h1) { // (psi1, y1): pi1(psi1(y1))/2
        int c = i / d2, u = i % d2, m = j - h1;
        if (c == m)
          for (int b = 0; b < d1; ++b) w.add({-1, h1 + b}, v.pi1.at(b, u) * rat(1, 2));
      }
      if (i >= h0 && j < h1) { // (x0, phi0): -pi1(phi0(x0))/2
        int c = j / d2, u = j % d2;
        if (c == i - h0)
          for (int b = 0; b < d1; ++b) w.add({-1, h1 + b}, v.pi1.at(b, u) * rat(-1, 2));
      }
      if (i < h0 && j < h1) { // psi1 o pi1 o phi0 = [pi1]_{c1,u2} E_{c2,u1} in Hom(V0,V-2)
        int c1 = i / d2, u1 = i % d2, c2 = j / d2, u2 = j % d2;
        w.add({-1, hom_idx(c2, u1, d2)}, v.pi1.at(c1, u2));
      }
      if (w.is_zero()) continue;
      BasisElement t[2] = {{0, i}, {-1, j}};
      out.l(2).accumulate(t, w);
    }
  // l2(psi1+x0, x2) = psi1(pi1(x2))/2
  for (int i = 0; i < h0; ++i)
    for (int u = 0; u < d2; ++u) {
      int c = i / d2, w_ = i % d2;
      Scalar s = v.pi1.at(c, u) * rat(1, 2);
      BasisElement t[2] = {{0, i}, {-2, u}};
      out.l(2).accumulate(t, {-2, w_}, s);
    }
  // l3(psi1+x0, phi1+y0, varphi0+z1) =
  //  -(psi1 pi1 phi1(z1) - phi1 pi1 psi1(z1) - psi1 pi1 varphi0(y0) + phi1 pi1 varphi0(x0))/4
  for (int i = 0; i < h0 + d0; ++i)
    for (int j = i + 1; j < h0 + d0; ++j)
      for (int k = 0; k < h1 + d1; ++k) {
        GradedVector w;
        const Scalar q = rat(-1, 4);
        if (i < h0 && j < h0 && k >= h1) {
          int c1 = i / d2, u1 = i % d2, c2 = j / d2, u2 = j % d2, m = k - h1;
          // psi1 pi1 phi1 (z1_m) = delta_{c2,m} psi1(pi1(e_{u2}))
          if (c2 == m) w.add({-2, u1}, q * v.pi1.at(c1, u2));
          if (c1 == m) w.add({-2, u2}, -q * v.pi1.at(c2, u1));
        }
        if (i < h0 && j >= h0 && k < h1) {
          // (psi1, y0, varphi0): +psi1 pi1 varphi0(y0) * (-q)... term: -psi1 pi1 varphi0(y0)
          int c1 = i / d2, u1 = i % d2, y = j - h0, c3 = k / d2, u3 = k % d2;
          if (c3 == y) w.add({-2, u1}, -q * v.pi1.at(c1, u3));
        }
        if (w.is_zero()) continue;
        BasisElement t[3] = {{0, i}, {0, j}, {-1, k}};
        out.l(3).accumulate(t, w);
      }
  return out;
}

LieNAlgebra string_type_lie3_explicit(const LieNAlgebra& g) {
  if (g.n() != 2) throw input_error("string_type_lie3_explicit needs a Lie 2-algebra");
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1);
  // K0 = [g-1^* (d1), g0 (d0)], K-1 = [g0^* (d0), g-1 (d1)], E = R
  LieNAlgebra out(3, GradedVectorSpace(d1 + d0, d0 + d1, 1));
  auto is_dual0 = [&](int i) { return i < d1; };  // K0 dual block
  auto is_dual1 = [&](int j) { return j < d0; };  // K-1 dual block
  // l1(x1 + alpha0) = l1(x1) + l1^*(alpha0)
  for (int a = 0; a < d0; ++a) { // alpha0_a: <l1* a0, y1_b> = a0(l1 y1_b)
    GradedVector w;
    for (int b = 0; b < d1; ++b) w.add({0, b}, lie_l1(g, {-1, b}).coeff({0, a}));
    BasisElement e{-1, a};
    out.l(1).accumulate(std::span(&e, 1), w);
  }
  for (int m = 0; m < d1; ++m) {
    GradedVector w;
    for (const auto& [e, q] : lie_l1(g, {-1, m}).terms()) w.add({0, d1 + e.index}, q);
    BasisElement e{-1, d0 + m};
    out.l(1).accumulate(std::span(&e, 1), w);
  }
  // l2 on K0 x K0
  for (int i = 0; i < d1 + d0; ++i)
    for (int j = i + 1; j < d1 + d0; ++j) {
      GradedVector w;
      if (!is_dual0(i) && !is_dual0(j)) {
        for (const auto& [e, q] : lie_l2(g, {0, i - d1}, {0, j - d1}).terms())
          w.add({0, d1 + e.index}, q);
      } else if (!is_dual0(i) && is_dual0(j)) {
        // (x0_a, beta1_b): ad0*_{x_a} beta1_b : <.,y1_c> = -beta1(l2(x_a,y1_c))
        int a = i - d1, b = j;
        for (int c = 0; c < d1; ++c) w.add({0, c}, -lie_l2(g, {0, a}, {-1, c}).coeff({-1, b}));
      } else if (is_dual0(i) && !is_dual0(j)) {
        int b = i, a = j - d1; // (alpha1_b, y0_a): -ad0*_{y_a} alpha1_b
        for (int c = 0; c < d1; ++c) w.add({0, c}, lie_l2(g, {0, a}, {-1, c}).coeff({-1, b}));
      }
      if (w.is_zero()) continue;
      BasisElement t[2] = {{0, i}, {0, j}};
      out.l(2).accumulate(t, w);
    }
  // l2 on K0 x K-1
  for (int i = 0; i < d1 + d0; ++i)
    for (int j = 0; j < d0 + d1; ++j) {
      GradedVector w;
      if (!is_dual0(i) && !is_dual1(j)) { // (x0_a, y1_m): l2 into g-1 block
        for (const auto& [e, q] : lie_l2(g, {0, i - d1}, {-1, j - d0}).terms())
          w.add({-1, d0 + e.index}, q);
      } else if (!is_dual0(i) && is_dual1(j)) {
        // (x0_a, beta0_b): ad0*_{x_a} beta0_b : <.,y0_c> = -beta0(l2(x_a,y_c))
        int a = i - d1, b = j;
        for (int c = 0; c < d0; ++c) w.add({-1, c}, -lie_l2(g, {0, a}, {0, c}).coeff({0, b}));
      } else if (is_dual0(i) && !is_dual1(j)) {
        // (alpha1_b, y1_m): -ad1*_{y1_m} alpha1_b : <ad1*,y0_c> = -alpha1(l2(y1_m,y0_c))
        int b = i, m = j - d0;
        for (int c = 0; c < d0; ++c) w.add({-1, c}, lie_l2(g, {-1, m}, {0, c}).coeff({-1, b}));
      }
      if (w.is_zero()) continue;
      BasisElement t[2] = {{0, i}, {-1, j}};
      out.l(2).accumulate(t, w);
    }
  // l3 on K0^3 and on K0^2 x K-1; l2(e0, r) = 0 throughout
  for (int i = 0; i < d1 + d0; ++i)
    for (int j = i + 1; j < d1 + d0; ++j)
      for (int k = j + 1; k < d1 + d0; ++k) {
        GradedVector w;
        int idx[3] = {i, j, k};
        int nd = is_dual0(i) + is_dual0(j) + is_dual0(k);
        if (nd == 0) {
          for (const auto& [e, q] :
               lie_l3(g, {0, i - d1}, {0, j - d1}, {0, k - d1}).terms())
            w.add({-1, d0 + e.index}, q);
        } else if (nd == 1) {
          int s = is_dual0(i) ? 0 : (is_dual0(j) ? 1 : 2);
          int b = idx[s];
          BasisElement p{0, idx[(s + 1) % 3] - d1}, q2{0, idx[(s + 2) % 3] - d1};
          // ad3*_{p,q} alpha1_b : <., z0_c> = -alpha1(l3(p,q,z0_c))
          for (int c = 0; c < d0; ++c) w.add({-1, c}, -lie_l3(g, p, q2, {0, c}).coeff({-1, b}));
        }
        if (w.is_zero()) continue;
        BasisElement t[3] = {{0, i}, {0, j}, {0, k}};
        out.l(3).accumulate(t, w);
      }
  for (int i = 0; i < d1 + d0; ++i)
    for (int j = i + 1; j < d1 + d0; ++j)
      for (int k = 0; k < d0 + d1; ++k) {
        // l3(x0+a1, y0+b1, z1+z0) = -(a1(l2(y,z1)) + b1(l2(z1,x)) + z0(l2(x,y)))/2,
        // the sign fixed by l3 = -T (the abelian table uses the same one)
        Scalar s(0);
        const Scalar half = rat(-1, 2);
        if (is_dual0(i) && !is_dual0(j) && !is_dual1(k))
          s += half * lie_l2(g, {0, j - d1}, {-1, k - d0}).coeff({-1, i});
        if (!is_dual0(i) && is_dual0(j) && !is_dual1(k))
          s -= half * lie_l2(g, {0, i - d1}, {-1, k - d0}).coeff({-1, j});
        if (!is_dual0(i) && !is_dual0(j) && is_dual1(k))
          s += half * lie_l2(g, {0, i - d1}, {0, j - d1}).coeff({0, k});
        if (is_zero(s)) continue;
        BasisElement t[3] = {{0, i}, {0, j}, {-1, k}};
        out.l(3).accumulate(t, {-2, 0}, s);
      }
  // l4(x+a1, y+b1, z+z1, u+g1) = <g1,l3(x,y,z)> - <z1,l3(x,y,u)> - <a1,l3(y,z,u)> - <b1,l3(z,x,u)>
  for (int i = 0; i < d1 + d0; ++i)
    for (int j = i + 1; j < d1 + d0; ++j)
      for (int k = j + 1; k < d1 + d0; ++k)
        for (int l = k + 1; l < d1 + d0; ++l) {
          int idx[4] = {i, j, k, l};
          int nd = is_dual0(i) + is_dual0(j) + is_dual0(k) + is_dual0(l);
          if (nd != 1) continue;
          int s = 0;
          while (!is_dual0(idx[s])) ++s;
          int b = idx[s];
          int x[3], n = 0;
          for (int t = 0; t < 4; ++t)
            if (t != s) x[n++] = idx[t] - d1;
          Scalar val(0);
          if (s == 3) val = lie_l3(g, {0, x[0]}, {0, x[1]}, {0, x[2]}).coeff({-1, b});
          if (s == 2) val = -lie_l3(g, {0, x[0]}, {0, x[1]}, {0, x[2]}).coeff({-1, b});
          if (s == 0) val = -lie_l3(g, {0, x[0]}, {0, x[1]}, {0, x[2]}).coeff({-1, b});
          if (s == 1) { // -<b1, l3(z,x,u)> with (x,z,u) = others in order
            BasisElement zz{0, x[1]}, xx{0, x[0]}, uu{0, x[2]};
            val = -lie_l3(g, zz, xx, uu).coeff({-1, b});
          }
          if (is_zero(val)) continue;
          BasisElement t[4] = {{0, i}, {0, j}, {0, k}, {0, l}};
          out.l(4).accumulate(t, {-2, 0}, val);
        }
  return out;
}

LWX2Algebra build_std_lwx_from_lie2(const LieNAlgebra& g, int delta_sign) {
  require_lie(g, 2, "build_std_lwx_from_lie2");
  if (delta_sign != 1 && delta_sign != -1) throw input_error("delta_sign must be +-1");
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1);
  // K0 = [g0 (d0), g-1^* (d1)], K-1 = [g-1 (d1), g0^* (d0)]
  LWX2Algebra a;
  a.K = GradedVectorSpace(d0 + d1, d1 + d0);
  a.partial = QMatrix(d0 + d1, d1 + d0);
  a.S = QMatrix(d0 + d1, d1 + d0);
  a.diamond.d00 = GradedMultiMap(2, 0, a.K, a.K);
  a.omega = GradedMultiMap(3, -1, a.K, a.K);
  // partial(X1 + alpha0) = l1(X1) + l1^*(alpha0)
  for (int m = 0; m < d1; ++m)
    for (const auto& [e, q] : lie_l1(g, {-1, m}).terms()) a.partial.at(e.index, m) += q;
  for (int b = 0; b < d0; ++b)
    for (int m = 0; m < d1; ++m)
      a.partial.at(d0 + m, d1 + b) += lie_l1(g, {-1, m}).coeff({0, b});
  // S = natural pairing
  for (int x = 0; x < d0; ++x) a.S.at(x, d1 + x) = 1;
  for (int m = 0; m < d1; ++m) a.S.at(d0 + m, m) = 1;

  const Scalar ds = rat(delta_sign);
  // d00 on K0 pairs: (X0_a, Y0_b) -> l2; (X0_a, beta1_m) -> L0_X beta1; skew.
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = i + 1; j < d0 + d1; ++j) {
      GradedVector w;
      if (i < d0 && j < d0) {
        for (const auto& [e, q] : lie_l2(g, {0, i}, {0, j}).terms()) w.add({0, e.index}, q);
      } else if (i < d0 && j >= d0) {
        Covector beta{-1, {{j - d0, Scalar(1)}}};
        Covector r = coadjoint_L0(g, i, beta);
        for (const auto& [m, q] : r.coeffs) w.add({0, d0 + m}, q);
      }
      if (w.is_zero()) continue;
      BasisElement t[2] = {{0, i}, {0, j}};
      a.diamond.d00.accumulate(t, w);
    }
  // d01: (X0+alpha1) <> (X1+alpha0) = l2(X0,X1) + L0_X alpha0 + iota_{X1} delta(alpha1)
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = 0; j < d1 + d0; ++j) {
      GradedVector w;
      if (i < d0 && j < d1) {
        for (const auto& [e, q] : lie_l2(g, {0, i}, {-1, j}).terms()) w.add({-1, e.index}, q);
      } else if (i < d0 && j >= d1) {
        Covector alpha0{0, {{j - d1, Scalar(1)}}};
        Covector r = coadjoint_L0(g, i, alpha0);
        for (const auto& [m, q] : r.coeffs) w.add({-1, d1 + m}, q);
      } else if (i >= d0 && j < d1) {
        // (iota_{X1_j} delta alpha1_i)(Y0) = ds * alpha1(l2(Y0, X1_j))
        for (int y = 0; y < d0; ++y) {
          Scalar s = ds * lie_l2(g, {0, y}, {-1, j}).coeff({-1, i - d0});
          w.add({-1, d1 + y}, s);
        }
      }
      if (w.is_zero()) continue;
      a.diamond.d01.add(i, j, w);
    }
  // d10: (X1+alpha0) <> (X0+alpha1) = l2(X1,X0) + L1_{X1} alpha1 - iota_{X0} delta(alpha0)
  for (int j = 0; j < d1 + d0; ++j)
    for (int i = 0; i < d0 + d1; ++i) {
      GradedVector w;
      if (j < d1 && i < d0) {
        for (const auto& [e, q] : lie_l2(g, {-1, j}, {0, i}).terms()) w.add({-1, e.index}, q);
      } else if (j < d1 && i >= d0) {
        Covector alpha1{-1, {{i - d0, Scalar(1)}}};
        Covector r = coadjoint_L1(g, j, alpha1);
        for (const auto& [m, q] : r.coeffs) w.add({-1, d1 + m}, q);
      } else if (j >= d1 && i < d0) {
        // -(iota_{X0_i} delta alpha0_j)(Y0) = -ds * alpha0(l2(X0_i, Y0))
        for (int y = 0; y < d0; ++y) {
          Scalar s = -ds * lie_l2(g, {0, i}, {0, y}).coeff({0, j - d1});
          w.add({-1, d1 + y}, s);
        }
      }
      if (w.is_zero()) continue;
      a.diamond.d10.add(j, i, w);
    }
  // Omega = l3 + cyclic L3 terms
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = i + 1; j < d0 + d1; ++j)
      for (int k = j + 1; k < d0 + d1; ++k) {
        GradedVector w;
        int idx[3] = {i, j, k};
        int nd = (i >= d0) + (j >= d0) + (k >= d0);
        if (nd == 0) {
          for (const auto& [e, q] : lie_l3(g, {0, i}, {0, j}, {0, k}).terms())
            w.add({-1, e.index}, q);
        } else if (nd == 1) {
          int s = (idx[0] >= d0) ? 0 : ((idx[1] >= d0) ? 1 : 2);
          Covector zeta{-1, {{idx[s] - d0, Scalar(1)}}};
          int p = idx[(s + 1) % 3], q2 = idx[(s + 2) % 3];
          Covector r = coadjoint_L3(g, p, q2, zeta);
          for (const auto& [m, q] : r.coeffs) w.add({-1, d1 + m}, q);
        }
        if (w.is_zero()) continue;
        BasisElement t[3] = {{0, i}, {0, j}, {0, k}};
        a.omega.accumulate(t, w);
      }
  return a;
}

void Lie2BialgebraPair::validate() const {
  if (primal.n() != 2 || dual_side.n() != 2) throw input_error("bialgebra pair needs two Lie 2-algebras");
  if (dual_side.space().dim(0) != primal.space().dim(-1) ||
      dual_side.space().dim(-1) != primal.space().dim(0))
    throw input_error("dual side dimensions must be the shifted dual of the primal");
}

LWX2Algebra double_of_lie2_bialgebra(const Lie2BialgebraPair& p) {
  p.validate();
  require_lie(p.primal, 2, "double_of_lie2_bialgebra (primal)");
  require_lie(p.dual_side, 2, "double_of_lie2_bialgebra (dual side)");
  const LieNAlgebra& g = p.primal;
  const LieNAlgebra& gd = p.dual_side;
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1);
  // start from the standard double of the primal and add the mirrored terms
  LWX2Algebra a = build_std_lwx_from_lie2(g);
  // partial += frkl1(alpha0): dual l1 on dual degree -1 = g0^*, landing in g-1^*
  for (int b = 0; b < d0; ++b)
    for (const auto& [e, q] : lie_l1(gd, {-1, b}).terms())
      a.partial.at(d0 + e.index, d1 + b) += q;
  // d00 += frkl2(alpha1,beta1) + L0^dual terms
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = i + 1; j < d0 + d1; ++j) {
      GradedVector w;
      if (i >= d0 && j >= d0) {
        for (const auto& [e, q] : lie_l2(gd, {0, i - d0}, {0, j - d0}).terms())
          w.add({0, d0 + e.index}, q);
      } else if (i < d0 && j >= d0) {
        // -Ldual0_{beta1_j} X0_i  (X0 is a covector of the dual side's degree -1)
        Covector x{-1, {{i, Scalar(1)}}};
        Covector r = coadjoint_L0(gd, j - d0, x);
        for (const auto& [m, q] : r.coeffs) w.add({0, m}, -q);
      }
      if (w.is_zero()) continue;
      BasisElement t[2] = {{0, i}, {0, j}};
      a.diamond.d00.accumulate(t, w);
    }
  // d01 += frkl2(alpha1, alpha0) + Ldual0_{alpha1} X1 + iota_{alpha0} delta*(X0)
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = 0; j < d1 + d0; ++j) {
      GradedVector w;
      if (i >= d0 && j >= d1) { // frkl2 on (dual deg 0, dual deg -1) -> dual deg -1 = g0^*
        for (const auto& [e, q] : lie_l2(gd, {0, i - d0}, {-1, j - d1}).terms())
          w.add({-1, d1 + e.index}, q);
      } else if (i >= d0 && j < d1) {
        // Ldual0_{alpha1_i} X1_j (covector of dual degree 0), lands in g-1
        Covector x{0, {{j, Scalar(1)}}};
        Covector r = coadjoint_L0(gd, i - d0, x);
        for (const auto& [m, q] : r.coeffs) w.add({-1, m}, q);
      } else if (i < d0 && j >= d1) {
        // (iota_{alpha0_j} delta* X0_i)(eta1) = ds * X0(frkl2(eta1, alpha0_j)); lands in g-1
        for (int m = 0; m < d1; ++m) {
          Scalar s = -lie_l2(gd, {0, m}, {-1, j - d1}).coeff({-1, i});
          w.add({-1, m}, s);
        }
      }
      if (w.is_zero()) continue;
      a.diamond.d01.add(i, j, w);
    }
  // d10 += frkl2(alpha0, alpha1) + Ldual1_{alpha0} X0 - iota_{alpha1} delta*(X1)
  for (int j = 0; j < d1 + d0; ++j)
    for (int i = 0; i < d0 + d1; ++i) {
      GradedVector w;
      if (j >= d1 && i >= d0) {
        for (const auto& [e, q] : lie_l2(gd, {-1, j - d1}, {0, i - d0}).terms())
          w.add({-1, d1 + e.index}, q);
      } else if (j >= d1 && i < d0) {
        // Ldual1_{alpha0_j} X0_i: covector of dual degree -1... lands in g-1
        Covector x{-1, {{i, Scalar(1)}}};
        Covector r = coadjoint_L1(gd, j - d1, x);
        for (const auto& [m, q] : r.coeffs) w.add({-1, m}, q);
      } else if (j < d1 && i >= d0) {
        // -(iota_{alpha1_i} delta* X1_j)(eta1) = +X1(frkl2(alpha1_i, eta1))
        for (int m = 0; m < d1; ++m) {
          Scalar s = lie_l2(gd, {0, i - d0}, {0, m}).coeff({0, j});
          w.add({-1, m}, s);
        }
      }
      if (w.is_zero()) continue;
      a.diamond.d10.add(j, i, w);
    }
  // Omega += frkl3(alpha1,beta1,zeta1) + cyclic Ldual3 terms
  for (int i = 0; i < d0 + d1; ++i)
    for (int j = i + 1; j < d0 + d1; ++j)
      for (int k = j + 1; k < d0 + d1; ++k) {
        GradedVector w;
        int idx[3] = {i, j, k};
        int nd = (i >= d0) + (j >= d0) + (k >= d0);
        if (nd == 3) {
          for (const auto& [e, q] :
               lie_l3(gd, {0, i - d0}, {0, j - d0}, {0, k - d0}).terms())
            w.add({-1, d1 + e.index}, q);
        } else if (nd == 2) {
          // Ldual3_{dual pair} X0 for the remaining primal slot, cyclically
          int s = (idx[0] < d0) ? 0 : ((idx[1] < d0) ? 1 : 2); // primal slot
          int a1 = idx[(s + 1) % 3] - d0, b1 = idx[(s + 2) % 3] - d0;
          Covector x{-1, {{idx[s], Scalar(1)}}};
          Covector r = coadjoint_L3(gd, a1, b1, x);
          for (const auto& [m, q] : r.coeffs) w.add({-1, m}, q);
        }
        if (w.is_zero()) continue;
        BasisElement t[3] = {{0, i}, {0, j}, {0, k}};
        a.omega.accumulate(t, w);
      }
  return a;
}

LieNAlgebra build_hom_lie2(const ThreeTermComplex& c) {
  c.validate();
  const int db = c.dim0, c0 = c.dim1, c1 = c.dim2; // B, C0, C-1
  const QMatrix& rho = c.pi0;                      // C0 -> B
  const QMatrix& l1c = c.pi1;                      // C-1 -> C0
  LieNAlgebra g(2, GradedVectorSpace(db * c0, db * c1));
  // lhat1(phi1_{s,t}) = l1c o phi1 = sum_u [l1c]_{u,t} E_{s,u}
  for (int s = 0; s < db; ++s)
    for (int t = 0; t < c1; ++t) {
      GradedVector w;
      for (int u = 0; u < c0; ++u) w.add({0, hom_idx(s, u, c0)}, l1c.at(u, t));
      BasisElement e{-1, hom_idx(s, t, c1)};
      g.l(1).accumulate(std::span(&e, 1), w);
    }
  // lhat2(phi0_{s,t}, psi0_{s',t'}) = [rho]_{s,t'} E_{s',t} - [rho]_{s',t} E_{s,t'}
  for (int i = 0; i < db * c0; ++i)
    for (int j = i + 1; j < db * c0; ++j) {
      int s = i / c0, t = i % c0, s2 = j / c0, t2 = j % c0;
      GradedVector w;
      w.add({0, hom_idx(s2, t, c0)}, rho.at(s, t2));
      w.add({0, hom_idx(s, t2, c0)}, -rho.at(s2, t));
      BasisElement tt[2] = {{0, i}, {0, j}};
      g.l(2).accumulate(tt, w);
    }
  // lhat2(phi0_{s,t}, psi1_{s',t'}) = -[rho]_{s',t} E_{s,t'} in Hom(B,C-1)
  for (int i = 0; i < db * c0; ++i)
    for (int j = 0; j < db * c1; ++j) {
      int s = i / c0, t = i % c0, s2 = j / c1, t2 = j % c1;
      GradedVector w;
      w.add({-1, hom_idx(s, t2, c1)}, -rho.at(s2, t));
      if (w.is_zero()) continue;
      BasisElement tt[2] = {{0, i}, {-1, j}};
      g.l(2).accumulate(tt, w);
    }
  return g;
}

} // namespace hsa
