#include "hsa/gallery.hpp"

namespace hsa {

LieNAlgebra make_sl2() {
  LieNAlgebra g(1, GradedVectorSpace(3, 0));
  // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  BasisElement e{0, 0}, f{0, 1}, h{0, 2};
  BasisElement ef[2] = {e, f}, eh[2] = {e, h}, fh[2] = {f, h};
  g.l(2).accumulate(ef, h, rat(1));
  g.l(2).accumulate(eh, e, rat(-2));
  g.l(2).accumulate(fh, f, rat(2));
  return g;
}

QMatrix sl2_trace_form() {
  // trace form of the defining representation: B(e,f)=1, B(h,h)=2
  QMatrix B(3, 3);
  B.at(0, 1) = 1;
  B.at(1, 0) = 1;
  B.at(2, 2) = 2;
  return B;
}

LieNAlgebra make_so3() {
  LieNAlgebra g(1, GradedVectorSpace(3, 0));
  BasisElement x{0, 0}, y{0, 1}, z{0, 2};
  BasisElement xy[2] = {x, y}, yz[2] = {y, z}, xz[2] = {x, z};
  g.l(2).accumulate(xy, z, rat(1));
  g.l(2).accumulate(yz, x, rat(1));
  g.l(2).accumulate(xz, y, rat(-1)); // [z,x] = y
  return g;
}

QMatrix so3_identity_form() { return QMatrix::identity(3); }

LieNAlgebra make_aff2() {
  LieNAlgebra g(1, GradedVectorSpace(2, 0));
  BasisElement t[2] = {{0, 0}, {0, 1}};
  g.l(2).accumulate(t, {0, 0}, rat(1)); // [e1,e2] = e1
  return g;
}

std::pair<LieNAlgebra, QMatrix> make_semidirect_coadjoint(const LieNAlgebra& h) {
  if (h.n() != 1) throw input_error("semidirect product needs a Lie algebra");
  const int d = h.space().dim(0);
  LieNAlgebra g(1, GradedVectorSpace(2 * d, 0));
  auto hl2 = [&](int a, int b) {
    BasisElement t[2] = {{0, a}, {0, b}};
    return h.l(2).eval_basis(t);
  };
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      GradedVector v;
      for (const auto& [e, q] : hl2(a, b).terms()) v.add({0, e.index}, q);
      BasisElement t[2] = {{0, a}, {0, b}};
      g.l(2).accumulate(t, v);
    }
  // [x_a, f_b] = ad*_{x_a} f_b: <., x_c> = -f_b([x_a, x_c])
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      GradedVector v;
      for (int c = 0; c < d; ++c) v.add({0, d + c}, -hl2(a, c).coeff({0, b}));
      BasisElement t[2] = {{0, a}, {0, d + b}};
      g.l(2).accumulate(t, v);
    }
  QMatrix B(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    B.at(i, d + i) = 1;
    B.at(d + i, i) = 1;
  }
  return {std::move(g), std::move(B)};
}

LieNAlgebra make_strict2() {
  LieNAlgebra g(2, GradedVectorSpace(2, 1));
  BasisElement m{-1, 0};
  g.l(1).accumulate(std::span(&m, 1), {0, 1}, rat(1)); // l1(m) = e2
  BasisElement t12[2] = {{0, 0}, {0, 1}};
  g.l(2).accumulate(t12, {0, 1}, rat(1)); // l2(e1,e2) = e2
  BasisElement t1m[2] = {{0, 0}, {-1, 0}};
  g.l(2).accumulate(t1m, {-1, 0}, rat(1)); // l2(e1,m) = m
  return g;
}

ThreeTermComplex make_complex(int d0, int d1, int d2) {
  ThreeTermComplex c(d0, d1, d2);
  // staircase: pi0 is the identity on the first r0 coordinates of E-1, pi1
  // fills part of ker(pi0); ranks split so both maps are nonzero whenever the
  // dimensions allow.
  int r1 = std::min(d2, (d1 + 1) / 2);
  int r0 = std::min(d0, d1 - r1);
  for (int i = 0; i < r0; ++i) c.pi0.at(i, i) = 1;
  for (int i = 0; i < r1; ++i) c.pi1.at(r0 + i, i) = 1;
  c.validate();
  return c;
}

LieNAlgebra abelian_lie3(const ThreeTermComplex& c) {
  c.validate();
  LieNAlgebra g(3, GradedVectorSpace(c.dim0, c.dim1, c.dim2));
  for (int j = 0; j < c.dim1; ++j) {
    GradedVector v;
    for (int i = 0; i < c.dim0; ++i) v.add({0, i}, c.pi0.at(i, j));
    BasisElement b{-1, j};
    g.l(1).accumulate(std::span(&b, 1), v);
  }
  for (int j = 0; j < c.dim2; ++j) {
    GradedVector v;
    for (int i = 0; i < c.dim1; ++i) v.add({-1, i}, c.pi1.at(i, j));
    BasisElement b{-2, j};
    g.l(1).accumulate(std::span(&b, 1), v);
  }
  return g;
}

namespace {

StructureFile wrap(Kind kind, auto data) {
  StructureFile f;
  f.kind = kind;
  f.data = std::move(data);
  return f;
}

StructureFile lie1_with_form(LieNAlgebra g, QMatrix B) {
  StructureFile f = wrap(Kind::LieN, std::move(g));
  f.form0 = std::move(B);
  return f;
}

StructureFile adjoint_morphism_file() {
  LieNAlgebra g = make_strict2();
  auto [c, F] = adjoint_superconnection(g);
  EndLie3 end(c);
  MorphismFile m;
  m.source = g.space();
  m.target = end.algebra().space();
  m.F1 = GradedMultiMap(1, 0, m.source, m.target);
  m.F2 = GradedMultiMap(2, -1, m.source, m.target);
  m.F3 = GradedMultiMap(3, -2, m.source, m.target);
  for (int i = 0; i < int(F.F0.size()); ++i) {
    BasisElement b{0, i};
    m.F1.accumulate(std::span(&b, 1), end.embed(F.F0[i]));
  }
  for (int i = 0; i < int(F.F1.size()); ++i) {
    BasisElement b{-1, i};
    m.F1.accumulate(std::span(&b, 1), end.embed(F.F1[i]));
  }
  return wrap(Kind::Morphism, std::move(m));
}

StructureFile strict2_complex_file() {
  LieNAlgebra g = make_strict2();
  auto [c, F] = adjoint_superconnection(g);
  (void)F;
  return wrap(Kind::Complex3, std::move(c));
}

struct Entry {
  const char* name;
  StructureFile (*make)();
};

const Entry kGallery[] = {
    {"sl2", [] { return lie1_with_form(make_sl2(), sl2_trace_form()); }},
    {"so3", [] { return lie1_with_form(make_so3(), so3_identity_form()); }},
    {"aff2", [] { return wrap(Kind::LieN, make_aff2()); }},
    {"semidirect-aff2",
     [] {
       auto [g, B] = make_semidirect_coadjoint(make_aff2());
       return lie1_with_form(std::move(g), std::move(B));
     }},
    {"abelian-lie2-21", [] { return wrap(Kind::Lie2, LieNAlgebra(2, GradedVectorSpace(2, 1))); }},
    {"strict2", [] { return wrap(Kind::Lie2, make_strict2()); }},
    {"string-so3",
     [] {
       return wrap(Kind::Lie2,
                   string_lie2_from_quadratic_lie_algebra(make_so3(), so3_identity_form()));
     }},
    {"string-sl2",
     [] {
       return wrap(Kind::Lie2,
                   string_lie2_from_quadratic_lie_algebra(make_sl2(), sl2_trace_form()));
     }},
    {"string-semidirect2",
     [] {
       auto [g, B] = make_semidirect_coadjoint(make_aff2());
       return wrap(Kind::Lie2, string_lie2_from_quadratic_lie_algebra(g, B));
     }},
    {"quad-so3", [] { return wrap(Kind::QuadLie2, quad_lie2_from_lie_algebra(make_so3())); }},
    {"quad-sl2", [] { return wrap(Kind::QuadLie2, quad_lie2_from_lie_algebra(make_sl2())); }},
    {"quad-semidirect2",
     [] {
       auto [g, B] = make_semidirect_coadjoint(make_aff2());
       (void)B;
       return wrap(Kind::QuadLie2, quad_lie2_from_lie_algebra(g));
     }},
    {"quad-abelian3",
     [] {
       return wrap(Kind::QuadLie2,
                   quad_lie2_from_lie_algebra(LieNAlgebra(1, GradedVectorSpace(3, 0))));
     }},
    {"complex-111", [] { return wrap(Kind::Complex3, make_complex(1, 1, 1)); }},
    {"complex-121", [] { return wrap(Kind::Complex3, make_complex(1, 2, 1)); }},
    {"complex-221", [] { return wrap(Kind::Complex3, make_complex(2, 2, 1)); }},
    {"complex-222", [] { return wrap(Kind::Complex3, make_complex(2, 2, 2)); }},
    {"complex-strict2", strict2_complex_file},
    {"abelian3-111", [] { return wrap(Kind::LieN, abelian_lie3(make_complex(1, 1, 1))); }},
    {"abelian3-121", [] { return wrap(Kind::LieN, abelian_lie3(make_complex(1, 2, 1))); }},
    {"abelian3-221", [] { return wrap(Kind::LieN, abelian_lie3(make_complex(2, 2, 1))); }},
    {"abelian3-222", [] { return wrap(Kind::LieN, abelian_lie3(make_complex(2, 2, 2))); }},
    {"end-111", [] { return wrap(Kind::LieN, build_end_lie3(make_complex(1, 1, 1))); }},
    {"higher-string-so3",
     [] { return wrap(Kind::LieN, build_higher_string(quad_lie2_from_lie_algebra(make_so3()))); }},
    {"higher-string-sl2",
     [] { return wrap(Kind::LieN, build_higher_string(quad_lie2_from_lie_algebra(make_sl2()))); }},
    {"higher-string-semidirect2",
     [] {
       auto [g, B] = make_semidirect_coadjoint(make_aff2());
       (void)B;
       return wrap(Kind::LieN, build_higher_string(quad_lie2_from_lie_algebra(g)));
     }},
    {"higher-string-abelian3",
     [] {
       return wrap(Kind::LieN, build_higher_string(quad_lie2_from_lie_algebra(
                                   LieNAlgebra(1, GradedVectorSpace(3, 0)))));
     }},
    {"embed-string-so3",
     [] {
       return wrap(Kind::LieN, embed_lie2_as_lie3(string_lie2_from_quadratic_lie_algebra(
                                   make_so3(), so3_identity_form())));
     }},
    {"lwx-string-so3",
     [] {
       return wrap(Kind::Lwx2, build_std_lwx_from_lie2(string_lie2_from_quadratic_lie_algebra(
                                   make_so3(), so3_identity_form())));
     }},
    {"elwx-string-so3",
     [] {
       ELWX2Algebra a = build_elwx_from_lie3(embed_lie2_as_lie3(
           string_lie2_from_quadratic_lie_algebra(make_so3(), so3_identity_form())));
       a.D.clear();
       return wrap(Kind::Elwx2, std::move(a));
     }},
    {"bialgebra-string-so3-trivial",
     [] {
       Lie2BialgebraPair p;
       p.primal = string_lie2_from_quadratic_lie_algebra(make_so3(), so3_identity_form());
       p.dual_side = LieNAlgebra(2, GradedVectorSpace(1, 3));
       return wrap(Kind::BialgebraPair, std::move(p));
     }},
    {"morphism-adjoint-strict2", adjoint_morphism_file},
};

} // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (const auto& e : kGallery) out.push_back(e.name);
  return out;
}

StructureFile gallery_structure(const std::string& name) {
  for (const auto& e : kGallery)
    if (name == e.name) return e.make();
  throw input_error("unknown gallery name '" + name + "'");
}

std::string gallery_emit(const std::string& name) {
  return serialize_structure(gallery_structure(name));
}

} // namespace hsa
