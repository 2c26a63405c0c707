#include "hsa/linfty.hpp"

#include <algorithm>
#include <sstream>

namespace hsa {

LieNAlgebra::LieNAlgebra(int n, GradedVectorSpace space) : n_(n), space_(std::move(space)) {
  if (n < 1 || n > 3) throw input_error("n must be 1, 2 or 3");
  for (int d = -2; d < -(n - 1); ++d)
    if (space_.dim(d) != 0)
      throw input_error("degree " + std::to_string(d) + " must be empty for n = " + std::to_string(n));
  for (int i = 1; i <= 4; ++i) l_[i - 1] = GradedMultiMap(i, 2 - i, space_, space_);
}

bool LieNAlgebra::is_strict() const {
  return l_[2].is_zero() && l_[3].is_zero();
}

void LieNAlgebra::validate() const {
  for (int i = 1; i <= max_bracket(); ++i) {
    if (l(i).arity() != i || l(i).degree() != 2 - i)
      throw input_error("bracket l" + std::to_string(i) + " has wrong arity or degree");
    if (l(i).domain() != space_ || l(i).codomain() != space_)
      throw input_error("bracket l" + std::to_string(i) + " not defined on the algebra space");
    l(i).validate();
  }
  for (int i = max_bracket() + 1; i <= 4; ++i)
    if (!l(i).is_zero())
      throw input_error("bracket l" + std::to_string(i) + " present beyond n+1");
}

GradedVector jacobi_identity(const LieNAlgebra& alg, int k, std::span<const BasisElement> inputs) {
  if (int(inputs.size()) != k) throw input_error("jacobi_identity: input count != k");
  for (const auto& b : inputs)
    if (!alg.space().contains(b)) throw input_error("jacobi_identity: input outside space");
  std::vector<int> degrees(k);
  for (int t = 0; t < k; ++t) degrees[t] = inputs[t].degree;

  GradedVector result;
  const int maxb = alg.max_bracket();
  for (int i = 1; i <= k && i <= maxb; ++i) {
    const int j = k + 1 - i;
    if (j < 1 || j > maxb) continue;
    const GradedMultiMap& li = alg.l(i);
    const GradedMultiMap& lj = alg.l(j);
    if (li.is_zero() || lj.is_zero()) continue;
    const int pm = ((i * (j - 1)) & 1) ? -1 : 1;
    for (const auto& perm : unshuffles(i, k - i)) {
      const int ks = koszul_sign(perm, degrees);
      std::vector<BasisElement> head(i);
      for (int t = 0; t < i; ++t) head[t] = inputs[perm[t]];
      GradedVector inner = li.eval_basis(head);
      if (inner.is_zero()) continue;
      std::vector<GradedVector> args;
      args.reserve(j);
      args.push_back(std::move(inner));
      for (int t = i; t < k; ++t) args.push_back(GradedVector::basis(inputs[perm[t]]));
      GradedVector val = lj.eval(args);
      result.axpy(rat(pm * ks), val);
    }
  }
  return result;
}

namespace {

// Canonical tuples: nondecreasing in canonical order, even-degree elements
// never repeated. Calls f on each tuple.
void for_each_canonical_tuple(const GradedVectorSpace& space, int k,
                              const std::function<void(std::span<const BasisElement>)>& f) {
  std::vector<BasisElement> basis = space.basis();
  std::vector<BasisElement> tuple;
  tuple.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (int(tuple.size()) == k) {
      f(tuple);
      return;
    }
    for (std::size_t t = start; t < basis.size(); ++t) {
      tuple.push_back(basis[t]);
      std::size_t next = degree_odd(basis[t].degree) ? t : t + 1;
      self(self, next);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
}

std::string jacobi_label(int k) { return "jacobi-k" + std::to_string(k); }

} // namespace

CheckReport check_lie_n(const LieNAlgebra& alg) {
  alg.validate();
  CheckReport report;
  const int maxb = alg.max_bracket();
  for (int k = 1; k <= alg.n() + 2; ++k) {
    bool any_term = false;
    for (int i = 1; i <= k && i <= maxb && !any_term; ++i) {
      int j = k + 1 - i;
      if (j >= 1 && j <= maxb && !alg.l(i).is_zero() && !alg.l(j).is_zero()) any_term = true;
    }
    if (!any_term) continue;
    for_each_canonical_tuple(alg.space(), k, [&](std::span<const BasisElement> tuple) {
      int sum = 0;
      for (const auto& b : tuple) sum += b.degree;
      const int out_degree = sum + 3 - k;
      if (!degree_ok(out_degree) || alg.space().dim(out_degree) == 0) return;
      GradedVector r = jacobi_identity(alg, k, tuple);
      if (!r.is_zero()) report.add(jacobi_label(k), {tuple.begin(), tuple.end()}, std::move(r));
    });
  }
  return report;
}

CheckReport check_jacobi_arity(const LieNAlgebra& alg, int k) {
  CheckReport report;
  for_each_canonical_tuple(alg.space(), k, [&](std::span<const BasisElement> tuple) {
    GradedVector r = jacobi_identity(alg, k, tuple);
    if (!r.is_zero()) report.add(jacobi_label(k), {tuple.begin(), tuple.end()}, std::move(r));
  });
  return report;
}

MorphismData MorphismData::zero(const LieNAlgebra& src, const LieNAlgebra& tgt) {
  MorphismData m;
  m.source = &src;
  m.target = &tgt;
  m.F1 = GradedMultiMap(1, 0, src.space(), tgt.space());
  m.F2 = GradedMultiMap(2, -1, src.space(), tgt.space());
  m.F3 = GradedMultiMap(3, -2, src.space(), tgt.space());
  return m;
}

void MorphismData::validate() const {
  if (!source || !target) throw input_error("morphism missing source or target");
  if (source->n() != 2) throw input_error("morphism source must be a Lie 2-algebra");
  if (target->n() != 3) throw input_error("morphism target must be a Lie 3-algebra");
  if (!target->is_strict()) throw input_error("morphism target must be strict");
  if (F1.arity() != 1 || F1.degree() != 0 || F2.arity() != 2 || F2.degree() != -1 ||
      F3.arity() != 3 || F3.degree() != -2)
    throw input_error("morphism component with wrong arity or degree");
  if (F1.domain() != source->space() || F2.domain() != source->space() ||
      F3.domain() != source->space())
    throw input_error("morphism component domain mismatch");
  if (F1.codomain() != target->space() || F2.codomain() != target->space() ||
      F3.codomain() != target->space())
    throw input_error("morphism component codomain mismatch");
  F1.validate();
  F2.validate();
  F3.validate();
}

namespace {

GradedVector map1(const GradedMultiMap& f, const GradedVector& v) {
  std::array<GradedVector, 1> a{v};
  return f.eval(a);
}

GradedVector map2(const GradedMultiMap& f, const GradedVector& a, const GradedVector& b) {
  std::array<GradedVector, 2> args{a, b};
  return f.eval(args);
}

GradedVector map3(const GradedMultiMap& f, const GradedVector& a, const GradedVector& b,
                  const GradedVector& c) {
  std::array<GradedVector, 3> args{a, b, c};
  return f.eval(args);
}

} // namespace

CheckReport check_morphism(const MorphismData& m) {
  m.validate();
  CheckReport report;
  const LieNAlgebra& g = *m.source;
  const LieNAlgebra& h = *m.target;
  const GradedMultiMap &F1 = m.F1, &F2 = m.F2, &F3 = m.F3;
  const GradedMultiMap &l1 = g.l(1), &l2 = g.l(2), &l3 = g.l(3);
  const GradedMultiMap &L1 = h.l(1), &L2 = h.l(2);

  auto bas = [](const BasisElement& b) { return GradedVector::basis(b); };
  const int d0 = g.space().dim(0), d1 = g.space().dim(-1);

  // equation 2: l1' F1 = F1 l1 on A_{-1}
  for (int i = 0; i < d1; ++i) {
    BasisElement x{-1, i};
    GradedVector r = map1(L1, map1(F1, bas(x)));
    r -= map1(F1, map1(l1, bas(x)));
    if (!r.is_zero()) report.add("morphism-2", {x}, std::move(r));
  }
  // equation 3 on canonical (0,0) pairs
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      BasisElement x{0, i}, y{0, j};
      GradedVector r = map1(F1, map2(l2, bas(x), bas(y)));
      r -= map2(L2, map1(F1, bas(x)), map1(F1, bas(y)));
      r -= map1(L1, map2(F2, bas(x), bas(y)));
      if (!r.is_zero()) report.add("morphism-3", {x, y}, std::move(r));
    }
  // equation 4 on (0,-1) pairs
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d1; ++j) {
      BasisElement x{0, i}, y{-1, j};
      GradedVector r = map1(F1, map2(l2, bas(x), bas(y)));
      r -= map2(L2, map1(F1, bas(x)), map1(F1, bas(y)));
      r -= map2(F2, bas(x), map1(l1, bas(y)));
      r += map1(L1, map2(F2, bas(x), bas(y)));
      if (!r.is_zero()) report.add("morphism-4", {x, y}, std::move(r));
    }
  // equation 5 on canonical (-1,-1) pairs (repeats allowed)
  for (int i = 0; i < d1; ++i)
    for (int j = i; j < d1; ++j) {
      BasisElement x{-1, i}, y{-1, j};
      GradedVector r = map2(L2, map1(F1, bas(x)), map1(F1, bas(y)));
      r -= map2(F2, map1(l1, bas(x)), bas(y));
      r += map2(F2, bas(x), map1(l1, bas(y)));
      if (!r.is_zero()) report.add("morphism-5", {x, y}, std::move(r));
    }
  // equation 6 on canonical (0,0,0) triples, cyclic sum
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k) {
        BasisElement t[3] = {{0, i}, {0, j}, {0, k}};
        GradedVector r;
        for (int c = 0; c < 3; ++c) {
          const BasisElement &a = t[c], &b = t[(c + 1) % 3], &cc = t[(c + 2) % 3];
          r += map2(L2, map1(F1, bas(a)), map2(F2, bas(b), bas(cc)));
          r -= map2(F2, map2(l2, bas(a), bas(b)), bas(cc));
        }
        r -= map1(F1, map3(l3, bas(t[0]), bas(t[1]), bas(t[2])));
        r -= map1(L1, map3(F3, bas(t[0]), bas(t[1]), bas(t[2])));
        if (!r.is_zero()) report.add("morphism-6", {t[0], t[1], t[2]}, std::move(r));
      }
  // equation 7 on (0,0,-1) with canonical (0,0) part
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = 0; k < d1; ++k) {
        BasisElement x{0, i}, y{0, j}, z{-1, k};
        GradedVector r = map2(L2, map1(F1, bas(x)), map2(F2, bas(y), bas(z)));
        r += map2(L2, map1(F1, bas(y)), map2(F2, bas(z), bas(x)));
        r += map2(L2, map1(F1, bas(z)), map2(F2, bas(x), bas(y)));
        r -= map2(F2, map2(l2, bas(x), bas(y)), bas(z));
        r -= map2(F2, map2(l2, bas(y), bas(z)), bas(x));
        r -= map2(F2, map2(l2, bas(z), bas(x)), bas(y));
        r -= map3(F3, bas(x), bas(y), map1(l1, bas(z)));
        if (!r.is_zero()) report.add("morphism-7", {x, y, z}, std::move(r));
      }
  // equation 8 on canonical (0,0,0,0) 4-tuples
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k)
        for (int l = k + 1; l < d0; ++l) {
          BasisElement t[4] = {{0, i}, {0, j}, {0, k}, {0, l}};
          GradedVector r;
          for (int a = 0; a < 4; ++a) {
            int rest[3], n = 0;
            for (int b = 0; b < 4; ++b)
              if (b != a) rest[n++] = b;
            Scalar sgn = rat((a & 1) ? -1 : 1); // (-1)^{i+1} with i = a+1
            GradedVector inner = map3(l3, bas(t[rest[0]]), bas(t[rest[1]]), bas(t[rest[2]]));
            r.axpy(sgn, map2(F2, bas(t[a]), inner));
            r.axpy(sgn, map2(L2, map1(F1, bas(t[a])),
                             map3(F3, bas(t[rest[0]]), bas(t[rest[1]]), bas(t[rest[2]]))));
          }
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
              int rest[2], n = 0;
              for (int c = 0; c < 4; ++c)
                if (c != a && c != b) rest[n++] = c;
              Scalar sgn = rat(((a + b) & 1) ? -1 : 1); // (-1)^{i+j}, i=a+1, j=b+1
              GradedVector x = map2(l2, bas(t[a]), bas(t[b]));
              r.axpy(sgn, map3(F3, x, bas(t[rest[0]]), bas(t[rest[1]])));
              r.axpy(-sgn * rat(1, 2), map2(L2, map2(F2, bas(t[a]), bas(t[b])),
                                            map2(F2, bas(t[rest[0]]), bas(t[rest[1]]))));
            }
          if (!r.is_zero()) report.add("morphism-8", {t[0], t[1], t[2], t[3]}, std::move(r));
        }

  bool only8 = !report.pass;
  for (const auto& f : report.failures)
    if (f.identity != "morphism-8") only8 = false;
  if (only8)
    report.note = "equation 8 (arity-4 coherence) is the sole failing identity; its cyclic sum "
                  "is read as the standard L-infinity morphism expansion, and other readings of "
                  "the displayed sum exist";
  return report;
}

void Covector::add(int index, const Scalar& c) {
  if (hsa::is_zero(c)) return;
  auto it = std::lower_bound(coeffs.begin(), coeffs.end(), index,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != coeffs.end() && it->first == index) {
    it->second += c;
    if (hsa::is_zero(it->second)) coeffs.erase(it);
  } else {
    coeffs.insert(it, {index, c});
  }
}

Scalar Covector::coeff(int index) const {
  auto it = std::lower_bound(coeffs.begin(), coeffs.end(), index,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != coeffs.end() && it->first == index) return it->second;
  return Scalar(0);
}

namespace {

// <result, Y> = -<alpha, bracket(..., Y)> with Y over the basis of y_degree.
Covector pair_against(const LieNAlgebra& g, const Covector& alpha, int y_degree,
                      const std::function<GradedVector(const BasisElement&)>& bracket) {
  Covector out;
  out.degree = y_degree;
  for (int y = 0; y < g.space().dim(y_degree); ++y) {
    GradedVector v = bracket({y_degree, y});
    Scalar c(0);
    for (const auto& [idx, a] : alpha.coeffs) c -= a * v.coeff({alpha.degree, idx});
    out.add(y, c);
  }
  return out;
}

} // namespace

Covector coadjoint_L0(const LieNAlgebra& g, int actor0, const Covector& alpha) {
  if (alpha.degree != 0 && alpha.degree != -1)
    throw input_error("L0 acts on duals of degree 0 or -1");
  return pair_against(g, alpha, alpha.degree, [&](const BasisElement& y) {
    BasisElement t[2] = {{0, actor0}, y};
    return g.l(2).eval_basis(t);
  });
}

Covector coadjoint_L1(const LieNAlgebra& g, int actor1, const Covector& alpha1) {
  if (alpha1.degree != -1) throw input_error("L1 acts on duals of degree -1");
  return pair_against(g, alpha1, 0, [&](const BasisElement& y) {
    BasisElement t[2] = {{-1, actor1}, y};
    return g.l(2).eval_basis(t);
  });
}

Covector coadjoint_L3(const LieNAlgebra& g, int a0, int b0, const Covector& alpha1) {
  if (alpha1.degree != -1) throw input_error("L3 acts on duals of degree -1");
  return pair_against(g, alpha1, 0, [&](const BasisElement& y) {
    BasisElement t[3] = {{0, a0}, {0, b0}, y};
    return g.l(3).eval_basis(t);
  });
}

Covector coadjoint(CoadjointKind kind, const LieNAlgebra& g, std::span<const int> actors,
                   const Covector& alpha) {
  switch (kind) {
    case CoadjointKind::L0:
      if (actors.size() != 1) throw input_error("L0 takes one actor");
      return coadjoint_L0(g, actors[0], alpha);
    case CoadjointKind::L1:
      if (actors.size() != 1) throw input_error("L1 takes one actor");
      return coadjoint_L1(g, actors[0], alpha);
    case CoadjointKind::L3:
      if (actors.size() != 2) throw input_error("L3 takes two actors");
      return coadjoint_L3(g, actors[0], actors[1], alpha);
  }
  throw input_error("unknown coadjoint kind");
}

} // namespace hsa
