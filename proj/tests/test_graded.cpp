#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsa/multimap.hpp"

#include <random>

using namespace hsa;

TEST_CASE("rational scalars are exact and canonical") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  Scalar q = parse_rational("7/21");
  CHECK(q == rat(1, 3));
  CHECK(parse_rational("-4") == rat(-4));
  // round-trip: a/b + c/d reconstructed exactly
  Scalar s = rat(1, 3) + rat(1, 6);
  CHECK(s == rat(1, 2));
  CHECK(parse_rational(to_string(s)) == s);
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("x"), input_error);
  CHECK_THROWS_AS(parse_rational("1.5"), input_error);
}

TEST_CASE("koszul_sign basics") {
  std::vector<int> id{0, 1}, sw{1, 0};
  CHECK(koszul_sign(id, std::vector<int>{0, 0}) == 1);
  CHECK(koszul_sign(sw, std::vector<int>{0, 0}) == -1);
  CHECK(koszul_sign(sw, std::vector<int>{-1, -1}) == 1);
  CHECK(koszul_sign(sw, std::vector<int>{0, -1}) == -1);
  CHECK(koszul_sign(sw, std::vector<int>{-2, -2}) == -1);
  CHECK_THROWS_AS(koszul_sign(std::vector<int>{0, 0}, std::vector<int>{0, 0}), input_error);
}

TEST_CASE("koszul_sign is multiplicative under composition") {
  // sign(sigma o tau, deg) = sign(sigma, tau-permuted deg) * sign(tau, deg),
  // exhaustively for k <= 4 over all degree patterns, sampled for k = 5.
  auto all_perms = [](int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  };
  std::mt19937_64 rng(7);
  for (int k = 2; k <= 5; ++k) {
    auto perms = all_perms(k);
    std::vector<std::vector<int>> degs;
    int npat = 1;
    for (int i = 0; i < k; ++i) npat *= 3;
    for (int pat = 0; pat < npat; ++pat) {
      std::vector<int> d(k);
      int p = pat;
      for (int i = 0; i < k; ++i, p /= 3) d[i] = -(p % 3);
      degs.push_back(std::move(d));
    }
    const bool exhaustive = k <= 4;
    const int samples = exhaustive ? 0 : 4000;
    auto one = [&](const std::vector<int>& sigma, const std::vector<int>& tau,
                   const std::vector<int>& d) {
      std::vector<int> comp(k), dtau(k);
      // (sigma o tau)(i) = tau[sigma[i]]: X_{tau(sigma(i))} arrangement
      for (int i = 0; i < k; ++i) comp[i] = tau[sigma[i]];
      for (int i = 0; i < k; ++i) dtau[i] = d[tau[i]];
      int lhs = koszul_sign(comp, d);
      int rhs = koszul_sign(sigma, dtau) * koszul_sign(tau, d);
      CHECK(lhs == rhs);
    };
    if (exhaustive) {
      for (const auto& sigma : perms)
        for (const auto& tau : perms)
          for (const auto& d : degs) one(sigma, tau, d);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      std::uniform_int_distribution<std::size_t> pickd(0, degs.size() - 1);
      for (int s = 0; s < samples; ++s) one(perms[pick(rng)], perms[pick(rng)], degs[pickd(rng)]);
    }
  }
}

TEST_CASE("canonicalize") {
  auto [t1, s1] = canonicalize({{0, 1}, {0, 0}});
  CHECK(t1 == std::vector<BasisElement>{{0, 0}, {0, 1}});
  CHECK(s1 == -1);
  auto [t2, s2] = canonicalize({{0, 0}, {0, 0}});
  CHECK(s2 == 0);
  auto [t3, s3] = canonicalize({{-1, 0}, {-1, 0}});
  CHECK(s3 == 1);
  CHECK(t3 == std::vector<BasisElement>{{-1, 0}, {-1, 0}});
  // idempotent
  auto [t4, s4] = canonicalize(t1);
  CHECK(t4 == t1);
  CHECK(s4 == 1);
  // degree order: 0 before -1 before -2
  auto [t5, s5] = canonicalize({{-2, 0}, {0, 0}, {-1, 3}});
  CHECK(t5 == std::vector<BasisElement>{{0, 0}, {-1, 3}, {-2, 0}});
  CHECK(s5 != 0);
}

TEST_CASE("unshuffles") {
  auto u11 = unshuffles(1, 1);
  REQUIRE(u11.size() == 2);
  CHECK(u11[0] == std::vector<int>{0, 1});
  CHECK(u11[1] == std::vector<int>{1, 0});
  CHECK(unshuffles(2, 1).size() == 3);
  CHECK(unshuffles(2, 2).size() == 6);
  CHECK(unshuffles(3, 2).size() == 10);
  for (const auto& p : unshuffles(2, 3)) {
    CHECK(p[0] < p[1]);
    CHECK(p[2] < p[3]);
    CHECK(p[3] < p[4]);
  }
}

TEST_CASE("graded vector arithmetic") {
  GradedVector v;
  v.add({0, 1}, rat(1, 2));
  v.add({-1, 0}, rat(3));
  v.add({0, 1}, rat(-1, 2));
  CHECK(v.size() == 1);
  CHECK(v.coeff({-1, 0}) == rat(3));
  int d = 5;
  CHECK(v.homogeneous(&d));
  CHECK(d == -1);
  v.add({0, 0}, rat(1));
  CHECK_FALSE(v.homogeneous());
  GradedVector w = v;
  w *= rat(-1);
  w += v;
  CHECK(w.is_zero());
}

TEST_CASE("multimap eval and antisymmetry") {
  GradedVectorSpace V(2, 2);
  GradedMultiMap l2(2, 0, V, V);
  BasisElement t[2] = {{0, 0}, {0, 1}};
  l2.accumulate(t, {0, 0}, rat(1));
  BasisElement tm[2] = {{0, 0}, {-1, 0}};
  l2.accumulate(tm, {-1, 1}, rat(2));
  BasisElement todd[2] = {{-1, 0}, {-1, 1}};
  l2.accumulate(todd, GradedVector{}); // zero value: no entry
  l2.validate();

  // even antisymmetry: eval(l2, [x,x]) = 0
  GradedVector x = GradedVector::basis({0, 0});
  std::array<GradedVector, 2> xx{x, x};
  CHECK(l2.eval(xx).is_zero());
  // swap of evens flips the sign
  BasisElement sw[2] = {{0, 1}, {0, 0}};
  CHECK(l2.eval_basis(sw).coeff({0, 0}) == rat(-1));
  // odd symmetry: eval(l2, [a,b]) = +eval(l2, [b,a]) for degree -1 inputs
  GradedMultiMap l2b(2, 2, V, V);
  BasisElement ab[2] = {{-1, 0}, {-1, 1}};
  l2b.accumulate(ab, {0, 0}, rat(5));
  BasisElement ba[2] = {{-1, 1}, {-1, 0}};
  CHECK(l2b.eval_basis(ab) == l2b.eval_basis(ba));
  // multilinearity: zero argument kills the value
  std::array<GradedVector, 2> withzero{x, GradedVector{}};
  CHECK(l2.eval(withzero).is_zero());
}

TEST_CASE("eval respects Koszul reordering on random vectors") {
  std::mt19937_64 rng(11);
  GradedVectorSpace V(2, 2, 1);
  GradedMultiMap m(3, -1, V, V);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto basis = V.basis();
  // random entries
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BasisElement> t{basis[rng() % basis.size()], basis[rng() % basis.size()],
                                basis[rng() % basis.size()]};
    int sum = t[0].degree + t[1].degree + t[2].degree;
    int outdeg = sum - 1;
    if (!degree_ok(outdeg) || V.dim(outdeg) == 0) continue;
    auto [canon, sign] = canonicalize(t);
    if (sign == 0) continue;
    m.accumulate(t, {outdeg, int(rng() % V.dim(outdeg))}, rat(coeff(rng)));
  }
  m.validate();
  // permuting basis arguments multiplies the value by the wedge sign
  for (int trial = 0; trial < 200; ++trial) {
    BasisElement a = basis[rng() % basis.size()], b = basis[rng() % basis.size()],
                 c = basis[rng() % basis.size()];
    std::vector<BasisElement> t{a, b, c};
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<BasisElement> tp{t[perm[0]], t[perm[1]], t[perm[2]]};
    std::vector<int> degrees{a.degree, b.degree, c.degree};
    int sign = koszul_sign(perm, degrees);
    GradedVector lhs = m.eval_basis(tp);
    GradedVector rhs = m.eval_basis(t);
    rhs *= rat(sign);
    CHECK(lhs == rhs);
  }
}
