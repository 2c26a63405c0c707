#include "hsa/multimap.hpp"

#include <algorithm>

namespace hsa {

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  const int k = int(perm.size());
  if (int(degrees.size()) != k) throw input_error("koszul_sign: size mismatch");
  std::vector<char> seen(k, 0);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) throw input_error("koszul_sign: malformed permutation");
    seen[p] = 1;
  }
  // Bubble-sorting the arrangement back to identity performs one adjacent
  // swap per inversion; each swap of (original) elements u,v contributes
  // -(-1)^{deg(u)deg(v)}.
  int sign = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (perm[i] > perm[j]) {
        bool both_odd = degree_odd(degrees[perm[i]]) && degree_odd(degrees[perm[j]]);
        if (!both_odd) sign = -sign;
      }
  return sign;
}

std::pair<std::vector<BasisElement>, int> canonicalize(std::vector<BasisElement> tuple) {
  int sign = 1;
  // Insertion sort; swapping adjacent (a,b) contributes -(-1)^{deg a * deg b}.
  const int k = int(tuple.size());
  for (int i = 1; i < k; ++i)
    for (int j = i; j > 0 && canonical_less(tuple[j], tuple[j - 1]); --j) {
      bool both_odd = degree_odd(tuple[j].degree) && degree_odd(tuple[j - 1].degree);
      if (!both_odd) sign = -sign;
      std::swap(tuple[j], tuple[j - 1]);
    }
  for (int i = 1; i < k; ++i)
    if (tuple[i] == tuple[i - 1] && !degree_odd(tuple[i].degree)) return {std::move(tuple), 0};
  return {std::move(tuple), sign};
}

std::vector<std::vector<int>> unshuffles(int i, int j) {
  if (i < 1 || j < 0) throw input_error("unshuffles: need i >= 1, j >= 0");
  const int k = i + j;
  std::vector<std::vector<int>> out;
  std::vector<int> pick(i);
  for (int t = 0; t < i; ++t) pick[t] = t;
  while (true) {
    std::vector<int> perm;
    perm.reserve(k);
    perm.insert(perm.end(), pick.begin(), pick.end());
    std::vector<char> in(k, 0);
    for (int p : pick) in[p] = 1;
    for (int t = 0; t < k; ++t)
      if (!in[t]) perm.push_back(t);
    out.push_back(std::move(perm));
    // next i-subset of {0..k-1} in lexicographic order
    int t = i - 1;
    while (t >= 0 && pick[t] == k - i + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < i; ++s) pick[s] = pick[s - 1] + 1;
  }
  return out;
}

GradedMultiMap::GradedMultiMap(int arity, int degree, GradedVectorSpace domain,
                               GradedVectorSpace codomain)
    : arity_(arity), degree_(degree), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (arity < 1 || arity > kMaxArity) throw input_error("multimap arity out of range");
}

GradedMultiMap::Key GradedMultiMap::encode(std::span<const BasisElement> t) const {
  Key k{-1, -1, -1, -1};
  for (int i = 0; i < int(t.size()); ++i) k[i] = domain_.ordinal(t[i]);
  return k;
}

std::vector<BasisElement> GradedMultiMap::decode(const Key& k) const {
  std::vector<BasisElement> t;
  for (int i = 0; i < arity_; ++i) t.push_back(domain_.from_ordinal(k[i]));
  return t;
}

void GradedMultiMap::accumulate(std::span<const BasisElement> tuple, const GradedVector& value) {
  if (value.is_zero()) return;
  if (int(tuple.size()) != arity_) throw input_error("multimap: arity mismatch");
  for (const auto& b : tuple)
    if (!domain_.contains(b)) throw input_error("multimap: input " + to_string(b) + " outside domain");
  auto [canon, sign] = canonicalize({tuple.begin(), tuple.end()});
  if (sign == 0) return;
  Key key = encode(canon);
  auto& slot = table_[key];
  slot.axpy(Scalar(sign), value);
  if (slot.is_zero()) table_.erase(key);
}

void GradedMultiMap::accumulate(std::span<const BasisElement> tuple, const BasisElement& out,
                                const Scalar& c) {
  accumulate(tuple, GradedVector::basis(out, c));
}

const GradedVector* GradedMultiMap::find(std::span<const BasisElement> canonical_tuple) const {
  auto it = table_.find(encode(canonical_tuple));
  return it == table_.end() ? nullptr : &it->second;
}

GradedVector GradedMultiMap::eval_basis(std::span<const BasisElement> tuple) const {
  GradedVector out;
  if (int(tuple.size()) != arity_) throw input_error("multimap: arity mismatch");
  auto [canon, sign] = canonicalize({tuple.begin(), tuple.end()});
  if (sign == 0) return out;
  if (const GradedVector* v = find(canon)) out.axpy(Scalar(sign), *v);
  return out;
}

GradedVector GradedMultiMap::eval(std::span<const GradedVector> args) const {
  if (int(args.size()) != arity_) throw input_error("multimap: arity mismatch");
  GradedVector out;
  std::vector<BasisElement> tuple(arity_);
  Scalar coeff;
  // cartesian expansion over the sparse supports
  std::vector<std::size_t> idx(arity_, 0);
  for (const auto& a : args)
    if (a.is_zero()) return out;
  auto term = [&](int pos) { return args[pos].terms()[idx[pos]]; };
  while (true) {
    coeff = Scalar(1);
    for (int p = 0; p < arity_; ++p) {
      tuple[p] = term(p).first;
      coeff *= term(p).second;
    }
    auto [canon, sign] = canonicalize(tuple);
    if (sign != 0)
      if (const GradedVector* v = find(canon)) out.axpy(Scalar(sign) * coeff, *v);
    int p = arity_ - 1;
    while (p >= 0 && ++idx[p] == args[p].terms().size()) {
      idx[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

void GradedMultiMap::validate() const {
  for (const auto& [key, val] : table_) {
    auto t = decode(key);
    int sum = 0;
    for (const auto& b : t) {
      if (!domain_.contains(b)) throw input_error("multimap entry input outside domain");
      sum += b.degree;
    }
    auto [canon, sign] = canonicalize(t);
    if (sign != 1 || canon != t) throw input_error("multimap stores a non-canonical key");
    int d;
    if (!val.homogeneous(&d)) throw input_error("multimap entry output not homogeneous");
    if (!val.is_zero() && d != sum + degree_)
      throw input_error("multimap entry output degree violates the map degree");
    for (const auto& [b, q] : val.terms())
      if (!codomain_.contains(b)) throw input_error("multimap entry output outside codomain");
  }
}

} // namespace hsa
