#include "hsa/graded.hpp"

#include <algorithm>
#include <sstream>

namespace hsa {

std::string to_string(const BasisElement& b) {
  std::ostringstream os;
  os << '(' << b.degree << ',' << b.index << ')';
  return os.str();
}

GradedVectorSpace::GradedVectorSpace(int d0, int d1, int d2) {
  set_dim(0, d0);
  set_dim(-1, d1);
  set_dim(-2, d2);
}

int GradedVectorSpace::dim(int degree) const {
  if (!degree_ok(degree)) return 0;
  return dims_[-degree];
}

void GradedVectorSpace::set_dim(int degree, int d) {
  if (!degree_ok(degree))
    throw input_error("degree " + std::to_string(degree) + " outside {0,-1,-2}");
  if (d < 0) throw input_error("negative dimension");
  dims_[-degree] = d;
}

int GradedVectorSpace::min_degree() const {
  for (int k = 2; k >= 0; --k)
    if (dims_[k] > 0) return -k;
  return 0;
}

int GradedVectorSpace::ordinal(const BasisElement& b) const {
  int ord = b.index;
  for (int k = 0; k < -b.degree; ++k) ord += dims_[k];
  return ord;
}

BasisElement GradedVectorSpace::from_ordinal(int ord) const {
  for (int k = 0; k <= 2; ++k) {
    if (ord < dims_[k]) return {-k, ord};
    ord -= dims_[k];
  }
  throw input_error("ordinal out of range");
}

std::vector<BasisElement> GradedVectorSpace::basis() const {
  std::vector<BasisElement> out;
  out.reserve(total_dim());
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < dims_[k]; ++i) out.push_back({-k, i});
  return out;
}

GradedVector GradedVector::basis(const BasisElement& b, Scalar c) {
  GradedVector v;
  v.add(b, c);
  return v;
}

void GradedVector::add(const BasisElement& b, const Scalar& c) {
  if (hsa::is_zero(c)) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const auto& t, const BasisElement& e) { return canonical_less(t.first, e); });
  if (it != terms_.end() && it->first == b) {
    it->second += c;
    if (hsa::is_zero(it->second)) terms_.erase(it);
  } else {
    terms_.insert(it, {b, c});
  }
}

void GradedVector::axpy(const Scalar& c, const GradedVector& v) {
  if (hsa::is_zero(c)) return;
  for (const auto& [b, q] : v.terms_) add(b, c * q);
}

GradedVector& GradedVector::operator+=(const GradedVector& v) {
  for (const auto& [b, q] : v.terms_) add(b, q);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& v) {
  for (const auto& [b, q] : v.terms_) add(b, -q);
  return *this;
}

GradedVector& GradedVector::operator*=(const Scalar& c) {
  if (hsa::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, q] : terms_) q *= c;
  return *this;
}

Scalar GradedVector::coeff(const BasisElement& b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const auto& t, const BasisElement& e) { return canonical_less(t.first, e); });
  if (it != terms_.end() && it->first == b) return it->second;
  return Scalar(0);
}

bool GradedVector::homogeneous(int* degree_out) const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree;
  for (const auto& [b, q] : terms_)
    if (b.degree != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

std::string to_string(const GradedVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, q] : v.terms()) {
    if (!first) os << " + ";
    os << to_string(q) << "*" << to_string(b);
    first = false;
  }
  return os.str();
}

} // namespace hsa
