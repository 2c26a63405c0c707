#include "hsa/scalar.hpp"

namespace hsa {

Scalar parse_rational(const std::string& tok) {
  if (tok.empty()) throw input_error("empty rational");
  std::size_t slash = tok.find('/');
  auto digits_ok = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? tok : tok.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw input_error("malformed rational '" + tok + "'");
  Scalar q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw input_error("malformed rational '" + tok + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw input_error("rational with zero denominator '" + tok + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

} // namespace hsa
