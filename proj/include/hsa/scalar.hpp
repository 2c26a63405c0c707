#ifndef HSA_SCALAR_HPP
#define HSA_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hsa {

/// Exact rational scalar. mpq_class keeps a reduced fraction with positive
/// denominator once canonicalized; every constructor here canonicalizes.
using Scalar = mpq_class;

/// Thrown on malformed input (files, shapes, degrees). Distinct from a
/// failing check: a CheckReport never throws.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by builders whose input fails its own checker (a well-formed but
/// invalid structure); the CLI maps this to the check-failed exit code.
class precondition_error : public input_error {
public:
  explicit precondition_error(const std::string& what) : input_error(what) {}
};

inline Scalar rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p", "p/q". Exact; no floating point anywhere.
Scalar parse_rational(const std::string& tok);

std::string to_string(const Scalar& q);

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

} // namespace hsa

#endif
