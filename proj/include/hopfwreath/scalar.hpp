#ifndef HOPFWREATH_SCALAR_HPP
#define HOPFWREATH_SCALAR_HPP

#include <gmpxx.h>
#include <string>

namespace hopfwreath {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator, zero as 0/1.
using Scalar = mpq_class;

inline Scalar scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage.
inline Scalar scalar_from_string(const std::string& text) {
  Scalar s;
  if (s.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (s.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  s.canonicalize();
  return s;
}

inline std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

} // namespace hopfwreath

#endif
