#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cpvi {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "p", "-p" or "p/q" with decimal integers. Throws ParseError on
/// anything else, including a zero denominator. No floating point involved.
BigRational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const BigRational& q);

inline BigRational make_rational(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cpvi
