#pragma once

#include <string>
#include <string_view>

#include "cpvi/exactalg/ratfun.hpp"

namespace cpvi {

// Infix text form: explicit '*', '^' for non-negative integer powers,
// generators spelled x y z w t a0 a1 a2 a3 a4. Terms print leading-first in
// the canonical order, so the output is byte-stable. A rational function with
// a non-constant denominator prints as "(num)/(den)".

std::string to_string(const Monomial& m);
std::string to_string(const SparsePoly& p);
std::string to_string(const RatFun& f);

/// Accepts the printed grammar plus arbitrary nesting of + - * / ^ and
/// parentheses. Throws ParseError.
RatFun parse_ratfun(std::string_view text);

/// As parse_ratfun, and additionally throws ParseError if the result is not a
/// polynomial.
SparsePoly parse_poly(std::string_view text);

}  // namespace cpvi
