#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "cpvi/exactalg/generator.hpp"

namespace cpvi {

/// Exponent vector over the ten generators, ordered lexicographically in
/// generator order.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  constexpr Monomial() = default;
  static Monomial of(Gen g, unsigned e = 1);

  Exponent operator[](Gen g) const { return exps_[index(g)]; }
  void set(Gen g, unsigned e);

  bool is_one() const;
  unsigned total_degree() const;
  unsigned degree_in(GenSet vars) const;

  /// Throws ExpressionTooLarge when an exponent would overflow.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o) == true for *this as divisor of o: returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  const std::array<Exponent, kNumGens>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kNumGens> exps_{};
};

}  // namespace cpvi
