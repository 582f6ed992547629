#pragma once

#include <array>
#include <optional>

#include "cpvi/exactalg/poly.hpp"

namespace cpvi {

/// Quotient of two sparse polynomials.
///
/// Normalization is deliberately partial: the common monomial factor of
/// numerator and denominator is divided out, the denominator is made
/// primitive over the integers with a positive leading coefficient, and a
/// constant denominator is folded into the numerator. No multivariate gcd is
/// taken, so two equal rational functions may have different
/// representations; operator== compares by cross-multiplication.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(SparsePoly num);  // NOLINT(google-explicit-constructor)
  RatFun(const BigRational& c) : RatFun(SparsePoly(c)) {}  // NOLINT
  RatFun(long c) : RatFun(SparsePoly(c)) {}                 // NOLINT
  /// Throws DenominatorVanishes if `den` is the zero polynomial.
  RatFun(SparsePoly num, SparsePoly den);
  static RatFun gen(Gen g) { return RatFun(SparsePoly::gen(g)); }

  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Polynomial value if the denominator divides the numerator exactly.
  std::optional<SparsePoly> as_polynomial() const;
  bool depends_on(Gen g) const { return num_.depends_on(g) || den_.depends_on(g); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  /// Throws DenominatorVanishes when dividing by zero.
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  /// Mathematical equality, by cross-multiplication.
  friend bool operator==(const RatFun& a, const RatFun& b);

  RatFun pow(unsigned e) const;
  RatFun derivative(Gen g) const;

  /// Throws PoleAtPoint when the denominator vanishes at `point`.
  BigRational eval(const Assignment& point) const;

 private:
  struct Raw {};
  RatFun(SparsePoly num, SparsePoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  SparsePoly num_;
  SparsePoly den_;
};

/// Simultaneous substitution of rational functions for generators. Unbound
/// generators map to themselves.
class Substitution {
 public:
  Substitution() = default;
  Substitution& bind(Gen g, RatFun value) {
    bindings_[index(g)] = std::move(value);
    return *this;
  }
  const std::optional<RatFun>& operator[](Gen g) const { return bindings_[index(g)]; }
  bool bound(Gen g) const { return bindings_[index(g)].has_value(); }

 private:
  std::array<std::optional<RatFun>, kNumGens> bindings_;
};

/// Exact composition. Throws DenominatorVanishes if the result would have a
/// zero denominator.
RatFun substitute(const SparsePoly& p, const Substitution& s);
RatFun substitute(const RatFun& f, const Substitution& s);

/// True iff the numerator is the zero polynomial.
inline bool equals_zero(const RatFun& f) { return f.is_zero(); }

/// Polynomial for a0 solved from a0 + 2a1 + 3a2 + 2a3 + a4 = 1.
SparsePoly alpha0_from_relation();

/// Eliminates a0 using the normalization a0 + 2a1 + 3a2 + 2a3 + a4 = 1.
RatFun reduce_mod_relation(const RatFun& f);

}  // namespace cpvi
