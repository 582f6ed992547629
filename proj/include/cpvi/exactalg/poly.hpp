#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cpvi/exactalg/generator.hpp"
#include "cpvi/exactalg/monomial.hpp"
#include "cpvi/exactalg/rational.hpp"

namespace cpvi {

/// Scoped ceiling on the number of terms any single polynomial produced by
/// exactalg may carry on the current thread. Exceeding it raises
/// ExpressionTooLarge. Guards nest; the innermost one wins.
class TermLimit {
 public:
  explicit TermLimit(std::size_t max_terms);
  ~TermLimit();
  TermLimit(const TermLimit&) = delete;
  TermLimit& operator=(const TermLimit&) = delete;

  static std::optional<std::size_t> current();
  /// Throws ExpressionTooLarge if `terms` exceeds the active ceiling.
  static void check(std::size_t terms);

 private:
  std::optional<std::size_t> previous_;
};

/// Exact values for (a subset of) the generators.
class Assignment {
 public:
  Assignment() = default;
  Assignment& set(Gen g, BigRational v) {
    values_[index(g)] = std::move(v);
    return *this;
  }
  const std::optional<BigRational>& operator[](Gen g) const { return values_[index(g)]; }
  bool bound(Gen g) const { return values_[index(g)].has_value(); }

 private:
  std::array<std::optional<BigRational>, kNumGens> values_;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by decreasing monomial (leading term first) with no zero
/// coefficients, so structural equality is mathematical equality.
class SparsePoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  SparsePoly() = default;
  SparsePoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  SparsePoly(long c);                // NOLINT(google-explicit-constructor)
  static SparsePoly gen(Gen g);
  static SparsePoly monomial(const Monomial& m, BigRational c = 1);
  /// Arbitrary order, duplicates and zeros allowed; canonicalizes.
  static SparsePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant().
  BigRational constant_value() const;
  const Term& leading() const { return terms_.front(); }

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const BigRational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const BigRational& c) { return a *= c; }
  friend SparsePoly operator*(const BigRational& c, SparsePoly a) { return a *= c; }
  bool operator==(const SparsePoly& o) const = default;

  SparsePoly pow(unsigned e) const;
  SparsePoly derivative(Gen g) const;
  /// Multiplies every monomial by m (or divides, which requires divisibility).
  SparsePoly shifted(const Monomial& m) const;
  SparsePoly divided_by_monomial(const Monomial& m) const;

  /// Exact quotient if `d` divides *this, std::nullopt otherwise.
  std::optional<SparsePoly> divide_exact(const SparsePoly& d) const;

  /// gcd of all monomials (one for the zero polynomial).
  Monomial monomial_content() const;
  /// Positive rational c such that *this / c has coprime integer coefficients.
  BigRational rational_content() const;

  bool depends_on(Gen g) const;
  unsigned degree(Gen g) const;
  /// Highest exponent sum restricted to `vars`. Throws ZeroPolynomial.
  unsigned total_degree(GenSet vars) const;

  /// Throws std::invalid_argument if a needed generator is unbound.
  BigRational eval(const Assignment& point) const;

  /// Fixes the generators bound in `point`, leaving the others symbolic.
  SparsePoly specialize(const Assignment& point) const;

 private:
  friend SparsePoly sum(std::vector<SparsePoly> parts);
  explicit SparsePoly(std::vector<Term> sorted_terms, int /*tag*/) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Sum of many polynomials without quadratic re-merging.
SparsePoly sum(std::vector<SparsePoly> parts);

/// Free-function form of SparsePoly::total_degree.
unsigned total_degree(const SparsePoly& p, GenSet vars);

}  // namespace cpvi
