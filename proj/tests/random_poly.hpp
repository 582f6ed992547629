#pragma once

// Random generators shared by the property tests.

#include <random>

#include "cpvi/exactalg/ratfun.hpp"

namespace cpvi::rnd {

inline BigRational random_rational(std::mt19937_64& rng, long num_range = 9, long den_max = 5) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_max);
  return make_rational(num(rng), den(rng));
}

/// Up to `max_terms` terms over `gens` with per-generator exponent at most
/// `max_exp`.
template <std::size_t N>
SparsePoly random_poly(std::mt19937_64& rng, const std::array<Gen, N>& gens, int max_terms = 5, unsigned max_exp = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<SparsePoly::Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (Gen g : gens) m.set(g, exp(rng));
    terms.emplace_back(m, random_rational(rng));
  }
  return SparsePoly::from_terms(std::move(terms));
}

inline SparsePoly random_poly(std::mt19937_64& rng, int max_terms = 5, unsigned max_exp = 2) {
  static constexpr std::array<Gen, 6> kGens = {Gen::x, Gen::y, Gen::z, Gen::w, Gen::t, Gen::a1};
  return random_poly(rng, kGens, max_terms, max_exp);
}

inline Assignment random_assignment(std::mt19937_64& rng) {
  Assignment a;
  for (Gen g : kAllGens) a.set(g, random_rational(rng, 50, 7));
  return a;
}

}  // namespace cpvi::rnd
