#pragma once

#include "cpvi/report.hpp"
#include "cpvi/weyl/birational.hpp"

namespace cpvi {

/// Holomorphy chart r_j. New coordinates reuse the generator slots x, y, z, w:
/// `forward` gives (x_j, y_j, z_j, w_j) in terms of (x, y, z, w) and
/// `inverse` gives (x, y, z, w) in terms of (x_j, y_j, z_j, w_j).
struct Chart {
  int j = 0;
  BirationalMap forward;
  BirationalMap inverse;
  /// All poles of `inverse` lie on this coordinate hyperplane.
  Gen denominator_variable = Gen::x;
};

Chart chart(int j);

struct TransformedHamiltonian {
  /// Pullback of t(1-t) K (+ t(1-t) x for j = 2) through the inverse chart,
  /// with alpha0 eliminated when the normalization was needed.
  SparsePoly poly;
  bool needs_relation = false;
  unsigned phase_degree = 0;
};

/// K = H. Throws NonPolynomial listing the numerator monomials not divisible
/// by the denominator when no polynomial form exists, even modulo the
/// normalization. `with_correction` only matters for j = 2.
TransformedHamiltonian transformed_hamiltonian(int j, bool with_correction = true);

/// forward o inverse and inverse o forward are the identity, symbolically.
VerificationReport verify_chart_roundtrip(int j);

/// Pullback brackets of the new coordinates: {y_j, x_j} = {w_j, z_j} = 1,
/// every other pair 0.
VerificationReport verify_chart_symplectic(int j);

/// Polynomiality of the transformed Hamiltonian, as a report.
VerificationReport verify_chart_polynomial(int j, bool with_correction = true);

/// deg t(1-t)H = 6 in x, y, z, w; K1 and K2 degrees are listed in the detail.
VerificationReport verify_A1();

/// Total degree in x, y, z, w.
unsigned phase_degree(const SparsePoly& p);

}  // namespace cpvi
