#pragma once

#include <cstdint>
#include <random>

#include "cpvi/core/hamiltonian.hpp"

namespace cpvi {

/// Deterministic source of exact sample points for randomized identity
/// testing. Phase components and t are integers in [-10^6, 10^6] (t avoids 0
/// and 1); parameters are rationals with numerators in [-10^6, 10^6] and
/// denominators in [1, 10^3].
class ExactSampler {
 public:
  explicit ExactSampler(std::uint64_t seed) : rng_(seed) {}

  BigRational integer(long lo, long hi);
  BigRational rational();
  PhasePoint point();
  /// alpha1..alpha4 random, alpha0 solved from the normalization.
  ParameterVector alpha_on_relation();
  /// All five random; generically off the normalization.
  ParameterVector alpha_free();

 private:
  std::mt19937_64 rng_;
};

/// Binds x, y, z, w, t and a0..a4.
Assignment make_assignment(const PhasePoint& p, const ParameterVector& alpha);

}  // namespace cpvi
