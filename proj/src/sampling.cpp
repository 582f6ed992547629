#include "cpvi/sampling.hpp"

namespace cpvi {

namespace {
constexpr long kRange = 1'000'000;
}

BigRational ExactSampler::integer(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return BigRational(d(rng_));
}

BigRational ExactSampler::rational() {
  std::uniform_int_distribution<long> num(-kRange, kRange);
  std::uniform_int_distribution<long> den(1, 1000);
  return make_rational(num(rng_), den(rng_));
}

PhasePoint ExactSampler::point() {
  PhasePoint p;
  for (auto& c : p.phase) c = integer(-kRange, kRange);
  do {
    p.t = integer(-kRange, kRange);
  } while (p.t == 0 || p.t == 1);
  return p;
}

ParameterVector ExactSampler::alpha_on_relation() {
  ParameterVector a;
  for (std::size_t i = 1; i < 5; ++i) a[i] = rational();
  a[0] = 1 - 2 * a[1] - 3 * a[2] - 2 * a[3] - a[4];
  return a;
}

ParameterVector ExactSampler::alpha_free() {
  ParameterVector a;
  for (auto& v : a) v = rational();
  return a;
}

Assignment make_assignment(const PhasePoint& p, const ParameterVector& alpha) {
  Assignment a;
  for (std::size_t i = 0; i < 4; ++i) a.set(kPhaseGens[i], p.phase[i]);
  a.set(Gen::t, p.t);
  for (std::size_t i = 0; i < 5; ++i) a.set(param_gen(i), alpha[i]);
  return a;
}

}  // namespace cpvi
