#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpvi/numlab/ode.hpp"
#include "cpvi/report.hpp"
#include "cpvi/weyl/birational.hpp"

namespace cpvi {

/// Double-precision evaluator for a rational function of x, y, z, w, t with
/// the parameters fixed.
class CompiledRatFun {
 public:
  CompiledRatFun() = default;
  CompiledRatFun(const RatFun& f, const ParameterVector& alpha);

  /// Arguments in order x, y, z, w, t.
  double operator()(const std::array<double, 5>& v) const;
  double numerator(const std::array<double, 5>& v) const;
  double denominator(const std::array<double, 5>& v) const;

 private:
  struct Term {
    double coef;
    std::array<std::uint16_t, 5> exp;
  };
  static std::vector<Term> compile(const SparsePoly& p);
  static double eval(const std::vector<Term>& terms, const std::array<double, 5>& v);
  std::vector<Term> num_, den_;
};

struct NumPoint {
  std::array<double, 4> phase{};
  double t = 0;
};

NumPoint to_double(const PhasePoint& p);

/// Vector field of the coupled system at fixed numeric parameters.
class NumericSystem {
 public:
  /// Throws BadParameterRelation unless alpha satisfies the normalization.
  explicit NumericSystem(const ParameterVector& alpha);

  OdeRhs rhs() const;
  double hamiltonian(double t, const std::array<double, 4>& u) const;
  const ParameterVector& alpha() const { return alpha_; }

 private:
  ParameterVector alpha_;
  std::array<CompiledRatFun, 4> field_;
  CompiledRatFun h_;
};

/// Integrates the coupled system. t_span must not contain 0 or 1.
Trajectory integrate(const ParameterVector& alpha, const NumPoint& init, double t1,
                     const IntegratorConfig& cfg = {});

/// Image of a numeric point under a birational map with parameters alpha.
/// Throws PoleAtPoint when a denominator is within `pole_tol` of zero.
NumPoint apply_numeric(const BirationalMap& m, const ParameterVector& alpha, const NumPoint& p,
                       double pole_tol = 1e-12);

struct RoundtripResult {
  double deviation = 0;
  double min_divisor = 0;  // smallest |f_i| along the reference trajectory
};

/// Integrates (init, alpha) and (s_i(init), s_i(alpha)) over [init.t, t1] and
/// compares s_i(reference endpoint) with the second endpoint. Throws
/// PoleAtPoint when |f_i| drops below `pole_margin` on the reference path.
RoundtripResult backlund_roundtrip_numeric(int i, const PhasePoint& init, const ParameterVector& alpha, double t1,
                                           const IntegratorConfig& cfg = {}, double pole_margin = 0.1);

/// Random rational initial point in a box around zero and random alpha on
/// the normalization, both small enough that short real spans are usually
/// pole-free.
struct AdmissibleSample {
  PhasePoint init;
  ParameterVector alpha;
};
AdmissibleSample random_admissible(std::uint64_t seed, double t0);

inline constexpr std::array<double, 3> kRtolSweep = {1e-6, 1e-8, 1e-10};

struct RoundtripSweep {
  AdmissibleSample sample;
  std::array<double, 3> deviation{};  // one per kRtolSweep entry

  bool monotone() const { return deviation[0] > deviation[1] && deviation[1] > deviation[2]; }
};

/// Round trips of s_i over [0.3, 0.6] for the first `samples` admissible
/// draws: alpha_i != 0, |f_i| >= 0.1 on the reference path and every
/// component bounded by 10 on both paths, at every tolerance of the sweep
/// (atol = rtol / 100). Other draws are skipped.
std::vector<RoundtripSweep> backlund_roundtrip_sweep(int i, std::size_t samples = 3, std::uint64_t seed = 1);

/// Starts on f_i = 0 with alpha_i = 0 and returns max |f_i| along the path.
double divisor_drift_numeric(int i, const ParameterVector& alpha, const NumPoint& init, double t1,
                             const IntegratorConfig& cfg = {});

struct DivisorDrift {
  PhasePoint init;
  ParameterVector alpha;
  double drift = 0;
};

/// First `samples` draws started on f_i = 0 at t = 3/10 with alpha_i = 0 whose
/// trajectories stay bounded by 10 on [0.3, 0.6]; other draws are skipped.
std::vector<DivisorDrift> divisor_drift_samples(int i, std::size_t samples, const IntegratorConfig& cfg,
                                                std::uint64_t seed = 1);

/// alpha on the normalization with alpha_i = 0 (alpha0 solved, or alpha4 for
/// i = 0), otherwise random.
ParameterVector random_alpha_with_zero(int i, std::uint64_t seed);

struct FirstIntegralResult {
  std::size_t unknowns = 0;
  /// Kernel basis of each specialization and of the stacked system.
  std::vector<std::vector<SparsePoly>> per_alpha;
  std::vector<SparsePoly> basis;
  std::vector<ParameterVector> alphas;
};

/// Polynomials F in x, y, z, w of degree <= deg_phase with coefficients in
/// t of degree <= deg_t such that t(1-t) dF/dt = 0 along the flow, for
/// `n_alpha` random exact parameter vectors on the normalization. Throws
/// AnsatzTooLarge from 10^4 unknowns on.
FirstIntegralResult first_integral_search(unsigned deg_phase, unsigned deg_t, std::size_t n_alpha = 3,
                                          std::uint64_t seed = 7);

/// Kernel of an integer matrix by fraction-free elimination. Rows are dense.
std::vector<std::vector<BigRational>> integer_kernel(std::vector<std::vector<BigInteger>> rows, std::size_t cols);

/// dH/dt = dH/dt explicit is nonzero symbolically ({H, H} = 0), and H drifts
/// by more than 10^3 rtol along a generic trajectory.
VerificationReport hamiltonian_not_conserved_check(const IntegratorConfig& cfg = {});

/// Fixed-step DOPRI on x' = x over [0, 1]; observed order from successive
/// halvings of the step.
double observed_order();

void write_csv(std::ostream& os, const Trajectory& tr);
/// Line chart of x, y, z, w against t.
void write_svg(std::ostream& os, const Trajectory& tr);

}  // namespace cpvi
