#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cpvi {

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  std::size_t max_steps = 1'000'000;
  /// Zero picks a starting step from the initial derivative.
  double initial_step = 0;
  /// BlowUp when any component exceeds this magnitude.
  double blowup = 1e8;
  /// Nonzero disables error control and takes steps of this size.
  double fixed_step = 0;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> y;
  std::size_t steps = 0;
  std::size_t rejected = 0;

  const std::vector<double>& back() const { return y.back(); }
};

/// dy/dt = f(t, y), written into the third argument.
using OdeRhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;

/// Dormand-Prince 5(4) with PI step control, advancing the fifth-order
/// solution. Integrates from t0 to t1 (either direction) and records every
/// accepted step. Throws StepLimitExceeded and BlowUp.
Trajectory integrate_ode(const OdeRhs& f, double t0, double t1, std::vector<double> y0,
                         const IntegratorConfig& cfg = {});

}  // namespace cpvi
