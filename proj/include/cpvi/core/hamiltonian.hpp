#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cpvi/exactalg/ratfun.hpp"

namespace cpvi {

/// Numeric (alpha0, ..., alpha4). Valid instances satisfy
/// alpha0 + 2 alpha1 + 3 alpha2 + 2 alpha3 + alpha4 = 1.
using ParameterVector = std::array<BigRational, 5>;

bool check_parameter_relation(const ParameterVector& alpha);

/// Exact phase point of the coupled system.
struct PhasePoint {
  std::array<BigRational, 4> phase;  // x, y, z, w
  BigRational t;
};

/// Which generators play position/momentum and time. Components of a vector
/// field follow the pair order: (dq1, dp1, dq2, dp2, ...).
struct PhaseLayout {
  std::vector<std::pair<Gen, Gen>> pairs;  // (position, momentum)
  Gen time = Gen::t;

  std::vector<Gen> variables() const;
};

PhaseLayout coupled_layout();  // (x, y), (z, w); time t

struct Hamiltonian {
  RatFun value;
  PhaseLayout layout;
  std::string label;
};

struct VectorField {
  PhaseLayout layout;
  std::vector<RatFun> components;

  /// Component for the time derivative of variable `g`.
  const RatFun& operator[](Gen g) const;
};

/// Coefficients of H_VI in the order (beta0, ..., beta4).
using PVIParameters = std::array<RatFun, 5>;

/// t(1-t) H for the coupled system, all alpha symbolic.
const SparsePoly& coupled_polynomial();
/// t(1-t) K1 and t(1-t) K2, encoded independently of coupled_polynomial().
const SparsePoly& k1_polynomial();
const SparsePoly& k2_polynomial();
/// The y-multiplied group that couples the (x, y) and (z, w) planes.
const SparsePoly& coupling_polynomial();

/// The polynomial t(1 - t).
SparsePoly time_factor();

Hamiltonian build_coupled_H();
Hamiltonian build_K1();
Hamiltonian build_K2();

/// H_VI(q, p, time; beta). Numeric beta must satisfy
/// beta0 + beta1 + 2 beta2 + beta3 + beta4 = 1 or BadParameterRelation is
/// thrown; symbolic beta is not checked here.
Hamiltonian build_PVI(const PVIParameters& beta, Gen position, Gen momentum, Gen time);

/// beta0 + beta1 + 2 beta2 + beta3 + beta4 - 1.
RatFun pvi_relation_defect(const PVIParameters& beta);

/// dq/dt = dH/dp, dp/dt = -dH/dq for every pair of the layout.
VectorField vector_field(const Hamiltonian& h);

/// Canonical bracket with {y, x} = {w, z} = 1:
/// {f, g} = f_y g_x - f_x g_y + f_w g_z - f_z g_w.
RatFun poisson_bracket(const RatFun& f, const RatFun& g);

/// Time derivative of `f` along `field`, including the explicit time
/// dependence unless `include_explicit_time` is false.
RatFun derivative_along(const RatFun& f, const VectorField& field, bool include_explicit_time = true);

}  // namespace cpvi
