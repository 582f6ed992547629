#pragma once

#include <array>
#include <cstdint>

#include "cpvi/report.hpp"
#include "cpvi/weyl/birational.hpp"

namespace cpvi {

/// Backlund generator s_i, i in 0..4.
BirationalMap generator(int i);

using CoxeterMatrix = std::array<std::array<int, 5>, 5>;

/// m01 = m12 = m34 = 3, m23 = 4, other off-diagonal entries 2.
const CoxeterMatrix& coxeter_matrix();

struct InvariantDivisor {
  int index = 0;
  SparsePoly f;
  /// f = 0 solved for one variable: solved_gen = solved_value.
  Gen solved_gen = Gen::x;
  SparsePoly solved_value;
};

/// f0 = y, f1 = x, f2 = y + w^2 - t, f3 = z, f4 = w - 1.
InvariantDivisor invariant_divisor(int i);

struct BacklundOptions {
  /// Negative control: drop dX/dt from the chain rule.
  bool include_time_derivative = true;
  /// Term ceiling for the symbolic attempt; 0 means none.
  std::size_t term_limit = 0;
  /// Skip the symbolic attempt and go straight to point evaluation.
  bool force_sampled = false;
  std::size_t sample_points = 50;
  std::uint64_t seed = 20240601;
};

/// s_i maps solutions of the system with parameters alpha to solutions with
/// parameters s_i(alpha). One part per coordinate.
VerificationReport verify_backlund(int i, const BacklundOptions& opts = {});

/// s_i o s_i = id on coordinates and parameters, symbolically.
VerificationReport verify_involution(int i);

struct CoxeterOptions {
  std::size_t sample_points = 50;
  std::uint64_t seed = 20240602;
};

/// (s_i s_j)^m_ij = id on parameters (exact) and at random exact points, and
/// no smaller power is the identity. The detail records the observed order.
VerificationReport verify_coxeter(int i, int j, const CoxeterOptions& opts = {});

/// The k-th term (alpha_i/f_i)^k / k! ad_{f_i}^k(g) of the exponential series.
RatFun exp_formula_term(int i, const RatFun& g, int k);
/// Sum of the terms 0..order.
RatFun exp_formula(int i, const RatFun& g, int order);

/// The order-2 series reproduces s_i on x, y, z, w and the order-3 term
/// vanishes on each of them.
VerificationReport verify_exp_formula(int i);

/// The pullback of f_i under s_i is f_i.
VerificationReport verify_divisor_preserved(int i);

/// With alpha_i = 0 the time derivative of f_i along the flow vanishes on
/// f_i = 0.
VerificationReport invariant_divisor_check(int i);

}  // namespace cpvi
