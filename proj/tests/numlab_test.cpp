#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"
#include "cpvi/numlab/numlab.hpp"
#include "cpvi/sampling.hpp"
#include "cpvi/weyl/weyl.hpp"

using namespace cpvi;

namespace {

IntegratorConfig tol(double rtol) {
  IntegratorConfig c;
  c.rtol = rtol;
  c.atol = rtol * 1e-2;
  return c;
}

}  // namespace

TEST(Ode, ExponentialHarness) {
  OdeRhs f = [](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = y[0]; };
  IntegratorConfig cfg = tol(1e-10);
  Trajectory tr = integrate_ode(f, 0, 1, {1.0}, cfg);
  EXPECT_NEAR(tr.back()[0], std::exp(1.0), 10 * cfg.rtol * std::exp(1.0));
  EXPECT_DOUBLE_EQ(tr.t.back(), 1.0);
  for (std::size_t k = 1; k < tr.t.size(); ++k) EXPECT_GT(tr.t[k], tr.t[k - 1]);
}

TEST(Ode, Backwards) {
  OdeRhs f = [](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = y[0]; };
  Trajectory tr = integrate_ode(f, 1, 0, {std::exp(1.0)}, tol(1e-10));
  EXPECT_NEAR(tr.back()[0], 1.0, 1e-8);
}

TEST(Ode, ZeroField) {
  OdeRhs f = [](double, const std::vector<double>&, std::vector<double>& dy) { std::fill(dy.begin(), dy.end(), 0.0); };
  Trajectory tr = integrate_ode(f, 0.3, 0.6, {1, 2, 3, 4});
  EXPECT_EQ(tr.back(), (std::vector<double>{1, 2, 3, 4}));
}

TEST(Ode, ObservedOrder) { EXPECT_GE(observed_order(), 4.5); }

TEST(Ode, BlowUpAndStepLimit) {
  // y' = y^2, y(0) = 1 blows up at t = 1.
  OdeRhs f = [](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = y[0] * y[0]; };
  IntegratorConfig cfg = tol(1e-8);
  EXPECT_THROW(integrate_ode(f, 0, 2, {1.0}, cfg), BlowUp);
  cfg.max_steps = 5;
  try {
    integrate_ode(f, 0, 0.99, {1.0}, cfg);
    FAIL();
  } catch (const StepLimitExceeded& e) {
    EXPECT_GT(e.last_good_t(), 0.0);
  }
}

TEST(Numlab, SpanAndRelationAreChecked) {
  NumPoint p{{0.1, 0.1, 0.1, 0.1}, 0.3};
  ParameterVector good{-1, 1, 0, 0, 0};
  EXPECT_THROW(integrate(good, p, 1.2), std::invalid_argument);
  EXPECT_THROW(integrate({0, 0, 0, 0, 0}, p, 0.6), BadParameterRelation);
}

TEST(Numlab, CompiledMatchesExact) {
  ParameterVector alpha{make_rational(1, 3), make_rational(-1, 5), make_rational(2, 7), 0, 0};
  alpha[0] = 1 - 2 * alpha[1] - 3 * alpha[2] - 2 * alpha[3] - alpha[4];
  RatFun f = vector_field(build_coupled_H()).components[2];
  CompiledRatFun c(f, alpha);
  PhasePoint p{{make_rational(1, 2), make_rational(-3, 4), make_rational(5, 8), make_rational(1, 3)},
               make_rational(2, 5)};
  double exact = f.eval(make_assignment(p, alpha)).get_d();
  NumPoint q = to_double(p);
  EXPECT_NEAR(c({q.phase[0], q.phase[1], q.phase[2], q.phase[3], q.t}), exact, 1e-12 * std::abs(exact));
}

TEST(Numlab, ParticularSolutionYZero) {
  ParameterVector alpha = random_alpha_with_zero(0, 3);
  EXPECT_EQ(alpha[0], 0);
  EXPECT_TRUE(check_parameter_relation(alpha));
  IntegratorConfig cfg = tol(1e-10);
  NumPoint p{{0.2, 0.0, -0.1, 0.3}, 0.3};
  EXPECT_LT(divisor_drift_numeric(0, alpha, p, 0.6, cfg), 100 * cfg.atol);
}

TEST(Numlab, RoundtripTrivialWhenParameterZero) {
  for (std::uint64_t seed = 1; seed < 50; ++seed) {
    AdmissibleSample s = random_admissible(seed, 0.3);
    s.alpha[1] += s.alpha[0] / 2;  // keep the normalization with alpha0 = 0
    s.alpha[0] = 0;
    ASSERT_TRUE(check_parameter_relation(s.alpha));
    try {
      auto r = backlund_roundtrip_numeric(0, s.init, s.alpha, 0.6, tol(1e-10));
      EXPECT_EQ(r.deviation, 0.0);
      return;
    } catch (const BlowUp&) {
    }
  }
  FAIL() << "every sample blew up";
}

TEST(Numlab, RoundtripS3) {
  auto sweep = backlund_roundtrip_sweep(3);
  ASSERT_EQ(sweep.size(), 3u);
  for (const auto& r : sweep) {
    EXPECT_LT(r.deviation[2], 1e-8);
    EXPECT_TRUE(r.monotone());
  }
}

TEST(Numlab, RoundtripPoleIsSurfaced) {
  AdmissibleSample s = random_admissible(2, 0.3);
  // Start on f_2 = 0.
  s.init.phase[1] = s.init.t - s.init.phase[3] * s.init.phase[3];
  EXPECT_THROW(backlund_roundtrip_numeric(2, s.init, s.alpha, 0.6, tol(1e-8)), PoleAtPoint);
}

TEST(Numlab, IntegerKernel) {
  // x + y - z = 0, 2x - y = 0  ->  kernel spanned by (1, 2, 3).
  std::vector<std::vector<BigInteger>> rows{{1, 1, -1}, {2, -1, 0}};
  auto k = integer_kernel(rows, 3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0] * 2, k[0][1]);
  EXPECT_EQ(k[0][0] * 3, k[0][2]);
}

TEST(Numlab, FirstIntegralsDegreeZero) {
  auto r = first_integral_search(0, 0);
  ASSERT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(r.basis[0], SparsePoly(1));
}

TEST(Numlab, HamiltonianIsNotInAnsatzKernel) {
  // H itself is not polynomial in t; the kernel of a small ansatz is trivial.
  auto r = first_integral_search(2, 2, 1);
  for (const auto& p : r.basis) EXPECT_TRUE(p.is_constant());
  EXPECT_FALSE(build_coupled_H().value.derivative(Gen::t).is_zero());
}

TEST(Numlab, HamiltonianNotConserved) {
  auto r = hamiltonian_not_conserved_check(tol(1e-10));
  EXPECT_EQ(r.status, Status::pass) << r.detail;
}

TEST(Numlab, CsvAndSvg) {
  Trajectory tr;
  tr.t = {0.3, 0.4};
  tr.y = {{1, 2, 3, 4}, {1.5, 2, 3, 4}};
  std::ostringstream csv, svg;
  write_csv(csv, tr);
  EXPECT_EQ(csv.str().substr(0, 10), "t,x,y,z,w\n");
  write_svg(svg, tr);
  EXPECT_NE(svg.str().find("<polyline"), std::string::npos);
}

TEST(Numlab, FirstIntegralsDefaultBounds) {
  auto r = first_integral_search(3, 4);
  EXPECT_EQ(r.unknowns, 175u);
  ASSERT_EQ(r.per_alpha.size(), 3u);
  for (const auto& k : r.per_alpha) EXPECT_EQ(k, r.basis);
  ASSERT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(r.basis[0], SparsePoly(1));
}

TEST(Numlab, AnsatzTooLarge) { EXPECT_THROW(first_integral_search(20, 10), AnsatzTooLarge); }

TEST(Numlab, DivisorDriftAllGenerators) {
  IntegratorConfig cfg = tol(1e-10);
  for (int i = 0; i < 5; ++i) {
    auto samples = divisor_drift_samples(i, 3, cfg);
    ASSERT_EQ(samples.size(), 3u);
    for (const auto& s : samples) {
      EXPECT_EQ(s.alpha[static_cast<std::size_t>(i)], 0);
      EXPECT_EQ(RatFun(invariant_divisor(i).f).eval(make_assignment(s.init, s.alpha)), 0);
      EXPECT_LT(s.drift, 100 * cfg.atol) << i;
    }
  }
}
