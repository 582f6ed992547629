#include <gtest/gtest.h>

#include "cpvi/charts/charts.hpp"
#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"

using namespace cpvi;

TEST(Charts, R0Inverse) {
  Chart c = chart(0);
  EXPECT_EQ(c.inverse.coord[0], parse_ratfun("1/x"));
  EXPECT_EQ(c.inverse.coord[1], parse_ratfun("-x*(y*x + a0)"));
  EXPECT_EQ(c.denominator_variable, Gen::x);
}

TEST(Charts, RoundTrips) {
  for (int j = 0; j < 5; ++j) EXPECT_EQ(verify_chart_roundtrip(j).status, Status::pass) << j;
}

TEST(Charts, OnlyR2DependsOnTime) {
  for (int j = 0; j < 5; ++j) EXPECT_EQ(chart(j).forward.explicit_t(), j == 2) << j;
}

TEST(Charts, InverseDenominatorsArePowersOfOneVariable) {
  for (int j = 0; j < 5; ++j) {
    Chart c = chart(j);
    for (const auto& f : c.inverse.coord) {
      const SparsePoly& d = f.den();
      ASSERT_EQ(d.size(), 1u);
      const Monomial& m = d.leading().first;
      EXPECT_EQ(m.total_degree(), m[c.denominator_variable]) << j;
    }
  }
}

TEST(Charts, Symplectic) {
  for (int j = 0; j < 5; ++j) {
    auto r = verify_chart_symplectic(j);
    EXPECT_EQ(r.status, Status::pass) << j << ": " << r.detail;
  }
}

TEST(Charts, TransformedHamiltonians) {
  const unsigned degree[] = {7, 6, 7, 6, 10};
  for (int j : {0, 1, 3, 4}) {
    auto th = transformed_hamiltonian(j);
    EXPECT_FALSE(th.needs_relation) << j;
    EXPECT_EQ(th.phase_degree, degree[j]) << j;
  }
  auto th2 = transformed_hamiltonian(2);
  EXPECT_TRUE(th2.needs_relation);
  EXPECT_EQ(th2.phase_degree, degree[2]);
  EXPECT_FALSE(th2.poly.depends_on(Gen::a0));
}

TEST(Charts, R2WithoutCorrectionIsNotPolynomial) {
  try {
    transformed_hamiltonian(2, false);
    FAIL() << "expected NonPolynomial";
  } catch (const NonPolynomial& e) {
    EXPECT_FALSE(e.offending().empty());
  }
  EXPECT_EQ(verify_chart_polynomial(2, false).status, Status::fail);
  EXPECT_EQ(verify_chart_polynomial(2, true).status, Status::pass_mod_relation);
}

TEST(Charts, A1) {
  auto r = verify_A1();
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(phase_degree(coupled_polynomial()), 6u);
  EXPECT_EQ(phase_degree(k1_polynomial()), 5u);
  EXPECT_EQ(phase_degree(k2_polynomial()), 6u);
}
