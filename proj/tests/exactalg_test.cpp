#include <gtest/gtest.h>

#include <random>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"
#include "random_poly.hpp"

using namespace cpvi;

namespace {

RatFun P(const char* s) { return parse_ratfun(s); }
SparsePoly Q(const char* s) { return parse_poly(s); }
RatFun G(Gen g) { return RatFun::gen(g); }

constexpr int kCases = 200;

}  // namespace

TEST(Rational, ParsesExactFractions) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), BigRational(-7));
  EXPECT_EQ(parse_rational("+0/5"), BigRational(0));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(to_string(make_rational(-4, 6)), "-2/3");
}

TEST(SparsePoly, AddExamples) {
  EXPECT_EQ(Q("x + t") + Q("-x"), Q("t"));
  SparsePoly p = Q("x^2*y - 3*a2 + 1/2");
  EXPECT_EQ(SparsePoly() + p, p);
  EXPECT_EQ(P("1/x") + P("1/y"), P("(x + y)/(x*y)"));
  EXPECT_EQ(to_string(P("1/x") + P("1/y")), "(x + y)/(x*y)");
}

TEST(SparsePoly, MulExamples) {
  EXPECT_EQ(Q("(w - 1)*(w + 1)"), Q("w^2 - 1"));
  EXPECT_EQ(to_string(Q("(w - 1)*(w + 1)")), "w^2 - 1");
  SparsePoly p = Q("x*y + a4^3");
  EXPECT_EQ(p * SparsePoly(1), p);
  RatFun r = P("x/y") * P("y/x");
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r, RatFun(1));
}

TEST(SparsePoly, PartialDerivatives) {
  EXPECT_EQ(Q("x^2*y^3").derivative(Gen::y), Q("3*x^2*y^2"));
  EXPECT_TRUE(SparsePoly(make_rational(7, 3)).derivative(Gen::t).is_zero());
  EXPECT_EQ(P("1/x").derivative(Gen::x), P("-1/x^2"));
}

TEST(Substitute, FreshSlotReuse) {
  Substitution s;
  s.bind(Gen::x, P("1/y"));
  RatFun r = substitute(Q("x^2 + 1"), s);
  EXPECT_EQ(r, P("(1 + y^2)/y^2"));
  EXPECT_EQ(to_string(r), "(y^2 + 1)/(y^2)");
}

TEST(Substitute, SimultaneousNotSequential) {
  Substitution s;
  s.bind(Gen::x, G(Gen::y)).bind(Gen::y, G(Gen::x));
  EXPECT_EQ(substitute(Q("x^2*y"), s), P("y^2*x"));
}

TEST(Substitute, SharedDenominatorsAreGrouped) {
  Substitution s;
  s.bind(Gen::x, P("1/(y + w^2 - t)")).bind(Gen::z, P("w/(y + w^2 - t)"));
  RatFun r = substitute(Q("x*z"), s);
  EXPECT_EQ(r, P("w/(y + w^2 - t)^2"));
  EXPECT_EQ(r.den(), Q("(y + w^2 - t)^2"));
}

TEST(Substitute, DenominatorVanishes) {
  Substitution s;
  s.bind(Gen::x, RatFun(0));
  EXPECT_THROW(substitute(P("1/x"), s), DenominatorVanishes);
  Substitution s2;
  s2.bind(Gen::y, G(Gen::z));
  EXPECT_THROW(substitute(P("1/(y - z)"), s2), DenominatorVanishes);
}

TEST(EqualsZero, Examples) {
  EXPECT_TRUE(equals_zero(P("(x^2 - 1)/(x - 1)") - P("x + 1")));
  EXPECT_FALSE(equals_zero(G(Gen::a0)));
  EXPECT_FALSE(equals_zero(P("a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1")));
}

TEST(ReduceModRelation, Examples) {
  EXPECT_TRUE(reduce_mod_relation(P("a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1")).is_zero());
  EXPECT_EQ(reduce_mod_relation(P("x*y")), P("x*y"));
  RatFun r = reduce_mod_relation(P("a0^2"));
  EXPECT_EQ(r, P("(1 - 2*a1 - 3*a2 - 2*a3 - a4)^2"));
  EXPECT_FALSE(r.depends_on(Gen::a0));
  EXPECT_THROW(reduce_mod_relation(P("1/(a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1)")), DenominatorVanishes);
}

TEST(TotalDegree, Examples) {
  GenSet phase(kPhaseGens);
  EXPECT_EQ(SparsePoly(5).total_degree(phase), 0u);
  EXPECT_EQ(Q("x^2*y^3").total_degree(GenSet{Gen::x}), 2u);
  EXPECT_EQ(total_degree(Q("x^2*y^3 + t^9*z"), phase), 5u);
  EXPECT_THROW(SparsePoly().total_degree(phase), ZeroPolynomial);
}

TEST(EvalExact, Examples) {
  Assignment at3;
  at3.set(Gen::x, 3);
  EXPECT_EQ(P("(x + 1)/(x - 1)").eval(at3), BigRational(2));
  std::mt19937_64 rng(1);
  EXPECT_EQ((G(Gen::x) - G(Gen::x)).eval(rnd::random_assignment(rng)), BigRational(0));
  Assignment at0;
  at0.set(Gen::x, 0);
  EXPECT_THROW(P("1/x").eval(at0), PoleAtPoint);
  EXPECT_THROW(P("x*y").eval(at3), std::invalid_argument);
}

TEST(RatFun, NormalizationIsCanonicalForPairs) {
  RatFun r = P("(2*x^2*y)/(-4*x*y^3)");
  EXPECT_EQ(r.num(), Q("-1/2*x"));
  EXPECT_EQ(r.den(), Q("y^2"));
  RatFun c = P("(x + y)/(-x - y)");
  EXPECT_EQ(c.num(), SparsePoly(-1));
  EXPECT_TRUE(c.den().is_constant());
}

TEST(SparsePoly, DivideExact) {
  SparsePoly a = Q("(x - y)^3*(t + a1)");
  auto q = a.divide_exact(Q("(x - y)^2"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, Q("(x - y)*(t + a1)"));
  EXPECT_FALSE(a.divide_exact(Q("x + y")).has_value());
  EXPECT_FALSE(Q("x^2 + 1").divide_exact(Q("x + 1")).has_value());
}

TEST(TermLimit, RaisesExpressionTooLarge) {
  SparsePoly p = Q("x + y + z + w + t");
  {
    TermLimit limit(20);
    EXPECT_THROW(p.pow(4), ExpressionTooLarge);
    {
      TermLimit wider(100000);
      EXPECT_NO_THROW(p.pow(4));
    }
    EXPECT_THROW(p.pow(4), ExpressionTooLarge);
  }
  EXPECT_NO_THROW(p.pow(4));
}

TEST(Text, PrintsCanonicalForm) {
  EXPECT_EQ(to_string(Q("1/4*z^2*w^4 - x + 3")), "-x + 1/4*z^2*w^4 + 3");
  EXPECT_EQ(to_string(SparsePoly()), "0");
  EXPECT_EQ(to_string(Q("-a0*a4")), "-a0*a4");
  EXPECT_THROW(parse_ratfun("x + q"), ParseError);
  EXPECT_THROW(parse_ratfun("x^-1"), ParseError);
  EXPECT_THROW(parse_ratfun("(x"), ParseError);
  EXPECT_THROW(parse_ratfun("x/0"), ParseError);
  EXPECT_THROW(parse_poly("1/x"), ParseError);
}

TEST(Properties, TextRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kCases; ++i) {
    SparsePoly p = rnd::random_poly(rng, kAllGens, 6, 3);
    SparsePoly d = rnd::random_poly(rng, 3, 2);
    ASSERT_EQ(parse_poly(to_string(p)), p);
    if (d.is_zero()) continue;
    RatFun f(p, d);
    RatFun back = parse_ratfun(to_string(f));
    ASSERT_EQ(back.num(), f.num());
    ASSERT_EQ(back.den(), f.den());
  }
}

TEST(Properties, RingAxioms) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < kCases; ++i) {
    SparsePoly a = rnd::random_poly(rng);
    SparsePoly b = rnd::random_poly(rng);
    SparsePoly c = rnd::random_poly(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(Properties, RationalFieldAxioms) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < kCases; ++i) {
    RatFun a(rnd::random_poly(rng, 3), rnd::random_poly(rng, 3) + SparsePoly(1000));
    RatFun b(rnd::random_poly(rng, 3), rnd::random_poly(rng, 3) + SparsePoly(1000));
    RatFun c(rnd::random_poly(rng, 3), SparsePoly::gen(Gen::t) + SparsePoly(3));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
  }
}

TEST(Properties, SubstitutionComposition) {
  std::mt19937_64 rng(5);
  static constexpr std::array<Gen, 4> kVars = {Gen::x, Gen::y, Gen::z, Gen::t};
  for (int i = 0; i < kCases; ++i) {
    SparsePoly p = rnd::random_poly(rng, kVars, 4, 2);
    Substitution sigma;
    Substitution tau;
    for (Gen g : kVars) {
      if (rng() % 2) sigma.bind(g, RatFun(rnd::random_poly(rng, kVars, 3, 1)));
      if (rng() % 2) tau.bind(g, RatFun(rnd::random_poly(rng, kVars, 3, 1)));
    }
    Substitution composed;  // tau after sigma
    for (Gen g : kVars) {
      if (sigma.bound(g)) {
        composed.bind(g, substitute(*sigma[g], tau));
      } else if (tau.bound(g)) {
        composed.bind(g, *tau[g]);
      }
    }
    ASSERT_EQ(substitute(substitute(p, sigma), tau), substitute(p, composed));
  }
}

TEST(Properties, ZeroMeansZeroEverywhere) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < kCases; ++i) {
    SparsePoly a = rnd::random_poly(rng, 4);
    SparsePoly b = rnd::random_poly(rng, 4) + SparsePoly(1);
    SparsePoly c = rnd::random_poly(rng, 4) + SparsePoly(2);
    // a/b - (a c)/(b c) is zero as a rational function.
    RatFun f = RatFun(a, b) - RatFun(a * c, b * c);
    ASSERT_TRUE(equals_zero(f));
    Assignment pt = rnd::random_assignment(rng);
    try {
      ASSERT_EQ(f.eval(pt), BigRational(0));
    } catch (const PoleAtPoint&) {
    }
  }
}

TEST(Properties, MixedPartialsCommute) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < kCases; ++i) {
    SparsePoly p = rnd::random_poly(rng, kAllGens, 6, 3);
    ASSERT_EQ(p.derivative(Gen::x).derivative(Gen::y), p.derivative(Gen::y).derivative(Gen::x));
    RatFun f(p, rnd::random_poly(rng, 3) + SparsePoly::gen(Gen::w));
    ASSERT_EQ(f.derivative(Gen::z).derivative(Gen::w), f.derivative(Gen::w).derivative(Gen::z));
  }
}

TEST(Properties, ReduceModRelationAnnihilatesTheIdeal) {
  std::mt19937_64 rng(123);
  static constexpr std::array<Gen, 7> kVars = {Gen::x, Gen::t, Gen::a0, Gen::a1, Gen::a2, Gen::a3, Gen::a4};
  SparsePoly relation = Q("a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1");
  for (int i = 0; i < kCases; ++i) {
    SparsePoly g = rnd::random_poly(rng, kVars, 5, 2);
    ASSERT_TRUE(reduce_mod_relation(RatFun(g * relation)).is_zero());
    RatFun once = reduce_mod_relation(RatFun(g));
    ASSERT_FALSE(once.depends_on(Gen::a0));
    RatFun twice = reduce_mod_relation(once);
    ASSERT_EQ(twice.num(), once.num());
    ASSERT_EQ(twice.den(), once.den());
  }
}
