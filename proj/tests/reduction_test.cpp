#include <gtest/gtest.h>

#include "cpvi/exactalg/text.hpp"
#include "cpvi/reduction/reduction.hpp"

using namespace cpvi;

namespace {

RatFun R(const char* s) { return parse_ratfun(s); }

const RatFun& relation() {
  static const RatFun r = R("a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1");
  return r;
}

}  // namespace

TEST(Reduction, StepsAreSymplectic) {
  for (const auto& p : {k1_definition(), k2_definition()})
    for (const auto& s : p.steps) EXPECT_TRUE(verify_step_symplectic(s)) << p.name << " " << s.label;
  SymplecticStep bad{"bad", Gen::x, Gen::y, R("2*x"), R("y"), std::nullopt};
  EXPECT_FALSE(verify_step_symplectic(bad));
}

TEST(Reduction, TargetBetaRelation) {
  // beta0 + beta1 + 2 beta2 + beta3 + beta4 - 1 is exactly the normalization.
  EXPECT_EQ(pvi_relation_defect(k1_definition().target_beta), relation());
  EXPECT_EQ(pvi_relation_defect(k2_definition().target_beta), relation());
}

TEST(Reduction, T2Inversion) {
  RatFun t1 = RatFun::gen(Gen::t), t2 = t2_of_t1();
  RatFun lhs = (t1 - RatFun(1) + RatFun(2) * t2).pow(2);
  EXPECT_EQ(lhs, RatFun(4) * t2 * (t2 - RatFun(1)));
}

TEST(Reduction, K1Pipeline) {
  auto r = k1_pipeline();
  std::vector<Status> expect{Status::pass_mod_relation, Status::pass_mod_relation};
  EXPECT_EQ(r.parts, expect) << r.detail;
}

TEST(Reduction, K2Pipeline) {
  auto r = k2_pipeline();
  std::vector<Status> expect{Status::pass_mod_relation, Status::pass_mod_relation};
  EXPECT_EQ(r.parts, expect) << r.detail;
}

TEST(Reduction, DroppingTimeDerivativeFails) {
  PipelineOptions opts;
  opts.include_time_derivative = false;
  EXPECT_EQ(verify_pipeline(k1_definition(), opts).status, Status::fail);
  EXPECT_EQ(verify_pipeline(k2_definition(), opts).status, Status::fail);
}

TEST(Reduction, PerturbedBetaFails) {
  for (const auto& p : {k1_definition(), k2_definition()})
    for (int k = 0; k < 5; ++k) {
      PipelineOptions opts;
      opts.perturb_beta = k;
      EXPECT_EQ(verify_pipeline(p, opts).status, Status::fail) << p.name << " beta" << k;
    }
}

TEST(Reduction, StagesEndAtFinalPair) {
  auto stages = pipeline_stages(k1_definition());
  ASSERT_EQ(stages.size(), 3u);
  EXPECT_EQ(stages.back().q, R("t - y"));
  EXPECT_EQ(stages.back().p, R("x"));
  EXPECT_NE(dump_pipeline(k2_definition()).find("step6"), std::string::npos);
}
