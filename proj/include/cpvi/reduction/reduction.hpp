#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpvi/core/hamiltonian.hpp"
#include "cpvi/report.hpp"

namespace cpvi {

/// One change of variables in a reduction. The new pair (q, p) is written in
/// terms of the previous pair, which lives in the generator slots
/// (q_slot, p_slot); the time slot t holds the pipeline's working time.
struct SymplecticStep {
  std::string label;
  Gen q_slot = Gen::x;
  Gen p_slot = Gen::y;
  RatFun q;
  RatFun p;
  /// Old time as a function of the new one, for pure time changes.
  std::optional<RatFun> time_change;
};

/// {p, q} = 1 for the step's new pair. Time changes are not checked here.
bool verify_step_symplectic(const SymplecticStep& s);

struct ReductionPipeline {
  std::string name;
  Hamiltonian source;
  /// A step with a time change rescales the flow by d(old t)/d(new t).
  std::vector<SymplecticStep> steps;
  PVIParameters target_beta;
  BigRational target_scale = 1;
  /// Target time as a function of the working time.
  RatFun target_time = RatFun::gen(Gen::t);
};

/// (x, y) -> (x1, y1) = (x, y - t) -> (x2, y2) = (-y1, x1), onto
/// H_VI(x2, y2, t; a0, a2 + a3, a1, a2 + a3 + a4, a2).
ReductionPipeline k1_definition();

/// t = T1^2 and five coordinate changes onto
/// 1/2 H_VI(z5, w5, T2; a0 + a2 - 1, a0 + a2, a3, a4, 1 - a0 + 2a1 + a2) with
/// T2 = -(T1 - 1)^2 / (4 T1). The working time T1 occupies the t slot.
ReductionPipeline k2_definition();

/// -(T1 - 1)^2 / (4 T1), T1 in the t slot.
RatFun t2_of_t1();

struct PipelineOptions {
  bool include_time_derivative = true;
  /// Adds +1 to target beta_k when set.
  std::optional<int> perturb_beta;
};

/// Chain-rule derivative of the final pair along the source flow against the
/// target PVI field at the images. One part per component.
VerificationReport verify_pipeline(const ReductionPipeline& p, const PipelineOptions& opts = {});

VerificationReport k1_pipeline();
VerificationReport k2_pipeline();

/// The pair after each step as functions of the source variables, with its
/// derivative along the source flow.
struct PipelineStage {
  std::string label;
  RatFun q, p;
  RatFun dq, dp;
};
std::vector<PipelineStage> pipeline_stages(const ReductionPipeline& p);

/// Canonical text for every stage, followed by the target Hamiltonian.
std::string dump_pipeline(const ReductionPipeline& p);

}  // namespace cpvi
