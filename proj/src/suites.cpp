#include "cpvi/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cpvi/charts/charts.hpp"
#include "cpvi/exactalg/text.hpp"
#include "cpvi/numlab/numlab.hpp"
#include "cpvi/reduction/reduction.hpp"
#include "cpvi/weyl/weyl.hpp"

namespace cpvi {

namespace {

// Pinned numeric tolerances.
constexpr double kRoundtripRtol = 1e-10;
constexpr double kRoundtripMaxDeviation = 1e-8;
constexpr double kDivisorRtol = 1e-10;
constexpr double kDivisorAtol = 1e-12;
constexpr double kDivisorFactor = 100;
constexpr double kMinObservedOrder = 4.5;

VerificationReport simple(std::string id, bool ok, std::string detail, Method m = Method::symbolic) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.method = m;
  r.status = ok ? Status::pass : Status::fail;
  r.detail = std::move(detail);
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

VerificationReport numeric_roundtrip(int i) {
  Stopwatch sw;
  static_assert(kRtolSweep[2] == kRoundtripRtol);
  auto sweep = backlund_roundtrip_sweep(i);
  bool ok = true;
  std::ostringstream os;
  os << "rtol 1e-6/1e-8/1e-10 over [0.3, 0.6]:";
  for (const auto& r : sweep) {
    ok = ok && r.deviation[2] < kRoundtripMaxDeviation && r.monotone();
    os << " (" << fmt(r.deviation[0]) << ", " << fmt(r.deviation[1]) << ", " << fmt(r.deviation[2]) << ")";
  }
  auto rep = simple("numeric.roundtrip.s" + std::to_string(i), ok, os.str(), Method::numeric);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport numeric_divisor(int i) {
  Stopwatch sw;
  IntegratorConfig cfg;
  cfg.rtol = kDivisorRtol;
  cfg.atol = kDivisorAtol;
  auto samples = divisor_drift_samples(i, 3, cfg);
  double worst = 0;
  for (const auto& s : samples) worst = std::max(worst, s.drift);
  auto rep = simple("numeric.divisor.f" + std::to_string(i), worst < kDivisorFactor * cfg.atol,
                    "max |f" + std::to_string(i) + "| = " + fmt(worst) + " over 3 trajectories (bound " +
                        fmt(kDivisorFactor * cfg.atol) + ")",
                    Method::numeric);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

VerificationReport expect_failure(VerificationReport r) {
  r.check_id += ".control";
  r.detail = (r.status == Status::fail ? "fails as expected: " : "expected a failure: ") + r.detail;
  r.status = r.status == Status::fail ? Status::pass : Status::fail;
  r.parts.clear();
  return r;
}

std::vector<VerificationReport> symmetry_suite() {
  std::vector<VerificationReport> out;
  for (int i = 0; i < 5; ++i) out.push_back(verify_backlund(i));
  BacklundOptions no_dt;
  no_dt.include_time_derivative = false;
  out.push_back(expect_failure(verify_backlund(2, no_dt)));
  for (int i = 0; i < 5; ++i) {
    out.push_back(verify_exp_formula(i));
    out.push_back(verify_divisor_preserved(i));
    out.push_back(simple("param.s" + std::to_string(i) + ".relation", generator(i).param.preserves_relation(),
                         "affine action maps the normalization hyperplane to itself"));
  }
  double order = observed_order();
  out.push_back(simple("numeric.integrator_order", order >= kMinObservedOrder,
                       "observed order " + fmt(order) + " on x' = x", Method::numeric));
  for (int i = 0; i < 5; ++i) out.push_back(numeric_roundtrip(i));
  return out;
}

std::vector<VerificationReport> coxeter_suite() {
  std::vector<VerificationReport> out;
  for (int i = 0; i < 5; ++i) out.push_back(verify_involution(i));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) out.push_back(verify_coxeter(i, j));
  return out;
}

std::vector<VerificationReport> holomorphy_suite() {
  std::vector<VerificationReport> out;
  for (int j = 0; j < 5; ++j) {
    out.push_back(verify_chart_roundtrip(j));
    out.push_back(verify_chart_symplectic(j));
    out.push_back(verify_chart_polynomial(j));
  }
  out.push_back(expect_failure(verify_chart_polynomial(2, false)));
  out.push_back(verify_A1());
  return out;
}

std::vector<VerificationReport> reduction_suite() {
  std::vector<VerificationReport> out;
  const RatFun relation = parse_ratfun("a0 + 2*a1 + 3*a2 + 2*a3 + a4 - 1");
  for (const auto& p : {k1_definition(), k2_definition()}) {
    out.push_back(verify_pipeline(p));
    RatFun defect = pvi_relation_defect(p.target_beta);
    out.push_back(simple("reduction." + p.name + ".beta_relation", defect == relation,
                         "beta0 + beta1 + 2 beta2 + beta3 + beta4 - 1 = " + to_string(defect)));
    bool steps = true;
    std::string bad;
    for (const auto& s : p.steps)
      if (!verify_step_symplectic(s)) {
        steps = false;
        bad += " " + s.label;
      }
    out.push_back(simple("reduction." + p.name + ".steps_symplectic", steps,
                         steps ? std::to_string(p.steps.size()) + " steps, {p, q} = 1" : "not symplectic:" + bad));
    PipelineOptions no_dt;
    no_dt.include_time_derivative = false;
    out.push_back(expect_failure(verify_pipeline(p, no_dt)));
    for (int k = 0; k < 5; ++k) {
      PipelineOptions o;
      o.perturb_beta = k;
      out.push_back(expect_failure(verify_pipeline(p, o)));
    }
  }
  RatFun t1 = RatFun::gen(Gen::t), t2 = t2_of_t1();
  bool inv = (t1 - RatFun(1) + RatFun(2) * t2).pow(2) == RatFun(4) * t2 * (t2 - RatFun(1));
  out.push_back(simple("reduction.k2.t2_inversion", inv, "(T1 - 1 + 2 T2)^2 = 4 T2 (T2 - 1) with T2 = " +
                                                             to_string(t2)));
  return out;
}

std::vector<VerificationReport> divisor_suite() {
  std::vector<VerificationReport> out;
  for (int i = 0; i < 5; ++i) out.push_back(invariant_divisor_check(i));
  for (int i = 0; i < 5; ++i) out.push_back(numeric_divisor(i));
  return out;
}

std::vector<VerificationReport> integrals_suite(const SuiteOptions& opts) {
  std::vector<VerificationReport> out;
  Stopwatch sw;
  FirstIntegralResult r = first_integral_search(opts.deg_phase, opts.deg_t, opts.alpha_samples);
  bool consistent = true;
  for (const auto& k : r.per_alpha) consistent = consistent && k == r.basis;
  bool only_constants = r.basis.size() == 1 && r.basis[0] == SparsePoly(1);
  std::ostringstream os;
  os << "deg_phase=" << opts.deg_phase << ", deg_t=" << opts.deg_t << ", " << r.unknowns << " unknowns, "
     << r.alphas.size() << " parameter specializations; kernel:";
  for (const auto& p : r.basis) os << " [" << to_string(p) << "]";
  if (!consistent) os << "; kernels differ between specializations";
  auto rep = simple("integrals.first_integral_search", only_constants && consistent, os.str());
  rep.elapsed_ms = sw.elapsed_ms();
  out.push_back(rep);

  IntegratorConfig cfg;
  cfg.rtol = 1e-10;
  cfg.atol = 1e-12;
  out.push_back(hamiltonian_not_conserved_check(cfg));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symmetry", "coxeter", "holomorphy", "reduction", "divisors",
                                                 "integrals"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  std::vector<VerificationReport> out;
  auto add = [&](std::vector<VerificationReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  bool all = name == "all";
  bool known = all;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  if (all || name == "symmetry") add(symmetry_suite());
  if (all || name == "coxeter") add(coxeter_suite());
  if (all || name == "holomorphy") add(holomorphy_suite());
  if (all || name == "reduction") add(reduction_suite());
  if (all || name == "divisors") add(divisor_suite());
  if (all || name == "integrals") add(integrals_suite(opts));
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace cpvi
