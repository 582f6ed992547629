#include "cpvi/reduction/reduction.hpp"

#include <sstream>

#include "cpvi/exactalg/text.hpp"

namespace cpvi {

namespace {

RatFun v(Gen g) { return RatFun::gen(g); }
RatFun a(std::size_t k) { return RatFun::gen(param_gen(k)); }

SymplecticStep step(std::string label, Gen q_slot, Gen p_slot, RatFun q, RatFun p) {
  return {std::move(label), q_slot, p_slot, std::move(q), std::move(p), std::nullopt};
}

// Pair and flow carried through the steps, all in source variables.
struct Flow {
  Gen q_slot, p_slot;
  RatFun q, p;    // current pair
  RatFun fq, fp;  // source field in the working time
};

RatFun along(const RatFun& g, const Flow& f, bool with_t) {
  RatFun out = g.derivative(f.q_slot) * f.fq + g.derivative(f.p_slot) * f.fp;
  if (with_t) out += g.derivative(Gen::t);
  return out;
}

Flow start(const ReductionPipeline& p) {
  const auto [q, pm] = p.source.layout.pairs.front();
  VectorField field = vector_field(p.source);
  return {q, pm, v(q), v(pm), field.components[0], field.components[1]};
}

void apply(Flow& f, const SymplecticStep& s) {
  if (s.time_change) {
    Substitution sub;
    sub.bind(Gen::t, *s.time_change);
    RatFun scale = s.time_change->derivative(Gen::t);
    f.q = substitute(f.q, sub);
    f.p = substitute(f.p, sub);
    f.fq = substitute(f.fq, sub) * scale;
    f.fp = substitute(f.fp, sub) * scale;
    return;
  }
  Substitution sub;
  sub.bind(s.q_slot, f.q);
  sub.bind(s.p_slot, f.p);
  RatFun q = substitute(s.q, sub);
  RatFun p = substitute(s.p, sub);
  f.q = std::move(q);
  f.p = std::move(p);
}

std::string status_of(const RatFun& diff, Status& st) {
  if (diff.is_zero()) {
    st = Status::pass;
    return "identically";
  }
  if (reduce_mod_relation(diff).is_zero()) {
    st = Status::pass_mod_relation;
    return "modulo the normalization";
  }
  st = Status::fail;
  return "fails";
}

}  // namespace

bool verify_step_symplectic(const SymplecticStep& s) {
  if (s.time_change) return true;
  return poisson_bracket(s.p, s.q) == RatFun(1);
}

ReductionPipeline k1_definition() {
  ReductionPipeline p;
  p.name = "k1";
  p.source = build_K1();
  RatFun x = v(Gen::x), y = v(Gen::y), t = v(Gen::t);
  p.steps.push_back(step("step1: x1 = x, y1 = y - t", Gen::x, Gen::y, x, y - t));
  p.steps.push_back(step("step2: x2 = -y1, y2 = x1", Gen::x, Gen::y, -y, x));
  p.target_beta = {a(0), a(2) + a(3), a(1), a(2) + a(3) + a(4), a(2)};
  return p;
}

RatFun t2_of_t1() {
  RatFun t = v(Gen::t), one(1);
  return -(t - one).pow(2) / (RatFun(4) * t);
}

ReductionPipeline k2_definition() {
  ReductionPipeline p;
  p.name = "k2";
  p.source = build_K2();
  RatFun z = v(Gen::z), w = v(Gen::w), t = v(Gen::t), one(1), two(2);
  SymplecticStep s1 = step("step1: t = T1^2", Gen::z, Gen::w, z, w);
  s1.time_change = t * t;
  p.steps.push_back(s1);
  p.steps.push_back(step("step2: z1 = 2z, w1 = w/2 + 1/2", Gen::z, Gen::w, two * z, w / two + one / two));
  p.steps.push_back(step("step3: z2 = -(z1 w1 - a3) w1, w2 = 1/w1", Gen::z, Gen::w, -(z * w - a(3)) * w, one / w));
  RatFun c = (t - one) / (t + one);
  p.steps.push_back(
      step("step4: z3 = (T1-1)/(T1+1) z2, w3 = (T1+1)/(T1-1) w2 + 2/(1-T1)", Gen::z, Gen::w, c * z,
           w / c + two / (one - t)));
  p.steps.push_back(step("step5: z4 = -(z3 w3 - a3) w3, w4 = 1/w3", Gen::z, Gen::w, -(z * w - a(3)) * w, one / w));
  p.steps.push_back(step("step6: z5 = w4, w5 = -z4", Gen::z, Gen::w, w, -z));
  p.target_beta = {a(0) + a(2) - one, a(0) + a(2), a(3), a(4), one - a(0) + two * a(1) + a(2)};
  p.target_scale = BigRational(1, 2);
  p.target_time = t2_of_t1();
  return p;
}

VerificationReport verify_pipeline(const ReductionPipeline& p, const PipelineOptions& opts) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "reduction." + p.name;
  if (!opts.include_time_derivative) rep.check_id += ".no_dt";
  if (opts.perturb_beta) rep.check_id += ".beta" + std::to_string(*opts.perturb_beta) + "+1";

  Flow f = start(p);
  for (const auto& s : p.steps) apply(f, s);

  PVIParameters beta = p.target_beta;
  if (opts.perturb_beta) beta[static_cast<std::size_t>(*opts.perturb_beta)] += RatFun(1);
  Hamiltonian target = build_PVI(beta, f.q_slot, f.p_slot, Gen::t);
  target.value = target.value * RatFun(p.target_scale);
  VectorField g = vector_field(target);

  Substitution at_image;
  at_image.bind(f.q_slot, f.q);
  at_image.bind(f.p_slot, f.p);
  at_image.bind(Gen::t, p.target_time);
  RatFun jac = p.target_time.derivative(Gen::t);

  std::ostringstream os;
  const char* names[] = {"q", "p"};
  const RatFun* pair[] = {&f.q, &f.p};
  for (std::size_t k = 0; k < 2; ++k) {
    RatFun lhs = along(*pair[k], f, opts.include_time_derivative);
    RatFun rhs = jac * substitute(g.components[k], at_image);
    Status st;
    os << (k ? "; " : "") << names[k] << ": " << status_of(lhs - rhs, st);
    rep.parts.push_back(st);
  }
  rep.status = combine(rep.parts);
  rep.detail = os.str();
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport k1_pipeline() { return verify_pipeline(k1_definition()); }
VerificationReport k2_pipeline() { return verify_pipeline(k2_definition()); }

std::vector<PipelineStage> pipeline_stages(const ReductionPipeline& p) {
  std::vector<PipelineStage> out;
  Flow f = start(p);
  out.push_back({"source", f.q, f.p, f.fq, f.fp});
  for (const auto& s : p.steps) {
    apply(f, s);
    out.push_back({s.label, f.q, f.p, along(f.q, f, true), along(f.p, f, true)});
  }
  return out;
}

std::string dump_pipeline(const ReductionPipeline& p) {
  std::ostringstream os;
  os << "pipeline " << p.name << "\n";
  os << "source: " << p.source.label << " = " << to_string(p.source.value) << "\n";
  for (const auto& st : pipeline_stages(p)) {
    os << "[" << st.label << "]\n";
    os << "  q = " << to_string(st.q) << "\n";
    os << "  p = " << to_string(st.p) << "\n";
    os << "  dq/dt = " << to_string(st.dq) << "\n";
    os << "  dp/dt = " << to_string(st.dp) << "\n";
  }
  os << "target: " << to_string(RatFun(p.target_scale)) << " * H_VI(q, p, " << to_string(p.target_time) << "; ";
  for (std::size_t k = 0; k < 5; ++k) os << (k ? ", " : "") << to_string(p.target_beta[k]);
  os << ")\n";
  return os.str();
}

}  // namespace cpvi
