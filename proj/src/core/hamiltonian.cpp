#include "cpvi/core/hamiltonian.hpp"

#include <stdexcept>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"

namespace cpvi {

namespace {

// t(1-t) H, term group by term group. The K1 and K2 literals are transcribed
// separately; restricting kCoupledText to a coordinate plane must reproduce
// them.
constexpr const char* kCoupledText =
    "x^2*y^3 + ((1 - 2*t)*x - 2*a1 - a2 - a3)*x*y^2"
    " + ((t - 1)*t*x^2 + ((4*a1 + 4*a2 + 3*a3 + a4)*t - (2*a1 + 2*a2 + 2*a3 + a4))*x"
    "    + a1*(a1 + a2 + a3))*y"
    " - (1 - t)*t*a0*x"
    " + 1/4*(-z^2*w^4 + 2*a3*z*w^3 + ((1 + t)*z^2 + 2*(2*a1 + 2*a2 + a3)*z - a3^2)*w^2"
    "    - 2*(((-2*a1 - 2*a2 - a3 - a4)*t + (2*a1 + 2*a2 + 2*a3 + a4))*z + a3*(2*a1 + 2*a2 + a3))*w"
    "    - t*(z + 4*a1 + 4*a2 + 2*a3)*z)"
    " + (t*x*z + (1 - t)*x*z*w - x*z*w^2 - x*y*z + x*y*z*w - a1*(w - 1)*z + a3*x*w)*y";

constexpr const char* kK1Text =
    "x^2*y^3 + ((1 - 2*t)*x - 2*a1 - a2 - a3)*x*y^2"
    " + ((t - 1)*t*x^2 + ((4*a1 + 4*a2 + 3*a3 + a4)*t - (2*a1 + 2*a2 + 2*a3 + a4))*x"
    "    + a1*(a1 + a2 + a3))*y"
    " - (1 - t)*t*a0*x";

constexpr const char* kK2Text =
    "1/4*(-z^2*w^4 + 2*a3*z*w^3 + ((1 + t)*z^2 + 2*(2*a1 + 2*a2 + a3)*z - a3^2)*w^2"
    "    - 2*(((-2*a1 - 2*a2 - a3 - a4)*t + (2*a1 + 2*a2 + 2*a3 + a4))*z + a3*(2*a1 + 2*a2 + a3))*w"
    "    - t*(z + 4*a1 + 4*a2 + 2*a3)*z)";

constexpr const char* kCouplingText =
    "(t*x*z + (1 - t)*x*z*w - x*z*w^2 - x*y*z + x*y*z*w - a1*(w - 1)*z + a3*x*w)*y";

SparsePoly g(Gen gen) { return SparsePoly::gen(gen); }

}  // namespace

bool check_parameter_relation(const ParameterVector& a) {
  return a[0] + 2 * a[1] + 3 * a[2] + 2 * a[3] + a[4] == 1;
}

std::vector<Gen> PhaseLayout::variables() const {
  std::vector<Gen> out;
  for (const auto& [q, p] : pairs) {
    out.push_back(q);
    out.push_back(p);
  }
  return out;
}

PhaseLayout coupled_layout() { return PhaseLayout{{{Gen::x, Gen::y}, {Gen::z, Gen::w}}, Gen::t}; }

const RatFun& VectorField::operator[](Gen g) const {
  auto vars = layout.variables();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == g) return components[i];
  throw std::out_of_range("generator is not a phase variable of this field");
}

const SparsePoly& coupled_polynomial() {
  static const SparsePoly p = parse_poly(kCoupledText);
  return p;
}

const SparsePoly& k1_polynomial() {
  static const SparsePoly p = parse_poly(kK1Text);
  return p;
}

const SparsePoly& k2_polynomial() {
  static const SparsePoly p = parse_poly(kK2Text);
  return p;
}

const SparsePoly& coupling_polynomial() {
  static const SparsePoly p = parse_poly(kCouplingText);
  return p;
}

SparsePoly time_factor() { return g(Gen::t) - g(Gen::t) * g(Gen::t); }

Hamiltonian build_coupled_H() { return {RatFun(coupled_polynomial(), time_factor()), coupled_layout(), "H"}; }

Hamiltonian build_K1() {
  return {RatFun(k1_polynomial(), time_factor()), PhaseLayout{{{Gen::x, Gen::y}}, Gen::t}, "K1"};
}

Hamiltonian build_K2() {
  return {RatFun(k2_polynomial(), time_factor()), PhaseLayout{{{Gen::z, Gen::w}}, Gen::t}, "K2"};
}

RatFun pvi_relation_defect(const PVIParameters& b) { return b[0] + b[1] + RatFun(2) * b[2] + b[3] + b[4] - RatFun(1); }

Hamiltonian build_PVI(const PVIParameters& beta, Gen position, Gen momentum, Gen time) {
  bool numeric = true;
  for (const auto& b : beta) numeric = numeric && b.is_polynomial() && b.num().is_constant();
  if (numeric && !pvi_relation_defect(beta).is_zero())
    throw BadParameterRelation("beta0 + beta1 + 2 beta2 + beta3 + beta4 != 1");

  RatFun q = RatFun::gen(position);
  RatFun p = RatFun::gen(momentum);
  RatFun s = RatFun::gen(time);
  RatFun one(1);
  RatFun bracket = p * p * (q - s) * (q - one) * q -
                   ((beta[0] - one) * (q - one) * q + beta[3] * (q - s) * q + beta[4] * (q - s) * (q - one)) * p +
                   beta[2] * (beta[1] + beta[2]) * q;
  RatFun value = bracket / (s * (s - one));
  return {value, PhaseLayout{{{position, momentum}}, time}, "H_VI"};
}

VectorField vector_field(const Hamiltonian& h) {
  VectorField f{h.layout, {}};
  for (const auto& [q, p] : h.layout.pairs) {
    f.components.push_back(h.value.derivative(p));
    f.components.push_back(-h.value.derivative(q));
  }
  return f;
}

RatFun poisson_bracket(const RatFun& f, const RatFun& h) {
  RatFun out;
  for (auto [q, p] : {std::pair{Gen::x, Gen::y}, std::pair{Gen::z, Gen::w}}) {
    if (!(f.depends_on(q) || f.depends_on(p)) || !(h.depends_on(q) || h.depends_on(p))) continue;
    out += f.derivative(p) * h.derivative(q) - f.derivative(q) * h.derivative(p);
  }
  return out;
}

RatFun derivative_along(const RatFun& f, const VectorField& field, bool include_explicit_time) {
  RatFun out;
  auto vars = field.layout.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!f.depends_on(vars[i])) continue;
    out += f.derivative(vars[i]) * field.components[i];
  }
  if (include_explicit_time) out += f.derivative(field.layout.time);
  return out;
}

}  // namespace cpvi
