#include "cpvi/charts/charts.hpp"

#include <sstream>
#include <stdexcept>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"

namespace cpvi {

namespace {

RatFun v(Gen g) { return RatFun::gen(g); }
RatFun a(std::size_t k) { return RatFun::gen(param_gen(k)); }

BirationalMap make_map(std::string label, RatFun x, RatFun y, RatFun z, RatFun w) {
  BirationalMap m;
  m.label = std::move(label);
  m.coord = {std::move(x), std::move(y), std::move(z), std::move(w)};
  return m;
}

bool pure_power_of(const SparsePoly& p, Gen g) {
  if (p.size() != 1) return false;
  const Monomial& m = p.leading().first;
  return m.total_degree() == m[g];
}

}  // namespace

unsigned phase_degree(const SparsePoly& p) { return p.total_degree(GenSet(kPhaseGens)); }

Chart chart(int j) {
  if (j < 0 || j > 4) throw std::out_of_range("chart index must be in 0..4");
  RatFun x = v(Gen::x), y = v(Gen::y), z = v(Gen::z), w = v(Gen::w), t = v(Gen::t), one(1);
  std::string f = "r" + std::to_string(j), b = f + "^-1";
  switch (j) {
    case 0:
      return {0, make_map(f, one / x, -(y * x + a(0)) * x, z, w),
              make_map(b, one / x, -x * (y * x + a(0)), z, w), Gen::x};
    case 1:
      return {1, make_map(f, -(x * y - a(1)) * y, one / y, z, w),
              make_map(b, y * (a(1) - x * y), one / y, z, w), Gen::y};
    case 2:
      return {2, make_map(f, one / x, -((y + w * w - t) * x + a(2)) * x, z - RatFun(2) * x * w, w),
              make_map(b, one / x, -x * (y * x + a(2)) - w * w + t, z + RatFun(2) * w / x, w), Gen::x};
    case 3:
      return {3, make_map(f, x, y, -(z * w - a(3)) * w, one / w),
              make_map(b, x, y, w * (a(3) - z * w), one / w), Gen::w};
    default:
      return {4, make_map(f, x, y, one / z, -((w - one) * z + a(4)) * z),
              make_map(b, x, y, one / z, one - z * (w * z + a(4))), Gen::z};
  }
}

TransformedHamiltonian transformed_hamiltonian(int j, bool with_correction) {
  Chart c = chart(j);
  SparsePoly k = coupled_polynomial();
  if (j == 2 && with_correction) k += time_factor() * SparsePoly::gen(Gen::x);
  RatFun r = c.inverse.pullback(RatFun(k));

  auto polynomial = [&](const RatFun& f) -> std::optional<SparsePoly> {
    if (!pure_power_of(f.den(), c.denominator_variable) && !f.den().is_constant())
      throw NonPolynomial("r" + std::to_string(j) + ": denominator " + to_string(f.den()) + " is not a power of " +
                              std::string(name(c.denominator_variable)),
                          {});
    return f.as_polynomial();
  };

  TransformedHamiltonian out;
  if (auto p = polynomial(r)) {
    out.poly = *p;
  } else {
    RatFun reduced = reduce_mod_relation(r);
    auto q = polynomial(reduced);
    if (!q) {
      const Monomial& d = reduced.den().leading().first;
      std::vector<std::string> offending;
      for (const auto& [m, coef] : reduced.num().terms())
        if (!d.divides(m)) offending.push_back(to_string(SparsePoly::monomial(m, coef)));
      throw NonPolynomial("r" + std::to_string(j) + (j == 2 && !with_correction ? "(K)" : "") +
                              " is not polynomial; denominator " + to_string(reduced.den()),
                          std::move(offending));
    }
    out.poly = *q;
    out.needs_relation = true;
  }
  out.phase_degree = phase_degree(out.poly);
  return out;
}

VerificationReport verify_chart_roundtrip(int j) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "chart.r" + std::to_string(j) + ".roundtrip";
  Chart c = chart(j);
  bool there = is_identity(compose(c.forward, c.inverse));
  bool back = is_identity(compose(c.inverse, c.forward));
  rep.parts = {there ? Status::pass : Status::fail, back ? Status::pass : Status::fail};
  rep.status = combine(rep.parts);
  rep.detail = std::string("forward o inverse: ") + (there ? "id" : "not id") +
               "; inverse o forward: " + (back ? "id" : "not id");
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_chart_symplectic(int j) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "chart.r" + std::to_string(j) + ".symplectic";
  const auto& q = chart(j).forward.coord;  // x_j, y_j, z_j, w_j
  // (i, k, expected {q_i, q_k})
  struct Pair {
    std::size_t i, k;
    long expect;
  };
  const Pair pairs[] = {{1, 0, 1}, {3, 2, 1}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}};
  std::ostringstream os;
  static const char* names[] = {"x", "y", "z", "w"};
  for (const auto& p : pairs) {
    RatFun b = poisson_bracket(q[p.i], q[p.k]);
    bool ok = b == RatFun(p.expect);
    rep.parts.push_back(ok ? Status::pass : Status::fail);
    if (!ok) os << "{" << names[p.i] << j << "," << names[p.k] << j << "} = " << to_string(b) << "; ";
  }
  rep.status = combine(rep.parts);
  rep.detail = rep.status == Status::pass ? "{y,x} = {w,z} = 1, others 0" : os.str();
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_chart_polynomial(int j, bool with_correction) {
  Stopwatch sw;
  VerificationReport rep;
  std::string what = j == 2 ? (with_correction ? "K+x" : "K") : "K";
  rep.check_id = "chart.r" + std::to_string(j) + ".polynomial" + (j == 2 && !with_correction ? ".uncorrected" : "");
  try {
    TransformedHamiltonian th = transformed_hamiltonian(j, with_correction);
    rep.status = th.needs_relation ? Status::pass_mod_relation : Status::pass;
    rep.detail = "r" + std::to_string(j) + "(" + what + ") polynomial with K = H, t(1-t) cleared; degree " +
                 std::to_string(th.phase_degree) + " in x,y,z,w";
  } catch (const NonPolynomial& e) {
    rep.status = Status::fail;
    rep.detail = e.what();
    if (!e.offending().empty()) rep.detail += "; offending: " + e.offending().front();
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_A1() {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "holomorphy.A1";
  unsigned dh = phase_degree(coupled_polynomial());
  unsigned d1 = phase_degree(k1_polynomial());
  unsigned d2 = phase_degree(k2_polynomial());
  rep.status = dh == 6 ? Status::pass : Status::fail;
  rep.detail = "deg t(1-t)H = " + std::to_string(dh) + "; K1: " + std::to_string(d1) + ", K2: " + std::to_string(d2);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace cpvi
