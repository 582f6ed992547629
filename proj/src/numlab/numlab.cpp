#include "cpvi/numlab/numlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cpvi/errors.hpp"
#include "cpvi/sampling.hpp"
#include "cpvi/weyl/weyl.hpp"

namespace cpvi {

namespace {

constexpr std::array<Gen, 5> kNumericGens = {Gen::x, Gen::y, Gen::z, Gen::w, Gen::t};

Assignment params_only(const ParameterVector& alpha) {
  Assignment a;
  for (std::size_t k = 0; k < 5; ++k) a.set(param_gen(k), alpha[k]);
  return a;
}

std::array<double, 5> args(const NumPoint& p) { return {p.phase[0], p.phase[1], p.phase[2], p.phase[3], p.t}; }

void check_span(double t0, double t1) {
  double lo = std::min(t0, t1), hi = std::max(t0, t1);
  if ((lo <= 0 && 0 <= hi) || (lo <= 1 && 1 <= hi)) throw std::invalid_argument("time span must avoid t = 0 and t = 1");
}

BigRational small_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return make_rational(n(rng), d(rng));
}

// Incremental reduced row echelon form over the integers. Every stored row
// is primitive and zero in the pivot columns of the other rows.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  void add(std::vector<BigInteger> r) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (r[c] == 0) continue;
      eliminate(r, rows_[k], c);
    }
    auto it = std::find_if(r.begin(), r.end(), [](const BigInteger& v) { return v != 0; });
    if (it == r.end()) return;
    std::size_t c = static_cast<std::size_t>(it - r.begin());
    make_primitive(r);
    for (auto& row : rows_)
      if (row[c] != 0) eliminate(row, r, c);
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<BigInteger>>& rows() const { return rows_; }

  std::vector<std::vector<BigRational>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::vector<BigRational>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<BigRational> v(cols_, BigRational(0));
      v[f] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][f] == 0) continue;
        BigRational q(-rows_[k][f], rows_[k][pivots_[k]]);
        q.canonicalize();
        v[pivots_[k]] = q;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  // target := p * target - target[c] * pivot_row, then primitive.
  static void eliminate(std::vector<BigInteger>& target, const std::vector<BigInteger>& pivot_row, std::size_t c) {
    BigInteger g = gcd(pivot_row[c], target[c]);
    BigInteger p = pivot_row[c] / g, q = target[c] / g;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (pivot_row[j] == 0) {
        if (target[j] != 0) target[j] *= p;
      } else {
        target[j] = p * target[j] - q * pivot_row[j];
      }
    }
    make_primitive(target);
  }

  static void make_primitive(std::vector<BigInteger>& r) {
    BigInteger g = 0;
    for (const auto& v : r)
      if (v != 0) {
        g = gcd(g, v);
        if (g == 1) return;
      }
    if (g > 1)
      for (auto& v : r)
        if (v != 0) v /= g;
  }

  std::size_t cols_;
  std::vector<std::vector<BigInteger>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<BigInteger> integer_row(const std::map<std::size_t, BigRational>& entries, std::size_t cols) {
  BigInteger l = 1;
  for (const auto& [c, v] : entries) l = lcm(l, v.get_den());
  std::vector<BigInteger> row(cols, BigInteger(0));
  for (const auto& [c, v] : entries) row[c] = v.get_num() * (l / v.get_den());
  return row;
}

SparsePoly kernel_poly(const std::vector<BigRational>& v, const std::vector<SparsePoly>& basis) {
  SparsePoly out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) out += basis[j] * v[j];
  if (!out.is_zero()) out *= BigRational(1) / out.leading().second;
  return out;
}

}  // namespace

CompiledRatFun::CompiledRatFun(const RatFun& f, const ParameterVector& alpha) {
  Assignment a = params_only(alpha);
  // Renormalize so that factors cancelled by the specialization disappear.
  RatFun g(f.num().specialize(a), f.den().specialize(a));
  num_ = compile(g.num());
  den_ = compile(g.den());
}

std::vector<CompiledRatFun::Term> CompiledRatFun::compile(const SparsePoly& p) {
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < 5; ++k)
      if (m[param_gen(k)] != 0) throw std::invalid_argument("parameter left unspecialized");
    Term t{c.get_d(), {}};
    for (std::size_t k = 0; k < 5; ++k) t.exp[k] = m[kNumericGens[k]];
    out.push_back(t);
  }
  return out;
}

double CompiledRatFun::eval(const std::vector<Term>& terms, const std::array<double, 5>& v) {
  double s = 0;
  for (const auto& t : terms) {
    double m = t.coef;
    for (std::size_t k = 0; k < 5; ++k)
      for (unsigned e = 0; e < t.exp[k]; ++e) m *= v[k];
    s += m;
  }
  return s;
}

double CompiledRatFun::numerator(const std::array<double, 5>& v) const { return eval(num_, v); }
double CompiledRatFun::denominator(const std::array<double, 5>& v) const { return eval(den_, v); }
double CompiledRatFun::operator()(const std::array<double, 5>& v) const { return numerator(v) / denominator(v); }

NumPoint to_double(const PhasePoint& p) {
  NumPoint out;
  for (std::size_t i = 0; i < 4; ++i) out.phase[i] = p.phase[i].get_d();
  out.t = p.t.get_d();
  return out;
}

NumericSystem::NumericSystem(const ParameterVector& alpha) : alpha_(alpha) {
  if (!check_parameter_relation(alpha))
    throw BadParameterRelation("alpha0 + 2 alpha1 + 3 alpha2 + 2 alpha3 + alpha4 != 1");
  Hamiltonian h = build_coupled_H();
  VectorField f = vector_field(h);
  for (std::size_t i = 0; i < 4; ++i) field_[i] = CompiledRatFun(f.components[i], alpha);
  h_ = CompiledRatFun(h.value, alpha);
}

OdeRhs NumericSystem::rhs() const {
  return [field = field_](double t, const std::vector<double>& u, std::vector<double>& du) {
    std::array<double, 5> v{u[0], u[1], u[2], u[3], t};
    for (std::size_t i = 0; i < 4; ++i) du[i] = field[i](v);
  };
}

double NumericSystem::hamiltonian(double t, const std::array<double, 4>& u) const {
  return h_({u[0], u[1], u[2], u[3], t});
}

Trajectory integrate(const ParameterVector& alpha, const NumPoint& init, double t1, const IntegratorConfig& cfg) {
  check_span(init.t, t1);
  NumericSystem sys(alpha);
  return integrate_ode(sys.rhs(), init.t, t1, {init.phase.begin(), init.phase.end()}, cfg);
}

NumPoint apply_numeric(const BirationalMap& m, const ParameterVector& alpha, const NumPoint& p, double pole_tol) {
  NumPoint out;
  out.t = p.t;
  auto v = args(p);
  for (std::size_t i = 0; i < 4; ++i) {
    CompiledRatFun c(m.coord[i], alpha);
    double d = c.denominator(v);
    if (std::abs(d) <= pole_tol) throw PoleAtPoint(m.label + ": denominator vanishes at the point");
    out.phase[i] = c.numerator(v) / d;
  }
  return out;
}

RoundtripResult backlund_roundtrip_numeric(int i, const PhasePoint& init, const ParameterVector& alpha, double t1,
                                           const IntegratorConfig& cfg, double pole_margin) {
  BirationalMap s = generator(i);
  NumPoint start = to_double(init);
  CompiledRatFun f(RatFun(invariant_divisor(i).f), alpha);
  bool trivial = alpha[static_cast<std::size_t>(i)] == 0;
  if (!trivial && std::abs(f(args(start))) < pole_margin)
    throw PoleAtPoint("f" + std::to_string(i) + " is near 0 at the initial point");
  Trajectory ref = integrate(alpha, start, t1, cfg);

  RoundtripResult out;
  out.min_divisor = INFINITY;
  for (std::size_t k = 0; k < ref.t.size(); ++k) {
    const auto& u = ref.y[k];
    out.min_divisor = std::min(out.min_divisor, std::abs(f({u[0], u[1], u[2], u[3], ref.t[k]})));
  }
  if (!trivial && out.min_divisor < pole_margin)
    throw PoleAtPoint("f" + std::to_string(i) + " approaches 0 along the reference trajectory");

  NumPoint end{{ref.back()[0], ref.back()[1], ref.back()[2], ref.back()[3]}, t1};
  NumPoint mapped = apply_numeric(s, alpha, end);

  ExactState image = apply_point(s, ExactState{init, alpha});
  Trajectory second = integrate(image.alpha, to_double(image.point), t1, cfg);
  for (std::size_t k = 0; k < 4; ++k)
    out.deviation = std::max(out.deviation, std::abs(mapped.phase[k] - second.back()[k]));
  return out;
}

AdmissibleSample random_admissible(std::uint64_t seed, double t0) {
  std::mt19937_64 rng(seed);
  AdmissibleSample s;
  for (auto& c : s.init.phase) c = small_rational(rng, 20, 100);
  s.init.t = BigRational(t0);
  for (std::size_t k = 1; k < 5; ++k) s.alpha[k] = small_rational(rng, 10, 20);
  s.alpha[0] = 1 - 2 * s.alpha[1] - 3 * s.alpha[2] - 2 * s.alpha[3] - s.alpha[4];
  return s;
}

std::vector<RoundtripSweep> backlund_roundtrip_sweep(int i, std::size_t samples, std::uint64_t seed) {
  std::vector<RoundtripSweep> out;
  for (std::uint64_t k = 0; out.size() < samples; ++k) {
    if (k > 1000 * samples) throw std::runtime_error("no admissible samples found");
    RoundtripSweep r;
    r.sample = random_admissible(seed * 1'000'003 + k, 0.3);
    if (r.sample.alpha[static_cast<std::size_t>(i)] == 0) continue;
    try {
      for (std::size_t n = 0; n < kRtolSweep.size(); ++n) {
        IntegratorConfig cfg;
        cfg.rtol = kRtolSweep[n];
        cfg.atol = kRtolSweep[n] * 1e-2;
        cfg.blowup = 10;
        r.deviation[n] = backlund_roundtrip_numeric(i, r.sample.init, r.sample.alpha, 0.6, cfg).deviation;
      }
    } catch (const Error&) {
      continue;
    }
    out.push_back(r);
  }
  return out;
}

ParameterVector random_alpha_with_zero(int i, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static constexpr std::array<long, 5> weight = {1, 2, 3, 2, 1};
  std::size_t zero = static_cast<std::size_t>(i), solve = i == 0 ? 4 : 0;
  ParameterVector a;
  BigRational rest = 1;
  for (std::size_t k = 0; k < 5; ++k) {
    if (k == zero || k == solve) continue;
    a[k] = small_rational(rng, 10, 20);
    rest -= weight[k] * a[k];
  }
  a[zero] = 0;
  a[solve] = rest;
  return a;
}

double divisor_drift_numeric(int i, const ParameterVector& alpha, const NumPoint& init, double t1,
                             const IntegratorConfig& cfg) {
  Trajectory tr = integrate(alpha, init, t1, cfg);
  CompiledRatFun f(RatFun(invariant_divisor(i).f), alpha);
  double worst = 0;
  for (std::size_t k = 0; k < tr.t.size(); ++k) {
    const auto& u = tr.y[k];
    worst = std::max(worst, std::abs(f({u[0], u[1], u[2], u[3], tr.t[k]})));
  }
  return worst;
}

std::vector<DivisorDrift> divisor_drift_samples(int i, std::size_t samples, const IntegratorConfig& cfg,
                                                std::uint64_t seed) {
  InvariantDivisor d = invariant_divisor(i);
  IntegratorConfig bounded = cfg;
  bounded.blowup = 10;
  std::vector<DivisorDrift> out;
  for (std::uint64_t k = 0; out.size() < samples; ++k) {
    if (k > 1000 * samples) throw std::runtime_error("no admissible samples found");
    AdmissibleSample s = random_admissible(seed * 1'000'003 + k, 0.3);
    DivisorDrift r{s.init, random_alpha_with_zero(i, seed * 1'000'003 + k), 0};
    r.init.t = BigRational(3, 10);
    r.init.phase[index(d.solved_gen)] = d.solved_value.eval(make_assignment(r.init, r.alpha));
    try {
      r.drift = divisor_drift_numeric(i, r.alpha, to_double(r.init), 0.6, bounded);
    } catch (const Error&) {
      continue;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<BigRational>> integer_kernel(std::vector<std::vector<BigInteger>> rows, std::size_t cols) {
  Echelon e(cols);
  for (auto& r : rows) e.add(std::move(r));
  return e.kernel();
}

FirstIntegralResult first_integral_search(unsigned deg_phase, unsigned deg_t, std::size_t n_alpha,
                                          std::uint64_t seed) {
  // Ansatz basis: phase monomials of degree <= deg_phase times t^k.
  std::vector<SparsePoly> basis;
  std::vector<Monomial> phase_monos;
  for (unsigned a = 0; a <= deg_phase; ++a)
    for (unsigned b = 0; a + b <= deg_phase; ++b)
      for (unsigned c = 0; a + b + c <= deg_phase; ++c)
        for (unsigned d = 0; a + b + c + d <= deg_phase; ++d) {
          Monomial m;
          m.set(Gen::x, a);
          m.set(Gen::y, b);
          m.set(Gen::z, c);
          m.set(Gen::w, d);
          phase_monos.push_back(m);
        }
  FirstIntegralResult res;
  res.unknowns = phase_monos.size() * (deg_t + 1);
  if (res.unknowns >= 10'000)
    throw AnsatzTooLarge("ansatz has " + std::to_string(res.unknowns) + " unknowns (limit 10000)");
  for (const auto& m : phase_monos)
    for (unsigned k = 0; k <= deg_t; ++k) {
      Monomial mk = m;
      mk.set(Gen::t, k);
      basis.push_back(SparsePoly::monomial(mk));
    }
  const std::size_t cols = basis.size();

  ExactSampler rng(seed);
  Echelon all(cols);
  SparsePoly tt = time_factor();
  for (std::size_t s = 0; s < n_alpha; ++s) {
    ParameterVector alpha = rng.alpha_on_relation();
    res.alphas.push_back(alpha);
    SparsePoly P = coupled_polynomial().specialize(params_only(alpha));
    SparsePoly px = P.derivative(Gen::x), py = P.derivative(Gen::y), pz = P.derivative(Gen::z),
               pw = P.derivative(Gen::w);
    // t(1-t) dF/dt along the flow, column by column.
    std::map<Monomial, std::map<std::size_t, BigRational>> eqs;
    for (std::size_t j = 0; j < cols; ++j) {
      const SparsePoly& b = basis[j];
      SparsePoly l = tt * b.derivative(Gen::t) + py * b.derivative(Gen::x) - px * b.derivative(Gen::y) +
                     pw * b.derivative(Gen::z) - pz * b.derivative(Gen::w);
      for (const auto& [m, c] : l.terms()) eqs[m][j] = c;
    }
    Echelon one(cols);
    for (const auto& [m, entries] : eqs) one.add(integer_row(entries, cols));
    std::vector<SparsePoly> ker;
    for (const auto& v : one.kernel()) ker.push_back(kernel_poly(v, basis));
    res.per_alpha.push_back(std::move(ker));
    for (const auto& r : one.rows()) all.add(r);
  }
  for (const auto& v : all.kernel()) res.basis.push_back(kernel_poly(v, basis));
  return res;
}

VerificationReport hamiltonian_not_conserved_check(const IntegratorConfig& cfg) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "integrals.hamiltonian_not_conserved";
  Hamiltonian h = build_coupled_H();
  bool explicit_t = !h.value.derivative(Gen::t).is_zero();
  bool self_bracket = poisson_bracket(h.value, h.value).is_zero();
  rep.parts.push_back(explicit_t && self_bracket ? Status::pass : Status::fail);

  double drift = 0;
  bool integrated = false;
  for (std::uint64_t seed = 1; seed < 20 && !integrated; ++seed) {
    AdmissibleSample s = random_admissible(seed, 0.3);
    try {
      NumericSystem sys(s.alpha);
      Trajectory tr = integrate(s.alpha, to_double(s.init), 0.6, cfg);
      const auto& a = tr.y.front();
      const auto& b = tr.back();
      drift = std::abs(sys.hamiltonian(0.6, {b[0], b[1], b[2], b[3]}) - sys.hamiltonian(0.3, {a[0], a[1], a[2], a[3]}));
      integrated = true;
    } catch (const Error&) {
    }
  }
  rep.parts.push_back(integrated && drift > 1e3 * cfg.rtol ? Status::pass : Status::fail);
  rep.status = combine(rep.parts);
  std::ostringstream os;
  os << "dH/dt explicit " << (explicit_t ? "nonzero" : "zero") << ", {H,H} " << (self_bracket ? "= 0" : "!= 0")
     << "; numeric drift " << drift << " over [0.3, 0.6]";
  rep.detail = os.str();
  rep.method = Method::numeric;
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

double observed_order() {
  OdeRhs f = [](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = y[0]; };
  std::vector<double> err;
  for (double h : {1.0 / 4, 1.0 / 8, 1.0 / 16}) {
    IntegratorConfig cfg;
    cfg.fixed_step = h;
    Trajectory tr = integrate_ode(f, 0, 1, {1.0}, cfg);
    err.push_back(std::abs(tr.back()[0] - std::exp(1.0)));
  }
  double order = INFINITY;
  for (std::size_t k = 0; k + 1 < err.size(); ++k) order = std::min(order, std::log2(err[k] / err[k + 1]));
  return order;
}

void write_csv(std::ostream& os, const Trajectory& tr) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::size_t n = tr.y.empty() ? 0 : tr.y.front().size();
  os << "t";
  for (std::size_t k = 0; k < n; ++k) os << "," << (n == 4 ? names[k] : "y" + std::to_string(k));
  os << "\n";
  os.precision(17);
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    os << tr.t[i];
    for (double v : tr.y[i]) os << "," << v;
    os << "\n";
  }
}

void write_svg(std::ostream& os, const Trajectory& tr) {
  static const char* names[] = {"x", "y", "z", "w"};
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  const double W = 800, H = 480, pad = 50;
  double t0 = tr.t.front(), t1 = tr.t.back();
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& y : tr.y)
    for (double v : y) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (hi - lo < 1e-12) {
    lo -= 1;
    hi += 1;
  }
  if (t1 == t0) t1 = t0 + 1;
  auto X = [&](double t) { return pad + (t - t0) / (t1 - t0) * (W - 2 * pad); };
  auto Y = [&](double v) { return H - pad - (v - lo) / (hi - lo) * (H - 2 * pad); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << pad << "\" y=\"" << H - pad + 20 << "\" font-size=\"12\">t=" << t0 << "</text>\n";
  os << "<text x=\"" << W - pad - 60 << "\" y=\"" << H - pad + 20 << "\" font-size=\"12\">t=" << t1 << "</text>\n";
  os << "<text x=\"5\" y=\"" << pad << "\" font-size=\"12\">" << hi << "</text>\n";
  os << "<text x=\"5\" y=\"" << H - pad << "\" font-size=\"12\">" << lo << "</text>\n";
  std::size_t n = tr.y.empty() ? 0 : std::min<std::size_t>(tr.y.front().size(), 4);
  for (std::size_t k = 0; k < n; ++k) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[k] << "\" points=\"";
    for (std::size_t i = 0; i < tr.t.size(); ++i) os << X(tr.t[i]) << "," << Y(tr.y[i][k]) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << W - pad + 5 << "\" y=\"" << pad + 15 * k << "\" font-size=\"12\" fill=\"" << colors[k]
       << "\">" << names[k] << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace cpvi
