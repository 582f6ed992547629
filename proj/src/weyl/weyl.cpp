#include "cpvi/weyl/weyl.hpp"

#include <sstream>
#include <stdexcept>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/text.hpp"
#include "cpvi/sampling.hpp"

namespace cpvi {

namespace {

void check_index(int i) {
  if (i < 0 || i > 4) throw std::out_of_range("generator index must be in 0..4");
}

RatFun a(int k) { return RatFun::gen(param_gen(static_cast<std::size_t>(k))); }
RatFun v(Gen g) { return RatFun::gen(g); }

// Row r of the parameter action as coefficients of alpha0..alpha4.
using Row = std::array<long, 5>;

ParamAction action(const std::array<Row, 5>& rows) {
  ParamAction p;
  for (std::size_t r = 0; r < 5; ++r) p.matrix[r] = rows[r];
  return p;
}

std::string part_names(const std::vector<Status>& parts) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << ", ";
    os << (k < 4 ? names[k] : "?") << ": " << to_string(parts[k]);
  }
  return os.str();
}

Status classify(const RatFun& diff) {
  if (diff.is_zero()) return Status::pass;
  if (reduce_mod_relation(diff).is_zero()) return Status::pass_mod_relation;
  return Status::fail;
}

// lhs - rhs of the Backlund identity for every coordinate, evaluated at one
// exact point. Throws PoleAtPoint.
std::array<BigRational, 4> backlund_defect_at(const BirationalMap& s, const VectorField& field,
                                              const std::array<std::array<RatFun, 4>, 4>& jac,
                                              const std::array<RatFun, 4>& dt, const ExactState& st,
                                              bool with_t) {
  Assignment at = make_assignment(st.point, st.alpha);
  std::array<BigRational, 4> f;
  for (std::size_t j = 0; j < 4; ++j) f[j] = field.components[j].eval(at);
  ExactState image = apply_point(s, st);
  Assignment at_image = make_assignment(image.point, image.alpha);
  std::array<BigRational, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    BigRational lhs = with_t ? dt[k].eval(at) : BigRational(0);
    for (std::size_t j = 0; j < 4; ++j)
      if (!jac[k][j].is_zero()) lhs += jac[k][j].eval(at) * f[j];
    out[k] = lhs - field.components[k].eval(at_image);
  }
  return out;
}

}  // namespace

BirationalMap generator(int i) {
  check_index(i);
  BirationalMap m = BirationalMap::identity();
  m.label = "s" + std::to_string(i);
  RatFun x = v(Gen::x), y = v(Gen::y), z = v(Gen::z), w = v(Gen::w), t = v(Gen::t);
  switch (i) {
    case 0:
      m.coord[0] = x + a(0) / y;
      m.param = action({Row{-1, 0, 0, 0, 0}, Row{1, 1, 0, 0, 0}, Row{0, 0, 1, 0, 0}, Row{0, 0, 0, 1, 0},
                        Row{0, 0, 0, 0, 1}});
      break;
    case 1:
      m.coord[1] = y - a(1) / x;
      m.param = action({Row{1, 1, 0, 0, 0}, Row{0, -1, 0, 0, 0}, Row{0, 1, 1, 0, 0}, Row{0, 0, 0, 1, 0},
                        Row{0, 0, 0, 0, 1}});
      break;
    case 2: {
      RatFun f2 = y + w * w - t;
      m.coord[0] = x + a(2) / f2;
      m.coord[2] = z + RatFun(2) * a(2) * w / f2;
      m.param = action({Row{1, 0, 0, 0, 0}, Row{0, 1, 1, 0, 0}, Row{0, 0, -1, 0, 0}, Row{0, 0, 2, 1, 0},
                        Row{0, 0, 0, 0, 1}});
      break;
    }
    case 3:
      m.coord[3] = w - a(3) / z;
      m.param = action({Row{1, 0, 0, 0, 0}, Row{0, 1, 0, 0, 0}, Row{0, 0, 1, 1, 0}, Row{0, 0, 0, -1, 0},
                        Row{0, 0, 0, 1, 1}});
      break;
    case 4:
      m.coord[2] = z + a(4) / (w - RatFun(1));
      m.param = action({Row{1, 0, 0, 0, 0}, Row{0, 1, 0, 0, 0}, Row{0, 0, 1, 0, 0}, Row{0, 0, 0, 1, 1},
                        Row{0, 0, 0, 0, -1}});
      break;
  }
  return m;
}

const CoxeterMatrix& coxeter_matrix() {
  static const CoxeterMatrix m = [] {
    CoxeterMatrix c{};
    for (auto& row : c) row.fill(2);
    for (std::size_t i = 0; i < 5; ++i) c[i][i] = 1;
    auto edge = [&](std::size_t i, std::size_t j, int n) { c[i][j] = c[j][i] = n; };
    edge(0, 1, 3);
    edge(1, 2, 3);
    edge(2, 3, 4);
    edge(3, 4, 3);
    return c;
  }();
  return m;
}

InvariantDivisor invariant_divisor(int i) {
  check_index(i);
  SparsePoly x = SparsePoly::gen(Gen::x), y = SparsePoly::gen(Gen::y), z = SparsePoly::gen(Gen::z),
             w = SparsePoly::gen(Gen::w), t = SparsePoly::gen(Gen::t);
  switch (i) {
    case 0: return {0, y, Gen::y, SparsePoly()};
    case 1: return {1, x, Gen::x, SparsePoly()};
    case 2: return {2, y + w * w - t, Gen::y, t - w * w};
    case 3: return {3, z, Gen::z, SparsePoly()};
    default: return {4, w - SparsePoly(1), Gen::w, SparsePoly(1)};
  }
}

VerificationReport verify_backlund(int i, const BacklundOptions& opts) {
  check_index(i);
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "backlund.s" + std::to_string(i) + (opts.include_time_derivative ? "" : ".no_dt");
  BirationalMap s = generator(i);
  VectorField field = vector_field(build_coupled_H());

  std::array<std::array<RatFun, 4>, 4> jac;
  std::array<RatFun, 4> dt;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) jac[k][j] = s.coord[k].derivative(kPhaseGens[j]);
    dt[k] = s.coord[k].derivative(Gen::t);
  }

  if (!opts.force_sampled) {
    try {
      std::optional<TermLimit> guard;
      if (opts.term_limit) guard.emplace(opts.term_limit);
      Substitution sub = s.as_substitution();
      for (std::size_t k = 0; k < 4; ++k) {
        RatFun lhs = opts.include_time_derivative ? dt[k] : RatFun();
        for (std::size_t j = 0; j < 4; ++j)
          if (!jac[k][j].is_zero()) lhs += jac[k][j] * field.components[j];
        RatFun rhs = substitute(field.components[k], sub);
        rep.parts.push_back(classify(lhs - rhs));
      }
      rep.method = Method::symbolic;
      rep.status = combine(rep.parts);
      rep.detail = part_names(rep.parts);
      rep.elapsed_ms = sw.elapsed_ms();
      return rep;
    } catch (const ExpressionTooLarge&) {
      rep.parts.clear();
      rep.detail = "symbolic attempt exceeded the term limit; ";
    }
  }

  // Exact evaluation at random points: first with unconstrained parameters,
  // then on the normalization hyperplane.
  rep.method = Method::sampled;
  ExactSampler rng(opts.seed);
  std::array<Status, 4> parts{Status::pass, Status::pass, Status::pass, Status::pass};
  for (int round = 0; round < 2; ++round) {
    std::array<bool, 4> ok{true, true, true, true};
    std::size_t done = 0;
    while (done < opts.sample_points) {
      ExactState st{rng.point(), round == 0 ? rng.alpha_free() : rng.alpha_on_relation()};
      try {
        auto d = backlund_defect_at(s, field, jac, dt, st, opts.include_time_derivative);
        for (std::size_t k = 0; k < 4; ++k) ok[k] = ok[k] && d[k] == 0;
        ++done;
      } catch (const PoleAtPoint&) {
      }
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (round == 0 && !ok[k]) parts[k] = Status::fail;
      if (round == 1 && parts[k] == Status::fail && ok[k]) parts[k] = Status::pass_mod_relation;
    }
  }
  rep.parts.assign(parts.begin(), parts.end());
  rep.status = combine(rep.parts);
  rep.detail += part_names(rep.parts) + "; " + std::to_string(opts.sample_points) + " points per round";
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_involution(int i) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "involution.s" + std::to_string(i);
  BirationalMap s = generator(i);
  BirationalMap sq = compose(s, s);
  bool params = sq.param.is_identity();
  for (std::size_t k = 0; k < 4; ++k)
    rep.parts.push_back(sq.coord[k] == RatFun::gen(kPhaseGens[k]) ? Status::pass : Status::fail);
  rep.status = params ? combine(rep.parts) : Status::fail;
  rep.detail = part_names(rep.parts) + (params ? "; parameters: identity" : "; parameters: not identity");
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_coxeter(int i, int j, const CoxeterOptions& opts) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("verify_coxeter needs distinct generators");
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "coxeter.s" + std::to_string(i) + "s" + std::to_string(j);
  rep.method = Method::sampled;
  const int m = coxeter_matrix()[i][j];
  BirationalMap si = generator(i), sj = generator(j);

  // Parameter part, exact.
  ParamAction step = compose(si.param, sj.param);
  ParamAction p = ParamAction::identity();
  int param_order = 0;
  for (int k = 1; k <= m; ++k) {
    p = compose(step, p);
    if (p.is_identity()) {
      param_order = k;
      break;
    }
  }

  // Phase part at random exact points. is_id[k] tracks (s_i s_j)^k.
  std::vector<bool> is_id(static_cast<std::size_t>(m) + 1, true);
  ExactSampler rng(opts.seed + static_cast<std::uint64_t>(10 * i + j));
  std::size_t done = 0, rejected = 0;
  while (done < opts.sample_points) {
    ExactState start{rng.point(), rng.alpha_on_relation()};
    try {
      std::vector<bool> same(is_id.size(), false);
      ExactState cur = start;
      for (int k = 1; k <= m; ++k) {
        cur = apply_point(si, apply_point(sj, cur));
        same[static_cast<std::size_t>(k)] = cur == start;
      }
      for (std::size_t k = 1; k < is_id.size(); ++k) is_id[k] = is_id[k] && same[k];
      ++done;
    } catch (const PoleAtPoint&) {
      ++rejected;
    }
  }
  int order = 0;
  for (int k = 1; k <= m; ++k)
    if (is_id[static_cast<std::size_t>(k)]) {
      order = k;
      break;
    }

  rep.parts = {param_order != 0 && p.is_identity() ? Status::pass : Status::fail,
               order == m ? Status::pass : Status::fail};
  rep.status = combine(rep.parts);
  std::ostringstream os;
  os << "m=" << m << "; observed order " << (order ? std::to_string(order) : ">" + std::to_string(m))
     << "; parameter order " << (param_order ? std::to_string(param_order) : ">" + std::to_string(m)) << "; "
     << done << " points, " << rejected << " resampled";
  rep.detail = os.str();
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

RatFun exp_formula_term(int i, const RatFun& g, int k) {
  if (k < 0) throw std::invalid_argument("series order must be non-negative");
  InvariantDivisor d = invariant_divisor(i);
  RatFun f(d.f);
  RatFun term = g;
  for (int n = 1; n <= k; ++n) {
    term = poisson_bracket(f, term);
    if (term.is_zero()) return term;
  }
  RatFun coef = (a(i) / f).pow(static_cast<unsigned>(k));
  BigRational fact = 1;
  for (int n = 2; n <= k; ++n) fact *= n;
  return coef * term / RatFun(fact);
}

RatFun exp_formula(int i, const RatFun& g, int order) {
  RatFun out;
  for (int k = 0; k <= order; ++k) out += exp_formula_term(i, g, k);
  return out;
}

VerificationReport verify_exp_formula(int i) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "exp_formula.s" + std::to_string(i);
  BirationalMap s = generator(i);
  for (std::size_t k = 0; k < 4; ++k) {
    RatFun g = RatFun::gen(kPhaseGens[k]);
    bool ok = exp_formula(i, g, 2) == s.coord[k] && exp_formula_term(i, g, 3).is_zero();
    rep.parts.push_back(ok ? Status::pass : Status::fail);
  }
  rep.status = combine(rep.parts);
  rep.detail = part_names(rep.parts);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_divisor_preserved(int i) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "divisor_preserved.s" + std::to_string(i);
  RatFun f(invariant_divisor(i).f);
  RatFun image = generator(i).pullback(f);
  rep.status = image == f ? Status::pass : Status::fail;
  rep.detail = "s" + std::to_string(i) + "(f" + std::to_string(i) + ") = " + to_string(image);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport invariant_divisor_check(int i) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "divisor.f" + std::to_string(i);
  InvariantDivisor d = invariant_divisor(i);
  Substitution zero_alpha;
  zero_alpha.bind(param_gen(static_cast<std::size_t>(i)), RatFun());
  Hamiltonian h = build_coupled_H();
  h.value = substitute(h.value, zero_alpha);
  RatFun df = derivative_along(RatFun(d.f), vector_field(h));
  Substitution on_divisor;
  on_divisor.bind(d.solved_gen, RatFun(d.solved_value));
  RatFun residual = substitute(df, on_divisor);

  if (residual.is_zero()) {
    rep.status = Status::pass;
    rep.detail = "D(f" + std::to_string(i) + ") vanishes on f" + std::to_string(i) + " = 0";
  } else {
    // Restricted normalization with alpha_i = 0: solve for alpha0, or for
    // alpha4 when alpha0 is the one set to zero.
    static constexpr std::array<long, 5> weight = {1, 2, 3, 2, 1};
    std::size_t solve = i == 0 ? 4 : 0;
    SparsePoly rest(1);
    for (std::size_t k = 0; k < 5; ++k)
      if (k != solve && k != static_cast<std::size_t>(i))
        rest -= SparsePoly(weight[k]) * SparsePoly::gen(param_gen(k));
    Substitution rel;
    rel.bind(param_gen(solve), RatFun(rest));
    rep.status = substitute(residual, rel).is_zero() ? Status::pass_mod_relation : Status::fail;
    rep.detail = "residual on f" + std::to_string(i) + " = 0: " + to_string(residual);
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace cpvi
