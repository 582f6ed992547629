#include "cpvi/exactalg/ratfun.hpp"

#include <map>

#include "cpvi/errors.hpp"

namespace cpvi {

RatFun::RatFun(SparsePoly num) : num_(std::move(num)), den_(1) {}

RatFun::RatFun(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
  if (den_.is_zero()) throw DenominatorVanishes("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = SparsePoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_value() != 1) {
      num_ *= BigRational(1 / den_.constant_value());
      den_ = SparsePoly(1);
    }
    return;
  }
  Monomial common = num_.monomial_content().gcd(den_.monomial_content());
  if (!common.is_one()) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  if (den_.is_constant()) {
    num_ *= BigRational(1 / den_.constant_value());
    den_ = SparsePoly(1);
    return;
  }
  BigRational c = den_.rational_content();
  if (den_.leading().second < 0) c = -c;
  if (c != 1) {
    BigRational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
  if (num_.size() == den_.size()) {
    if (num_ == den_) {
      num_ = SparsePoly(1);
      den_ = SparsePoly(1);
    } else if (num_ == -den_) {
      num_ = SparsePoly(-1);
      den_ = SparsePoly(1);
    }
  }
}

std::optional<SparsePoly> RatFun::as_polynomial() const {
  if (den_.is_constant()) return num_ * BigRational(1 / den_.constant_value());
  return num_.divide_exact(den_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFun(num_ + o.num_, den_);
  } else if (den_.is_constant()) {
    *this = RatFun(num_ * o.den_ + o.num_, o.den_);
  } else if (o.den_.is_constant()) {
    *this = RatFun(num_ + o.num_ * den_, den_);
  } else if (auto q = o.den_.divide_exact(den_)) {
    *this = RatFun(num_ * *q + o.num_, o.den_);
  } else if (auto r = den_.divide_exact(o.den_)) {
    *this = RatFun(num_ + o.num_ * *r, den_);
  } else {
    *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_ == o.num_ && o.den_ == num_) return *this = RatFun(1);
  if (den_ == o.num_) return *this = RatFun(num_, o.den_);
  if (o.den_ == num_) return *this = RatFun(o.num_, den_);
  *this = RatFun(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw DenominatorVanishes("division by the zero rational function");
  return *this *= RatFun(o.den_, o.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::pow(unsigned e) const { return RatFun(num_.pow(e), den_.pow(e)); }

RatFun RatFun::derivative(Gen g) const {
  if (den_.is_constant()) return RatFun(num_.derivative(g));
  SparsePoly dd = den_.derivative(g);
  if (dd.is_zero()) return RatFun(num_.derivative(g), den_);
  return RatFun(num_.derivative(g) * den_ - num_ * dd, den_ * den_);
}

BigRational RatFun::eval(const Assignment& point) const {
  BigRational d = den_.eval(point);
  if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

namespace {

// Bound generators whose bindings share a denominator polynomial are grouped
// so that the common denominator is a product of powers of distinct
// polynomials rather than of every binding separately.
struct Plan {
  struct Binding {
    Gen gen;
    SparsePoly num;
    int group;  // -1 when the binding is a polynomial
  };
  std::vector<Binding> bindings;
  std::vector<SparsePoly> group_dens;
};

Plan make_plan(const Substitution& s) {
  Plan plan;
  for (Gen g : kAllGens) {
    if (!s.bound(g)) continue;
    const RatFun& v = *s[g];
    int group = -1;
    if (!v.den().is_constant()) {
      for (std::size_t k = 0; k < plan.group_dens.size(); ++k)
        if (plan.group_dens[k] == v.den()) group = static_cast<int>(k);
      if (group < 0) {
        group = static_cast<int>(plan.group_dens.size());
        plan.group_dens.push_back(v.den());
      }
    }
    // A constant denominator is always one after normalization.
    plan.bindings.push_back({g, v.num(), group});
  }
  return plan;
}

class PowerCache {
 public:
  explicit PowerCache(const SparsePoly& base) : powers_{SparsePoly(1), base} {}
  const SparsePoly& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<SparsePoly> powers_;
};

struct Composed {
  SparsePoly num;
  std::vector<unsigned> group_exps;  // denominator = prod group_dens[k]^group_exps[k]
};

Composed compose(const SparsePoly& p, const Plan& plan, std::vector<PowerCache>& num_pows,
                 std::vector<PowerCache>& den_pows) {
  const std::size_t groups = plan.group_dens.size();
  Composed out{SparsePoly{}, std::vector<unsigned>(groups, 0)};
  if (p.is_zero()) return out;

  // Collect terms by their exponents in the bound generators; the free part
  // becomes a polynomial coefficient multiplied in once per key.
  std::map<std::vector<unsigned>, std::vector<SparsePoly::Term>> by_key;
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> key;
    key.reserve(plan.bindings.size());
    Monomial rest = m;
    for (const auto& b : plan.bindings) {
      key.push_back(m[b.gen]);
      rest.set(b.gen, 0);
    }
    std::vector<unsigned> sums(groups, 0);
    for (std::size_t i = 0; i < plan.bindings.size(); ++i)
      if (plan.bindings[i].group >= 0) sums[static_cast<std::size_t>(plan.bindings[i].group)] += key[i];
    for (std::size_t k = 0; k < groups; ++k) out.group_exps[k] = std::max(out.group_exps[k], sums[k]);
    by_key[std::move(key)].emplace_back(rest, c);
  }

  std::vector<SparsePoly> parts;
  parts.reserve(by_key.size());
  for (auto& [key, terms] : by_key) {
    SparsePoly acc = SparsePoly::from_terms(std::move(terms));
    std::vector<unsigned> sums(groups, 0);
    for (std::size_t i = 0; i < plan.bindings.size(); ++i) {
      if (key[i] == 0) continue;
      acc *= num_pows[i].get(key[i]);
      if (plan.bindings[i].group >= 0) sums[static_cast<std::size_t>(plan.bindings[i].group)] += key[i];
    }
    for (std::size_t k = 0; k < groups; ++k)
      if (out.group_exps[k] > sums[k]) acc *= den_pows[k].get(out.group_exps[k] - sums[k]);
    parts.push_back(std::move(acc));
  }
  out.num = sum(std::move(parts));
  return out;
}

bool touches(const SparsePoly& p, const Substitution& s) {
  for (Gen g : kAllGens)
    if (s.bound(g) && p.depends_on(g)) return true;
  return false;
}

}  // namespace

RatFun substitute(const SparsePoly& p, const Substitution& s) {
  return substitute(RatFun(p), s);
}

RatFun substitute(const RatFun& f, const Substitution& s) {
  if (!touches(f.num(), s) && !touches(f.den(), s)) return f;
  Plan plan = make_plan(s);
  std::vector<PowerCache> num_pows;
  for (const auto& b : plan.bindings) num_pows.emplace_back(b.num);
  std::vector<PowerCache> den_pows;
  for (const auto& d : plan.group_dens) den_pows.emplace_back(d);

  Composed top = compose(f.num(), plan, num_pows, den_pows);
  Composed bottom = compose(f.den(), plan, num_pows, den_pows);
  if (bottom.num.is_zero()) throw DenominatorVanishes("substitution makes the denominator vanish");

  // f = (top.num / D^top) / (bottom.num / D^bottom)
  SparsePoly num = std::move(top.num);
  SparsePoly den = std::move(bottom.num);
  for (std::size_t k = 0; k < plan.group_dens.size(); ++k) {
    unsigned a = top.group_exps[k];
    unsigned b = bottom.group_exps[k];
    if (b > a) num *= den_pows[k].get(b - a);
    if (a > b) den *= den_pows[k].get(a - b);
  }
  return RatFun(std::move(num), std::move(den));
}

SparsePoly alpha0_from_relation() {
  return SparsePoly(1) - SparsePoly(2) * SparsePoly::gen(Gen::a1) - SparsePoly(3) * SparsePoly::gen(Gen::a2) -
         SparsePoly(2) * SparsePoly::gen(Gen::a3) - SparsePoly::gen(Gen::a4);
}

RatFun reduce_mod_relation(const RatFun& f) {
  Substitution s;
  s.bind(Gen::a0, RatFun(alpha0_from_relation()));
  return substitute(f, s);
}

}  // namespace cpvi
