#include "cpvi/exactalg/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cpvi/errors.hpp"

namespace cpvi {

namespace {

thread_local std::optional<std::size_t> t_term_limit;

using Terms = std::vector<SparsePoly::Term>;

// Both inputs sorted by decreasing monomial; b is scaled by `sign`.
Terms merge(const Terms& a, const Terms& b, int sign) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first > j->first) {
      out.push_back(*i++);
    } else if (j->first > i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : BigRational(-j->second));
      ++j;
    } else {
      BigRational c = sign > 0 ? BigRational(i->second + j->second) : BigRational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.emplace_back(j->first, sign > 0 ? j->second : BigRational(-j->second));
  return out;
}

Terms merge_all(std::vector<Terms> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<Terms> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2) next.push_back(merge(parts[k], parts[k + 1], 1));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

// Every term of `p` times (m, c); order is preserved by monomial multiplication.
Terms scaled_shift(const Terms& p, const Monomial& m, const BigRational& c) {
  Terms out;
  out.reserve(p.size());
  for (const auto& [mon, coef] : p) out.emplace_back(mon * m, coef * c);
  return out;
}

}  // namespace

TermLimit::TermLimit(std::size_t max_terms) : previous_(t_term_limit) { t_term_limit = max_terms; }

TermLimit::~TermLimit() { t_term_limit = previous_; }

std::optional<std::size_t> TermLimit::current() { return t_term_limit; }

void TermLimit::check(std::size_t terms) {
  if (t_term_limit && terms > *t_term_limit)
    throw ExpressionTooLarge("polynomial with " + std::to_string(terms) + " terms exceeds the ceiling of " +
                             std::to_string(*t_term_limit));
}

SparsePoly::SparsePoly(const BigRational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

SparsePoly::SparsePoly(long c) : SparsePoly(BigRational(c)) {}

SparsePoly SparsePoly::gen(Gen g) { return monomial(Monomial::of(g)); }

SparsePoly SparsePoly::monomial(const Monomial& m, BigRational c) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  Terms out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  TermLimit::check(out.size());
  return SparsePoly(std::move(out), 0);
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

BigRational SparsePoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_.empty() ? BigRational(0) : terms_[0].second;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  terms_ = merge(terms_, o.terms_, 1);
  TermLimit::check(terms_.size());
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  TermLimit::check(terms_.size());
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const SparsePoly& small = a.size() <= b.size() ? a : b;
  const SparsePoly& big = a.size() <= b.size() ? b : a;
  std::vector<Terms> parts;
  parts.reserve(small.size());
  for (const auto& [m, c] : small.terms_) parts.push_back(scaled_shift(big.terms_, m, c));
  SparsePoly r(merge_all(std::move(parts)), 0);
  TermLimit::check(r.size());
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= c;
  }
  return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result(1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::derivative(Gen g) const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m[g];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(g, e - 1);
    out.emplace_back(dm, c * e);
  }
  // Lowering the same exponent in every surviving term keeps the order.
  return SparsePoly(std::move(out), 0);
}

SparsePoly SparsePoly::shifted(const Monomial& m) const {
  return SparsePoly(scaled_shift(terms_, m, BigRational(1)), 0);
}

SparsePoly SparsePoly::divided_by_monomial(const Monomial& m) const {
  Terms out;
  out.reserve(terms_.size());
  for (const auto& [mon, c] : terms_) {
    if (!m.divides(mon)) throw std::logic_error("monomial does not divide polynomial");
    out.emplace_back(m.quotient_of(mon), c);
  }
  // Dividing every term by the same monomial preserves lexicographic order.
  return SparsePoly(std::move(out), 0);
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& d) const {
  if (d.is_zero()) throw DenominatorVanishes("division by the zero polynomial");
  if (is_zero()) return SparsePoly{};
  if (d.is_constant()) return *this * BigRational(1 / d.constant_value());
  // Necessary conditions that are cheap to test: leading and trailing
  // monomials multiply under a monomial order, and degrees add.
  if (!d.terms_.front().first.divides(terms_.front().first)) return std::nullopt;
  if (!d.terms_.back().first.divides(terms_.back().first)) return std::nullopt;
  for (Gen g : kAllGens)
    if (d.degree(g) > degree(g)) return std::nullopt;

  const auto& [lead_m, lead_c] = d.terms_.front();
  Terms quotient;
  Terms rem = terms_;
  while (!rem.empty()) {
    const auto& [m, c] = rem.front();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial qm = lead_m.quotient_of(m);
    BigRational qc = c / lead_c;
    rem = merge(rem, scaled_shift(d.terms_, qm, qc), -1);
    quotient.emplace_back(qm, std::move(qc));
    TermLimit::check(quotient.size());
  }
  return SparsePoly(std::move(quotient), 0);
}

Monomial SparsePoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().first;
  for (const auto& term : terms_) g = g.gcd(term.first);
  return g;
}

BigRational SparsePoly::rational_content() const {
  if (terms_.empty()) return 1;
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& term : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.second.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.second.get_den_mpz_t());
  }
  BigRational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

bool SparsePoly::depends_on(Gen g) const {
  return std::any_of(terms_.begin(), terms_.end(), [g](const Term& term) { return term.first[g] > 0; });
}

unsigned SparsePoly::degree(Gen g) const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max<unsigned>(d, term.first[g]);
  return d;
}

unsigned SparsePoly::total_degree(GenSet vars) const {
  if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, term.first.degree_in(vars));
  return d;
}

BigRational SparsePoly::eval(const Assignment& point) const {
  std::array<std::vector<BigRational>, kNumGens> powers;
  BigRational acc = 0;
  for (const auto& [m, c] : terms_) {
    BigRational v = c;
    for (Gen g : kAllGens) {
      unsigned e = m[g];
      if (e == 0) continue;
      if (!point.bound(g)) throw std::invalid_argument("generator " + std::string(name(g)) + " is unbound");
      auto& table = powers[index(g)];
      if (table.empty()) table.push_back(1);
      while (table.size() <= e) table.push_back(table.back() * *point[g]);
      v *= table[e];
    }
    acc += v;
  }
  return acc;
}

SparsePoly SparsePoly::specialize(const Assignment& point) const {
  std::array<std::vector<BigRational>, kNumGens> powers;
  Terms out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    BigRational v = c;
    Monomial rest = m;
    for (Gen g : kAllGens) {
      unsigned e = m[g];
      if (e == 0 || !point.bound(g)) continue;
      auto& table = powers[index(g)];
      if (table.empty()) table.push_back(1);
      while (table.size() <= e) table.push_back(table.back() * *point[g]);
      v *= table[e];
      rest.set(g, 0);
    }
    out.emplace_back(rest, std::move(v));
  }
  return from_terms(std::move(out));
}

SparsePoly sum(std::vector<SparsePoly> parts) {
  std::vector<Terms> raw;
  raw.reserve(parts.size());
  for (auto& p : parts) raw.push_back(std::move(p.terms_));
  SparsePoly r(merge_all(std::move(raw)), 0);
  TermLimit::check(r.size());
  return r;
}

unsigned total_degree(const SparsePoly& p, GenSet vars) { return p.total_degree(vars); }

}  // namespace cpvi
