#include "cpvi/exactalg/monomial.hpp"

#include <algorithm>
#include <limits>

#include "cpvi/errors.hpp"
#include "cpvi/exactalg/rational.hpp"

namespace cpvi {

namespace {

constexpr std::array<std::string_view, kNumGens> kNames = {"x",  "y",  "z",  "w",  "t",
                                                           "a0", "a1", "a2", "a3", "a4"};

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

}  // namespace

std::string_view name(Gen g) { return kNames[index(g)]; }

std::optional<Gen> gen_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kNumGens; ++i)
    if (kNames[i] == s) return static_cast<Gen>(i);
  return std::nullopt;
}

Monomial Monomial::of(Gen g, unsigned e) {
  Monomial m;
  m.set(g, e);
  return m;
}

void Monomial::set(Gen g, unsigned e) {
  if (e > kMaxExponent) throw ExpressionTooLarge("exponent overflow");
  exps_[index(g)] = static_cast<Exponent>(e);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

unsigned Monomial::degree_in(GenSet vars) const {
  unsigned d = 0;
  for (Gen g : kAllGens)
    if (vars.contains(g)) d += exps_[index(g)];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumGens; ++i) {
    unsigned e = unsigned{exps_[i]} + o.exps_[i];
    if (e > kMaxExponent) throw ExpressionTooLarge("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kNumGens; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumGens; ++i) r.exps_[i] = static_cast<Exponent>(o.exps_[i] - exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumGens; ++i) r.exps_[i] = std::min(exps_[i], o.exps_[i]);
  return r;
}

BigRational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw ParseError("not a rational: '" + std::string(text) + "'");
  BigInteger n(std::string(num), 10);
  BigInteger d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  BigRational q(n, d);
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

}  // namespace cpvi
