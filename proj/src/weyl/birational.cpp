#include "cpvi/weyl/birational.hpp"

#include "cpvi/sampling.hpp"

namespace cpvi {

namespace {
constexpr std::array<long, 5> kRelationWeights = {1, 2, 3, 2, 1};
}

ParamAction ParamAction::identity() {
  ParamAction a;
  for (std::size_t i = 0; i < 5; ++i) a.matrix[i][i] = 1;
  return a;
}

ParameterVector ParamAction::apply(const ParameterVector& alpha) const {
  ParameterVector out;
  for (std::size_t r = 0; r < 5; ++r) {
    BigRational v = offset[r];
    for (std::size_t c = 0; c < 5; ++c)
      if (matrix[r][c] != 0) v += matrix[r][c] * alpha[c];
    out[r] = v;
  }
  return out;
}

std::array<SparsePoly, 5> ParamAction::images() const {
  std::array<SparsePoly, 5> out;
  for (std::size_t r = 0; r < 5; ++r) {
    SparsePoly v(offset[r]);
    for (std::size_t c = 0; c < 5; ++c)
      if (matrix[r][c] != 0) v += SparsePoly(matrix[r][c]) * SparsePoly::gen(param_gen(c));
    out[r] = v;
  }
  return out;
}

bool ParamAction::preserves_relation() const {
  // w.(M a + o) = 1 for every a with w.a = 1  <=>  w^T M = w^T and w.o = 0.
  BigRational shift = 0;
  for (std::size_t r = 0; r < 5; ++r) shift += kRelationWeights[r] * offset[r];
  if (shift != 0) return false;
  for (std::size_t c = 0; c < 5; ++c) {
    long s = 0;
    for (std::size_t r = 0; r < 5; ++r) s += kRelationWeights[r] * matrix[r][c];
    if (s != kRelationWeights[c]) return false;
  }
  return true;
}

bool ParamAction::is_identity() const { return *this == identity(); }

ParamAction compose(const ParamAction& after, const ParamAction& first) {
  ParamAction out;
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      long s = 0;
      for (std::size_t k = 0; k < 5; ++k) s += after.matrix[r][k] * first.matrix[k][c];
      out.matrix[r][c] = s;
    }
    BigRational o = after.offset[r];
    for (std::size_t k = 0; k < 5; ++k) o += after.matrix[r][k] * first.offset[k];
    out.offset[r] = o;
  }
  return out;
}

BirationalMap BirationalMap::identity() {
  BirationalMap m;
  m.label = "id";
  for (std::size_t i = 0; i < 4; ++i) m.coord[i] = RatFun::gen(kPhaseGens[i]);
  return m;
}

bool BirationalMap::explicit_t() const {
  for (const auto& c : coord)
    if (c.depends_on(Gen::t)) return true;
  return false;
}

Substitution BirationalMap::as_substitution() const {
  Substitution s;
  for (std::size_t i = 0; i < 4; ++i) s.bind(kPhaseGens[i], coord[i]);
  if (!param.is_identity()) {
    auto beta = param.images();
    for (std::size_t k = 0; k < 5; ++k) s.bind(param_gen(k), RatFun(beta[k]));
  }
  return s;
}

RatFun BirationalMap::pullback(const RatFun& g) const { return substitute(g, as_substitution()); }

BirationalMap compose(const BirationalMap& after, const BirationalMap& first) {
  BirationalMap out;
  out.label = after.label + "*" + first.label;
  Substitution s = first.as_substitution();
  for (std::size_t i = 0; i < 4; ++i) out.coord[i] = substitute(after.coord[i], s);
  out.param = compose(after.param, first.param);
  return out;
}

bool is_identity(const BirationalMap& m) {
  if (!m.param.is_identity()) return false;
  for (std::size_t i = 0; i < 4; ++i)
    if (!(m.coord[i] == RatFun::gen(kPhaseGens[i]))) return false;
  return true;
}

ExactState apply_point(const BirationalMap& m, const ExactState& s) {
  Assignment a = make_assignment(s.point, s.alpha);
  ExactState out;
  out.point.t = s.point.t;
  for (std::size_t i = 0; i < 4; ++i) out.point.phase[i] = m.coord[i].eval(a);
  out.alpha = m.param.apply(s.alpha);
  return out;
}

}  // namespace cpvi
