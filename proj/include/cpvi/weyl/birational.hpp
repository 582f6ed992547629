#pragma once

#include <array>
#include <string>

#include "cpvi/core/hamiltonian.hpp"

namespace cpvi {

/// Affine action on the parameters: beta = matrix * alpha + offset.
struct ParamAction {
  std::array<std::array<long, 5>, 5> matrix{};
  std::array<BigRational, 5> offset{};

  static ParamAction identity();

  ParameterVector apply(const ParameterVector& alpha) const;
  /// beta_k as polynomials in a0..a4.
  std::array<SparsePoly, 5> images() const;
  /// True iff the hyperplane a0 + 2a1 + 3a2 + 2a3 + a4 = 1 is mapped to itself.
  bool preserves_relation() const;
  bool is_identity() const;

  bool operator==(const ParamAction&) const = default;
};

/// `first`, then `after`.
ParamAction compose(const ParamAction& after, const ParamAction& first);

/// Rational map on (x, y, z, w) that may depend on t and the parameters,
/// together with the affine parameter action. Used both for Backlund
/// generators and for coordinate charts.
struct BirationalMap {
  std::string label;
  std::array<RatFun, 4> coord;  // images of x, y, z, w
  ParamAction param = ParamAction::identity();

  static BirationalMap identity();

  /// Set when any coordinate image depends on t.
  bool explicit_t() const;

  /// x -> X, ..., a_k -> beta_k(a).
  Substitution as_substitution() const;

  /// g composed with the map: g(X, Y, Z, W, t; beta).
  RatFun pullback(const RatFun& g) const;
};

/// `first`, then `after`: the images of `after` with `first` substituted in.
BirationalMap compose(const BirationalMap& after, const BirationalMap& first);

/// True iff coordinates are exactly (x, y, z, w) as rational functions and
/// the parameter action is the identity.
bool is_identity(const BirationalMap& m);

struct ExactState {
  PhasePoint point;
  ParameterVector alpha;

  bool operator==(const ExactState& o) const { return point.phase == o.point.phase && point.t == o.point.t && alpha == o.alpha; }
};

/// Exact image of a point and parameter vector. Throws PoleAtPoint.
ExactState apply_point(const BirationalMap& m, const ExactState& s);

}  // namespace cpvi
