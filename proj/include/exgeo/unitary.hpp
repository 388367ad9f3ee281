#pragma once

#include "exgeo/curvature.hpp"

namespace exgeo {

/// Hermitian model (R^{2m}, g, J): J^2 = -id and J^T g J = g. The fundamental
/// two-form is sigma = g(J., .).
struct HermitianModel {
  SpacePtr space;  // dimension 2m
  MatQ J;

  HermitianModel(SpacePtr s, MatQ j);

  /// Standard model: block J mapping e_i -> e_{m+i}, e_{m+i} -> -e_i.
  static HermitianModel standard(int m);

  int half_dim() const { return space->dim() / 2; }
  Form<Rational> sigma() const;

  /// Pullback action on forms: (J . a)(x, y, ...) = a(J^{-1} x, J^{-1} y, ...).
  Form<Rational> act_on_form(const Form<Rational>& a) const;
};

struct UnitaryTwoFormSplit {
  Form<Rational> part20;     // [[Lambda^{2,0}]], J-eigenvalue -1
  Form<Rational> part11_0;   // [Lambda^{1,1}_0], J-invariant, orthogonal to sigma
  Form<Rational> part_sigma;  // R sigma
};

UnitaryTwoFormSplit unitary_two_form_split(const Form<Rational>& a,
                                           const HermitianModel& h);

}  // namespace exgeo
