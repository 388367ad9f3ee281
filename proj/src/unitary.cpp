#include "exgeo/unitary.hpp"

namespace exgeo {

HermitianModel::HermitianModel(SpacePtr s, MatQ j) : space(std::move(s)), J(std::move(j)) {
  const int n = space->dim();
  if (n % 2 != 0) throw DimensionError("HermitianModel: dimension must be even");
  if (J.rows() != n || J.cols() != n)
    throw InvalidInputError("HermitianModel: J has wrong shape");
  if (MatQ(J * J) != MatQ(-MatQ::Identity(n, n)))
    throw InvalidInputError("HermitianModel: J^2 != -id");
  if (MatQ(J.transpose() * space->metric() * J) != space->metric())
    throw InvalidInputError("HermitianModel: J is not a g-isometry");
}

HermitianModel HermitianModel::standard(int m) {
  const int n = 2 * m;
  MatQ j = MatQ::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    j(m + i, i) = Rational(1);
    j(i, m + i) = Rational(-1);
  }
  return HermitianModel(InnerSpace::standard(n), std::move(j));
}

Form<Rational> HermitianModel::sigma() const {
  const int n = space->dim();
  Form<Rational> s(space, 2);
  // sigma = sum_{i<j} g(J e_i, e_j) e^i ^ e^j.
  const MatQ gj = space->metric() * J;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.add_term(mask_from_indices({i, j}), gj(j - 1, i - 1));
  return s;
}

Form<Rational> HermitianModel::act_on_form(const Form<Rational>& a) const {
  // a(J^{-1} ., ..., J^{-1} .) with J^{-1} = -J, computed by pulling back
  // along -J.
  check_same_space(a.space(), space);
  const int n = space->dim();
  Form<Rational> out(space, a.degree());
  const auto masks = masks_of_degree(n, a.degree());
  for (Mask m : masks) {
    std::vector<VecQ> cols;
    for (int i : mask_to_indices(m)) cols.push_back(VecQ(-J.col(i - 1)));
    Rational v = evaluate(a, cols);
    out.add_term(m, v);
  }
  return out;
}

UnitaryTwoFormSplit unitary_two_form_split(const Form<Rational>& a,
                                           const HermitianModel& h) {
  if (a.degree() != 2) throw DegreeError("unitary_two_form_split: need a 2-form");
  check_same_space(a.space(), h.space);
  const auto ja = h.act_on_form(a);
  const Rational half(1, 2);
  Form<Rational> part20 = half * (a - ja);   // J-eigenvalue -1
  Form<Rational> plus = half * (a + ja);     // J-invariant
  const auto sig = h.sigma();
  Form<Rational> part_sigma = (form_inner(plus, sig) / form_inner(sig, sig)) * sig;
  Form<Rational> part11 = plus - part_sigma;
  return {part20, part11, part_sigma};
}

}  // namespace exgeo
