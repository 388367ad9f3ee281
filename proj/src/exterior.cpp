#include "exgeo/form.hpp"

namespace exgeo {

std::vector<Mask> masks_of_degree(int n, int p) {
  std::vector<Mask> out;
  if (p < 0 || p > n) return out;
  const Mask top = Mask(1) << n;
  for (Mask m = 0; m < top; ++m)
    if (mask_degree(m) == p) out.push_back(m);
  return out;
}

namespace {

// det of a cometric submatrix with rows I, columns J (both increasing
// tuples). Forms are covariant, so the induced inner product on basis
// tuples is built from the inverse metric.
Rational gram_det(const MatQ& g, Mask mi, Mask mj) {
  const auto I = mask_to_indices(mi), J = mask_to_indices(mj);
  const int p = static_cast<int>(I.size());
  if (p == 0) return Rational(1);
  MatQ sub(p, p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) sub(a, b) = g(I[a] - 1, J[b] - 1);
  return exact_lu(sub).determinant();
}

Rational basis_inner(const InnerSpace& sp, Mask mi, Mask mj) {
  if (sp.is_standard()) return Rational(mi == mj ? 1 : 0);
  return gram_det(sp.cometric(), mi, mj);
}

}  // namespace

Rational form_inner(const Form<Rational>& a, const Form<Rational>& b) {
  check_same_space(a.space(), b.space());
  if (a.degree() != b.degree())
    throw DegreeError("form_inner: degrees differ");
  const InnerSpace& sp = *a.space();
  Rational acc(0);
  if (sp.is_standard()) {
    for (const auto& [m, ca] : a.terms()) {
      auto it = b.terms().find(m);
      if (it != b.terms().end()) acc += ca * it->second;
    }
    return acc;
  }
  for (const auto& [mi, ca] : a.terms())
    for (const auto& [mj, cb] : b.terms()) acc += ca * cb * basis_inner(sp, mi, mj);
  return acc;
}

Form<Rational> hodge_star(const Form<Rational>& w) {
  const InnerSpace& sp = *w.space();
  const int n = sp.dim(), p = w.degree();
  if (p > n) throw DegreeError("hodge_star: degree exceeds dimension");
  const Rational vol = sp.volume_scale();
  Form<Rational> r(w.space(), n - p);
  const Mask full = full_mask(n);
  // *w = sum_I <w, e^I> vol * sign(I^c, I) e^{I^c}, from *w ^ e^I = <w,e^I> vol.
  if (sp.is_standard()) {
    for (const auto& [m, c] : w.terms()) {
      const Mask comp = full & ~m;
      r.add_term(comp, c * vol * Rational(merge_sign(comp, m)));
    }
    return r;
  }
  for (Mask m : masks_of_degree(n, p)) {
    Rational s(0);
    for (const auto& [mw, c] : w.terms()) s += c * basis_inner(sp, mw, m);
    if (s.is_zero()) continue;
    const Mask comp = full & ~m;
    r.add_term(comp, s * vol * Rational(merge_sign(comp, m)));
  }
  return r;
}

std::pair<Form<Rational>, Form<Rational>> selfdual_split(const Form<Rational>& w) {
  if (w.dim() != 4) throw DimensionError("selfdual_split: dimension must be 4");
  if (w.degree() != 2) throw DegreeError("selfdual_split: degree must be 2");
  const Rational half(1, 2);
  Form<Rational> s = hodge_star(w);
  return {half * (w + s), half * (w - s)};
}

Form<Rational> interior(const VecQ& v, const Form<Rational>& w) {
  std::vector<Rational> vv(v.size());
  for (long i = 0; i < v.size(); ++i) vv[i] = v(i);
  return interior(vv, w);
}

Rational evaluate(const Form<Rational>& w, const std::vector<VecQ>& vectors) {
  Form<Rational> cur = w;
  if (static_cast<int>(vectors.size()) != w.degree())
    throw DegreeError("evaluate: wrong number of vectors");
  for (const auto& v : vectors) cur = interior(v, cur);
  return cur.coeff(Mask(0));
}

Form<Rational> pullback(const Form<Rational>& w, const MatQ& frame) {
  if (frame.rows() != w.dim())
    throw DimensionError("pullback: frame rows must match space dimension");
  const int k = static_cast<int>(frame.cols());
  auto target = InnerSpace::standard(k);
  Form<Rational> r(target, w.degree());
  if (w.degree() > k) return r;
  for (Mask m : masks_of_degree(k, w.degree())) {
    std::vector<VecQ> cols;
    for (int i : mask_to_indices(m)) cols.push_back(frame.col(i - 1));
    r.add_term(m, evaluate(w, cols));
  }
  return r;
}

}  // namespace exgeo
