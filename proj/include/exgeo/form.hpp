#pragma once

#include <map>
#include <utility>
#include <vector>

#include "exgeo/index_mask.hpp"
#include "exgeo/inner_space.hpp"

namespace exgeo {

/// Sparse alternating covariant tensor of fixed degree with coefficients in an
/// arbitrary commutative ring Scalar (exact rationals, complex rationals,
/// polynomials). Terms are keyed by strictly increasing index tuples; zero
/// coefficients are never stored.
///
/// Conventions (determinant normalization, no 1/p! factors):
///   e^I(v_1,...,v_p) = det[ e^{i_a}(v_b) ],
///   wedge on basis tuples is the merge sign,  a ^ b = a (x) b - b (x) a  in
///   degree one, and (v . w)(u_2,...,u_p) = w(v, u_2,...,u_p).
template <typename Scalar>
class Form {
 public:
  Form(SpacePtr space, int degree) : space_(std::move(space)), degree_(degree) {
    if (degree_ < 0) throw DegreeError("Form: negative degree");
  }

  static Form basis(const SpacePtr& space, const std::vector<int>& indices,
                    Scalar coeff = Scalar(1)) {
    Form f(space, static_cast<int>(indices.size()));
    f.add_term(mask_from_indices(indices), std::move(coeff));
    return f;
  }

  const SpacePtr& space() const { return space_; }
  int degree() const { return degree_; }
  int dim() const { return space_->dim(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Scalar>& terms() const { return terms_; }

  Scalar coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar coeff(const std::vector<int>& idx) const { return coeff(mask_from_indices(idx)); }

  void add_term(Mask m, Scalar c) {
    if (c == Scalar(0)) return;
    if (mask_degree(m) != degree_)
      throw DegreeError("Form: term degree does not match form degree");
    if (m >= (Mask(1) << space_->dim()))
      throw DegreeError("Form: index out of range for this space");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    check_same_space(space_, o.space_);
    if (degree_ != o.degree_)
      throw DegreeError("Form: cannot add forms of different degree");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) { return *this += -o; }

  Form operator-() const {
    Form r(space_, degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  friend Form operator*(const Scalar& s, const Form& f) {
    Form r(f.space_, f.degree_);
    if (s == Scalar(0)) return r;
    for (const auto& [m, c] : f.terms_) {
      Scalar p = s * c;
      if (!(p == Scalar(0))) r.terms_.emplace(m, std::move(p));
    }
    return r;
  }
  friend Form operator*(const Form& f, const Scalar& s) { return s * f; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && *a.space_ == *b.space_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  SpacePtr space_;
  int degree_;
  std::map<Mask, Scalar> terms_;
};

template <typename Scalar>
Form<Scalar> wedge(const Form<Scalar>& a, const Form<Scalar>& b) {
  check_same_space(a.space(), b.space());
  Form<Scalar> r(a.space(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return r;  // zero of that degree
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ma | mb, std::move(c));
    }
  return r;
}

/// Interior product by a vector with components v (1-based slots):
/// (v . w)(u_2,...,u_p) = w(v, u_2,...,u_p).
template <typename Scalar>
Form<Scalar> interior(const std::vector<Scalar>& v, const Form<Scalar>& w) {
  if (w.degree() == 0) throw DegreeError("interior: form has degree zero");
  if (static_cast<int>(v.size()) != w.dim())
    throw DimensionError("interior: vector has wrong dimension");
  Form<Scalar> r(w.space(), w.degree() - 1);
  for (const auto& [m, c] : w.terms())
    for (int i : mask_to_indices(m)) {
      if (v[i - 1] == Scalar(0)) continue;
      Scalar t = v[i - 1] * c;
      if (removal_sign(m, i) < 0) t = -t;
      r.add_term(m & ~(Mask(1) << (i - 1)), std::move(t));
    }
  return r;
}

/// Evaluation on column vectors: w(v_1,...,v_p) by Laplace expansion of the
/// determinant convention.
template <typename Scalar>
Scalar evaluate(const Form<Scalar>& w, const std::vector<std::vector<Scalar>>& vectors) {
  if (static_cast<int>(vectors.size()) != w.degree())
    throw DegreeError("evaluate: wrong number of vectors");
  if (w.degree() == 0) return w.coeff(Mask(0));
  Form<Scalar> cur = w;
  for (const auto& v : vectors) cur = interior(v, cur);
  return cur.coeff(Mask(0));
}

template <typename Scalar>
Form<Scalar> zero_form(const SpacePtr& space, int degree) {
  return Form<Scalar>(space, degree);
}

// ---- Metric-dependent operations (exact rational coefficients only) ----

/// <a, b> = sum over tuples of det([g(x_i, y_j)]); basis tuples are
/// orthonormal for the standard metric.
Rational form_inner(const Form<Rational>& a, const Form<Rational>& b);

/// Hodge star with the star on the left: *a ^ b = <a, b> vol for all b.
Form<Rational> hodge_star(const Form<Rational>& w);

/// Self-dual / anti-self-dual split of a 2-form in dimension 4:
/// projectors (id +- *)/2.
std::pair<Form<Rational>, Form<Rational>> selfdual_split(const Form<Rational>& w);

/// Pullback along the linear map standard R^k -> V given by frame columns.
Form<Rational> pullback(const Form<Rational>& w, const MatQ& frame);

Form<Rational> interior(const VecQ& v, const Form<Rational>& w);
Rational evaluate(const Form<Rational>& w, const std::vector<VecQ>& vectors);

}  // namespace exgeo
