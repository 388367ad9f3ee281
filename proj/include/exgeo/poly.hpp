#pragma once

#include <map>
#include <string>
#include <vector>

#include "exgeo/form.hpp"

namespace exgeo {

/// Sparse multivariate polynomial over the rationals. Exponent keys carry no
/// fixed variable count (trailing zeros are trimmed), so constants mix freely
/// across dimensions.
class Poly {
 public:
  using Exps = std::vector<int>;

  Poly() = default;
  Poly(long v) { *this = Poly(Rational(v)); }  // NOLINT(google-explicit-constructor)
  Poly(Rational v) {                           // NOLINT(google-explicit-constructor)
    if (!v.is_zero()) terms_.emplace(Exps{}, std::move(v));
  }
  /// The coordinate monomial x_k (1-based).
  static Poly var(int k) {
    Poly p;
    Exps e(static_cast<std::size_t>(k), 0);
    e.back() = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_value() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  const std::map<Exps, Rational>& terms() const { return terms_; }

  void add_term(Exps e, Rational c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Partial derivative with respect to x_k (1-based).
  Poly derivative(int k) const;

  Rational eval(const VecQ& point) const;

  std::string str() const;

 private:
  std::map<Exps, Rational> terms_;
};

using FormP = Form<Poly>;

/// Constant-coefficient lift of an exact form.
FormP lift(const Form<Rational>& f);

/// Exterior derivative: coefficientwise partial derivatives wedged with dx^k.
FormP exterior_d(const FormP& f);

/// Position vector field N = sum_k x_k d/dx_k as interior-product input.
std::vector<Poly> position_field(int n);

/// Evaluates all coefficients at a rational point.
Form<Rational> eval_at(const FormP& f, const VecQ& point);

}  // namespace exgeo
