#pragma once

#include <functional>
#include <vector>

#include "exgeo/form.hpp"

namespace exgeo {

/// Visits every d-tuple of 1-based indices in [1,n]^d, last index fastest.
void for_each_index(int n, int degree,
                    const std::function<void(const std::vector<int>&)>& fn);

int perm_sign(const std::vector<int>& v);

/// Dense covariant tensor of degree d on an inner-product space, exact
/// rational entries, 1-based indices. No symmetry is imposed; specific
/// operations validate what they need.
class Tensor {
 public:
  Tensor(SpacePtr space, int degree);

  const SpacePtr& space() const { return space_; }
  int dim() const { return n_; }
  int degree() const { return degree_; }

  const Rational& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }
  Rational& at(const std::vector<int>& idx) { return data_[flat(idx)]; }

  template <typename... I>
  const Rational& operator()(I... idx) const {
    return at({static_cast<int>(idx)...});
  }
  template <typename... I>
  Rational& operator()(I... idx) {
    return at({static_cast<int>(idx)...});
  }

  bool is_zero() const;

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, const Tensor& t);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.degree_ == b.degree_ && *a.space_ == *b.space_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// Frobenius pairing sum_{all indices} a * b.
  friend Rational entry_dot(const Tensor& a, const Tensor& b);

  const std::vector<Rational>& data() const { return data_; }
  std::vector<Rational>& data() { return data_; }

 private:
  std::size_t flat(const std::vector<int>& idx) const;
  SpacePtr space_;
  int n_, degree_;
  std::vector<Rational> data_;
};

/// Dense view of an alternating form (all index orders, with signs).
Tensor form_to_tensor(const Form<Rational>& f);

/// Alternating part of a tensor read back as a sparse form; exact inverse of
/// form_to_tensor on alternating input.
Form<Rational> tensor_to_form(const Tensor& t);

}  // namespace exgeo
