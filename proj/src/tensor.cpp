#include "exgeo/tensor.hpp"

#include <algorithm>
#include <functional>

namespace exgeo {

Tensor::Tensor(SpacePtr space, int degree)
    : space_(std::move(space)), n_(space_->dim()), degree_(degree) {
  if (degree_ < 0) throw DegreeError("Tensor: negative degree");
  std::size_t size = 1;
  for (int i = 0; i < degree_; ++i) size *= static_cast<std::size_t>(n_);
  data_.assign(size, Rational(0));
}

std::size_t Tensor::flat(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw DegreeError("Tensor: wrong number of indices");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 1 || i > n_) throw InvalidInputError("Tensor: index out of range");
    f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
  }
  return f;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

Tensor Tensor::operator-() const {
  Tensor r(space_, degree_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_same_space(space_, o.space_);
  if (degree_ != o.degree_) throw DegreeError("Tensor: degree mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_same_space(space_, o.space_);
  if (degree_ != o.degree_) throw DegreeError("Tensor: degree mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor operator*(const Rational& s, const Tensor& t) {
  Tensor r(t.space_, t.degree_);
  for (std::size_t i = 0; i < t.data_.size(); ++i) r.data_[i] = s * t.data_[i];
  return r;
}

Rational entry_dot(const Tensor& a, const Tensor& b) {
  check_same_space(a.space_, b.space_);
  if (a.degree_ != b.degree_) throw DegreeError("entry_dot: degree mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < a.data_.size(); ++i) acc += a.data_[i] * b.data_[i];
  return acc;
}

void for_each_index(int n, int degree, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(degree, 1);
  if (degree == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    int k = degree - 1;
    while (k >= 0 && idx[k] == n) idx[k--] = 1;
    if (k < 0) break;
    ++idx[k];
  }
}

int perm_sign(const std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

Tensor form_to_tensor(const Form<Rational>& f) {
  Tensor t(f.space(), f.degree());
  for_each_index(f.dim(), f.degree(), [&](const std::vector<int>& idx) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
    const Rational c = f.coeff(mask_from_indices(sorted));
    if (c.is_zero()) return;
    t.at(idx) = Rational(perm_sign(idx)) * c;
  });
  return t;
}

Form<Rational> tensor_to_form(const Tensor& t) {
  Form<Rational> f(t.space(), t.degree());
  for (Mask m : masks_of_degree(t.dim(), t.degree()))
    f.add_term(m, t.at(mask_to_indices(m)));
  return f;
}

}  // namespace exgeo
