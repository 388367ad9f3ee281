#include "exgeo/inner_space.hpp"

namespace exgeo {

InnerSpace::InnerSpace(int n, MatQ metric, int orientation)
    : n_(n), g_(std::move(metric)), orientation_(orientation) {
  if (n < 1) throw DimensionError("InnerSpace: dimension must be positive");
  if (orientation != 1 && orientation != -1)
    throw InvalidInputError("InnerSpace: orientation must be +1 or -1");
  if (g_.rows() != n || g_.cols() != n)
    throw InvalidInputError("InnerSpace: metric has wrong shape");
  if (g_ != MatQ(g_.transpose()))
    throw InvalidInputError("InnerSpace: metric is not symmetric");
  // Positive-definiteness via leading principal minors.
  for (int k = 1; k <= n; ++k) {
    Rational minor = exact_lu(g_.topLeftCorner(k, k)).determinant();
    if (minor.sign() <= 0)
      throw InvalidInputError("InnerSpace: metric is not positive-definite");
    if (k == n) det_ = minor;
  }
  standard_ = (g_ == MatQ(MatQ::Identity(n, n)));
  ginv_ = standard_ ? g_ : MatQ(exact_lu(g_).inverse());
}

std::shared_ptr<const InnerSpace> InnerSpace::standard(int n, int orientation) {
  return std::make_shared<const InnerSpace>(n, MatQ(MatQ::Identity(n, n)), orientation);
}

std::shared_ptr<const InnerSpace> InnerSpace::make(int n, MatQ metric, int orientation) {
  return std::make_shared<const InnerSpace>(n, std::move(metric), orientation);
}

Rational InnerSpace::volume_scale() const {
  if (standard_) return Rational(orientation_);
  Rational root;
  if (!nth_root(det_, 2, &root))
    throw UnsupportedMetricError(
        "metric determinant is not a perfect rational square; "
        "volume-dependent operations are unsupported for this metric");
  return Rational(orientation_) * root;
}

}  // namespace exgeo
