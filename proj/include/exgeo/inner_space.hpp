#pragma once

#include <memory>

#include "exgeo/eigen_support.hpp"
#include "exgeo/errors.hpp"

namespace exgeo {

/// An oriented n-dimensional rational inner-product space. The metric must be
/// symmetric positive-definite; the orientation is +1 or -1 relative to the
/// standard basis order.
class InnerSpace {
 public:
  InnerSpace(int n, MatQ metric, int orientation);

  static std::shared_ptr<const InnerSpace> standard(int n, int orientation = +1);
  static std::shared_ptr<const InnerSpace> make(int n, MatQ metric, int orientation = +1);

  int dim() const { return n_; }
  const MatQ& metric() const { return g_; }
  /// Inverse metric: the induced inner product on covectors.
  const MatQ& cometric() const { return ginv_; }
  int orientation() const { return orientation_; }
  bool is_standard() const { return standard_; }

  Rational metric_det() const { return det_; }

  /// Scale of the volume form in front of e^{1...n}: orientation * sqrt(det g).
  /// Throws UnsupportedMetricError when det g is not a perfect rational square.
  Rational volume_scale() const;

  friend bool operator==(const InnerSpace& a, const InnerSpace& b) {
    return a.n_ == b.n_ && a.orientation_ == b.orientation_ && a.g_ == b.g_;
  }
  friend bool operator!=(const InnerSpace& a, const InnerSpace& b) { return !(a == b); }

 private:
  int n_;
  MatQ g_;
  MatQ ginv_;
  int orientation_;
  bool standard_;
  Rational det_;
};

using SpacePtr = std::shared_ptr<const InnerSpace>;

inline void check_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || *a != *b) throw SpaceMismatchError();
}

}  // namespace exgeo
