#include "exgeo/octonion.hpp"

namespace exgeo {

OctonionAlgebra::OctonionAlgebra(const G2Structure& g) : g_(g) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion z{}, w{};
      z[static_cast<size_t>(i)] = Rational(1);
      w[static_cast<size_t>(j)] = Rational(1);
      table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = multiply(z, w);
    }
}

Rational OctonionAlgebra::inner(const Octonion& z, const Octonion& w) {
  Rational acc(0);
  for (int k = 0; k < 8; ++k)
    acc += z[static_cast<size_t>(k)] * w[static_cast<size_t>(k)];
  return acc;
}

OctonionAlgebra::Octonion OctonionAlgebra::multiply(const Octonion& z,
                                                    const Octonion& w) const {
  VecQ x = VecQ::Zero(7), y = VecQ::Zero(7);
  for (int k = 1; k <= 7; ++k) {
    x(k - 1) = z[static_cast<size_t>(k)];
    y(k - 1) = w[static_cast<size_t>(k)];
  }
  const Rational x0 = z[0], y0 = w[0];
  const Rational gxy = (x.transpose() * g_.metric.m * y)(0, 0);
  const VecQ cross = cross_product(x, y, g_);

  Octonion out{};
  out[0] = x0 * y0 - gxy;
  for (int k = 1; k <= 7; ++k)
    out[static_cast<size_t>(k)] = x0 * y(k - 1) + y0 * x(k - 1) + cross(k - 1);
  return out;
}

}  // namespace exgeo
