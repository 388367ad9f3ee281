#pragma once

#include <array>

#include "exgeo/g2.hpp"

namespace exgeo {

/// The octonion algebra O = R e_0 + V built from a G2 structure on V = R^7:
///   (x0 e0 + x)(y0 e0 + y) = (x0 y0 - g(x,y)) e0 + (x0 y + y0 x + x cross y).
class OctonionAlgebra {
 public:
  explicit OctonionAlgebra(const G2Structure& g);

  using Octonion = std::array<Rational, 8>;  // e_0 .. e_7 coefficients

  Octonion multiply(const Octonion& z, const Octonion& w) const;
  static Rational inner(const Octonion& z, const Octonion& w);

  /// Structure table: table(i, j) is the product e_i e_j as an octonion.
  const Octonion& table(int i, int j) const { return table_[i][j]; }

 private:
  G2Structure g_;
  std::array<std::array<Octonion, 8>, 8> table_;
};

}  // namespace exgeo
