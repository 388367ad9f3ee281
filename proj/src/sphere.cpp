#include "exgeo/sphere.hpp"

#include <random>

#include "exgeo/errors.hpp"

namespace exgeo {

std::vector<VecQ> rational_sphere_points(int n, int count) {
  if (count < 1) throw InvalidInputError("rational_sphere_points: count must be >= 1");
  std::vector<VecQ> out;
  out.reserve(static_cast<std::size_t>(count));

  // u = 0 maps to the pole (1, 0, ..., 0).
  std::mt19937_64 gen(7177);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  VecQ u = VecQ::Zero(n - 1);
  while (static_cast<int>(out.size()) < count) {
    // inverse stereographic: x = (1 - |u|^2, 2u) / (1 + |u|^2)
    Rational norm2(0);
    for (long i = 0; i < u.size(); ++i) norm2 += u(i) * u(i);
    const Rational denom = Rational(1) + norm2;
    VecQ x(n);
    x(0) = (Rational(1) - norm2) / denom;
    for (long i = 0; i < u.size(); ++i) x(i + 1) = Rational(2) * u(i) / denom;
    out.push_back(x);
    for (long i = 0; i < u.size(); ++i) u(i) = Rational(num(gen), den(gen));
  }
  return out;
}

std::vector<VecQ> tangent_frame(const VecQ& p) {
  const long n = p.size();
  std::vector<VecQ> frame;
  MatQ stacked(n, n);
  long rank = 0;
  for (long i = 0; i < n && rank < n - 1; ++i) {
    VecQ e = VecQ::Zero(n);
    e(i) = Rational(1);
    VecQ v = e - p(i) * p;
    if (v.isZero(Rational(0))) continue;
    stacked.col(rank) = v;
    if (exact_rank(stacked.leftCols(rank + 1)) == rank + 1) {
      frame.push_back(integerize(v));
      ++rank;
    }
  }
  return frame;
}

}  // namespace exgeo
