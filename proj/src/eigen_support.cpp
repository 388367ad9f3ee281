#include "exgeo/eigen_support.hpp"

#include <ostream>

namespace exgeo {

std::string CRational::str() const {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s = re.str() + (im.sign() > 0 ? "+" : "");
  if (im == Rational(1)) return s + "i";
  if (im == Rational(-1)) return s + "-i";
  return s + im.str() + "i";
}

std::ostream& operator<<(std::ostream& os, const CRational& z) { return os << z.str(); }

MatQ exact_solve(const MatQ& m, const MatQ& b, bool* ok) {
  auto lu = exact_lu(m);
  MatQ x = lu.solve(b);
  *ok = (m * x - b).isZero(Rational(0));
  return x;
}

VecQ integerize(const VecQ& v) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (long i = 0; i < v.size(); ++i) {
    mpz_class d = v(i).den(), g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  VecQ out = v;
  for (long i = 0; i < out.size(); ++i) {
    out(i) *= Rational(den_lcm);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), out(i).num().get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return out;
  int lead_sign = 0;
  for (long i = 0; i < out.size() && lead_sign == 0; ++i) lead_sign = out(i).sign();
  const Rational scale(lead_sign < 0 ? mpz_class(-num_gcd) : num_gcd);
  for (long i = 0; i < out.size(); ++i) out(i) /= scale;
  return out;
}

MatQ realify(const MatC& m) {
  const long r = m.rows(), c = m.cols();
  MatQ out = MatQ::Zero(2 * r, 2 * c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) {
      out(i, j) = m(i, j).re;
      out(i, j + c) = -m(i, j).im;
      out(i + r, j) = m(i, j).im;
      out(i + r, j + c) = m(i, j).re;
    }
  return out;
}

MatC conj(const MatC& m) {
  MatC out(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
  return out;
}

CRational ctrace(const MatC& m) {
  CRational t;
  for (long i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

MatC commutator(const MatC& a, const MatC& b) { return a * b - b * a; }
MatQ commutator(const MatQ& a, const MatQ& b) { return a * b - b * a; }

}  // namespace exgeo
