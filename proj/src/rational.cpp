#include "exgeo/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace exgeo {

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  mpz_class n, d;
  const bool inv = e < 0;
  const unsigned long k = static_cast<unsigned long>(inv ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  if (inv) {
    if (n == 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(d, n);
  }
  return Rational(n, d);
}

namespace {
// Exact integer k-th root; true iff x is a perfect k-th power.
bool mpz_perfect_root(const mpz_class& x, long k, mpz_class* root) {
  mpz_class r;
  const int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  if (!exact) return false;
  *root = r;
  return true;
}
}  // namespace

bool nth_root(const Rational& base, long k, Rational* out) {
  if (k < 1) throw std::invalid_argument("nth_root: k must be >= 1");
  if (base.is_zero()) { *out = Rational(0); return true; }
  if (base.sign() < 0 && k % 2 == 0) return false;
  mpz_class num = base.num(), den = base.den(), rn, rd;
  const bool neg = num < 0;
  if (neg) num = -num;
  if (!mpz_perfect_root(num, k, &rn)) return false;
  if (!mpz_perfect_root(den, k, &rd)) return false;
  if (neg) rn = -rn;
  *out = Rational(rn, rd);
  return true;
}

}  // namespace exgeo
