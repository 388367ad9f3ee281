#pragma once

#include <Eigen/Dense>

#include "exgeo/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<exgeo::Rational> {
  using Real = exgeo::Rational;
  using NonInteger = exgeo::Rational;
  using Nested = exgeo::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return exgeo::Rational(0); }
  static inline Real dummy_precision() { return exgeo::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace exgeo {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Complex scalar with exact rational real and imaginary parts.
struct CRational {
  Rational re, im;

  CRational() = default;
  CRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  CRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static CRational i() { return CRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CRational conj() const { return CRational(re, -im); }

  CRational operator-() const { return CRational(-re, -im); }
  CRational& operator+=(const CRational& o) { re += o.re; im += o.im; return *this; }
  CRational& operator-=(const CRational& o) { re -= o.re; im -= o.im; return *this; }
  CRational& operator*=(const CRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  CRational& operator/=(const CRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }
  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
  friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const CRational& z);

// Scalar hooks Eigen resolves by ADL for complex number types.
inline CRational conj(const CRational& z) { return z.conj(); }
inline Rational real(const CRational& z) { return z.re; }
inline Rational imag(const CRational& z) { return z.im; }
inline Rational abs2(const CRational& z) { return z.re * z.re + z.im * z.im; }

}  // namespace exgeo

namespace Eigen {

template <>
struct NumTraits<exgeo::CRational> {
  using Real = exgeo::Rational;
  using NonInteger = exgeo::CRational;
  using Nested = exgeo::CRational;
  using Literal = long;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 80,
    MulCost = 160,
  };
  static inline Real epsilon() { return exgeo::Rational(0); }
  static inline Real dummy_precision() { return exgeo::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace exgeo {

using MatC = Eigen::Matrix<CRational, Eigen::Dynamic, Eigen::Dynamic>;

// Exact linear algebra built on FullPivLU with a zero pivot threshold.

inline Eigen::FullPivLU<MatQ> exact_lu(const MatQ& m) {
  Eigen::FullPivLU<MatQ> lu(m);
  lu.setThreshold(Rational(0));
  return lu;
}

inline long exact_rank(const MatQ& m) { return exact_lu(m).rank(); }

inline MatQ kernel_basis(const MatQ& m) {
  auto lu = exact_lu(m);
  if (lu.rank() == m.cols()) return MatQ::Zero(m.cols(), 0);
  return lu.kernel();
}

/// Solves m x = b exactly; sets *ok to false when the system is inconsistent.
MatQ exact_solve(const MatQ& m, const MatQ& b, bool* ok);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (positive leading entry times content one).
VecQ integerize(const VecQ& v);

/// Real 2m x 2n image [[Re, -Im], [Im, Re]] of a complex matrix.
MatQ realify(const MatC& m);

MatC conj(const MatC& m);
CRational ctrace(const MatC& m);
MatC commutator(const MatC& a, const MatC& b);
MatQ commutator(const MatQ& a, const MatQ& b);

}  // namespace exgeo
