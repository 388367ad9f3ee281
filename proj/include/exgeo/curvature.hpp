#pragma once

#include <optional>
#include <string>
#include <utility>

#include "exgeo/tensor.hpp"

namespace exgeo {

/// Symmetric rational 2-tensor on an inner-product space.
struct SymTensor2 {
  SpacePtr space;
  MatQ m;

  SymTensor2(SpacePtr s, MatQ mat);
  static SymTensor2 metric(const SpacePtr& s) { return SymTensor2(s, s->metric()); }
  static SymTensor2 zero(const SpacePtr& s) {
    return SymTensor2(s, MatQ::Zero(s->dim(), s->dim()));
  }
  Rational trace_g() const;  // trace with respect to the metric
  bool is_zero() const { return m.isZero(Rational(0)); }
  friend bool operator==(const SymTensor2& a, const SymTensor2& b) {
    return *a.space == *b.space && a.m == b.m;
  }
};

/// (r kn s)(x,y,z,t) = r(x,z)s(y,t) + r(y,t)s(x,z) - r(x,t)s(y,z) - r(y,z)s(x,t).
Tensor kulkarni_nomizu(const SymTensor2& r, const SymTensor2& s);

/// Pair symmetries of S^2 Lambda^2: skew in (1,2) and (3,4), symmetric under
/// pair swap.
bool has_pair_symmetries(const Tensor& t);

/// First-Bianchi cyclic average b(T)(x,y,z,w) = (T(x,y,z,w)+T(y,z,x,w)+T(z,x,y,w))/3.
Tensor bianchi_map(const Tensor& t);

/// Element of S^2 Lambda^2 V with the first Bianchi identity optionally
/// certified. Construction validates the pair symmetries.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(Tensor t, bool require_bianchi = false);

  const Tensor& tensor() const { return t_; }
  const SpacePtr& space() const { return t_.space(); }
  int dim() const { return t_.dim(); }
  bool bianchi_clean() const { return bianchi_clean_; }

  const Rational& operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }

 private:
  Tensor t_;
  bool bianchi_clean_;
};

/// Splits an S^2 Lambda^2 tensor as ker(b) + Lambda^4: T = curvature + alt part.
std::pair<CurvatureTensor, Form<Rational>> bianchi_project(const Tensor& t);

SymTensor2 ricci(const CurvatureTensor& r);
Rational scalar_curvature(const CurvatureTensor& r);

/// sigma(X,Y) = R(X,Y,X,Y) / (|X|^2 |Y|^2 - g(X,Y)^2).
Rational sectional_curvature(const CurvatureTensor& r, const VecQ& x, const VecQ& y);

struct CurvatureDecomposition {
  Tensor scalar_part;        // s/(2n(n-1)) g kn g
  Tensor z_part;             // (1/(n-2)) (Ric - s/n g) kn g     (zero when n = 2)
  Tensor weyl_part;          // remainder; zero when n <= 3
  Rational scalar;
  SymTensor2 traceless_ricci;
};

CurvatureDecomposition decompose(const CurvatureTensor& r);

/// Trace inner product on S^2 Lambda^2: view both tensors as symmetric
/// endomorphisms of Lambda^2 via the form inner product and take Tr(r o s).
Rational trace_pair(const Tensor& a, const Tensor& b);

/// SO(4) refinement of R viewed as a symmetric endomorphism of Lambda^2 R^4 in
/// a (self-dual, anti-self-dual) block basis.
struct SingerThorpeSplit {
  Tensor w_plus, w_minus, z_part;
  std::pair<Rational, Rational> scalar_pair;  // traces of the two diagonal blocks
  Tensor id_plus_part, id_minus_part;         // the two R-summands as tensors
};

SingerThorpeSplit singer_thorpe_split(const CurvatureTensor& r);

/// Splits w in V (x) Lambda^2 V (skew in the last two slots) into
/// Lambda^3 + V + Y_2^1 parts.
struct TorsionTypeSplit {
  Tensor lambda3_part, vector_part, y21_part;
};

TorsionTypeSplit torsion_type_split(const Tensor& w);

/// Rebuilds the n=3 curvature tensor determined by its Ricci tensor.
CurvatureTensor curvature_from_ricci_n3(const SymTensor2& ric);

}  // namespace exgeo
