#include "exgeo/curvature.hpp"

namespace exgeo {

SymTensor2 ::SymTensor2(SpacePtr s, MatQ mat) : space(std::move(s)), m(std::move(mat)) {
  if (m.rows() != space->dim() || m.cols() != space->dim())
    throw InvalidInputError("SymTensor2: wrong shape");
  if (m != MatQ(m.transpose())) throw InvalidInputError("SymTensor2: not symmetric");
}

Rational SymTensor2::trace_g() const {
  if (space->is_standard()) return m.trace();
  MatQ ginv = exact_lu(space->metric()).inverse();
  return (ginv * m).trace();
}

Tensor kulkarni_nomizu(const SymTensor2& r, const SymTensor2& s) {
  check_same_space(r.space, s.space);
  Tensor t(r.space, 4);
  const int n = r.space->dim();
  for_each_index(n, 4, [&](const std::vector<int>& id) {
    const int x = id[0] - 1, y = id[1] - 1, z = id[2] - 1, w = id[3] - 1;
    t.at(id) = r.m(x, z) * s.m(y, w) + r.m(y, w) * s.m(x, z) -
               r.m(x, w) * s.m(y, z) - r.m(y, z) * s.m(x, w);
  });
  return t;
}

bool has_pair_symmetries(const Tensor& t) {
  if (t.degree() != 4) return false;
  const int n = t.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
          if (t(i, j, k, l) != -t(j, i, k, l)) return false;
          if (t(i, j, k, l) != -t(i, j, l, k)) return false;
          if (t(i, j, k, l) != t(k, l, i, j)) return false;
        }
  return true;
}

Tensor bianchi_map(const Tensor& t) {
  if (t.degree() != 4) throw DegreeError("bianchi_map: degree must be 4");
  Tensor b(t.space(), 4);
  const Rational third(1, 3);
  for_each_index(t.dim(), 4, [&](const std::vector<int>& id) {
    const int x = id[0], y = id[1], z = id[2], w = id[3];
    b.at(id) = third * (t(x, y, z, w) + t(y, z, x, w) + t(z, x, y, w));
  });
  return b;
}

CurvatureTensor::CurvatureTensor(Tensor t, bool require_bianchi) : t_(std::move(t)) {
  if (t_.degree() != 4) throw DegreeError("CurvatureTensor: degree must be 4");
  if (!has_pair_symmetries(t_))
    throw InvalidInputError("CurvatureTensor: pair symmetries fail");
  bianchi_clean_ = bianchi_map(t_).is_zero();
  if (require_bianchi && !bianchi_clean_)
    throw InvalidInputError("CurvatureTensor: first Bianchi identity fails");
}

std::pair<CurvatureTensor, Form<Rational>> bianchi_project(const Tensor& t) {
  if (!has_pair_symmetries(t))
    throw InvalidInputError("bianchi_project: input is not in S^2 Lambda^2");
  Tensor alt = bianchi_map(t);
  CurvatureTensor curv(t - alt);
  return {std::move(curv), tensor_to_form(alt)};
}

namespace {
MatQ metric_inverse(const SpacePtr& sp) {
  if (sp->is_standard()) return MatQ::Identity(sp->dim(), sp->dim());
  return exact_lu(sp->metric()).inverse();
}
}  // namespace

SymTensor2 ricci(const CurvatureTensor& r) {
  const int n = r.dim();
  const MatQ ginv = metric_inverse(r.space());
  MatQ out = MatQ::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational acc(0);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (ginv(k - 1, l - 1).is_zero()) continue;
          acc += ginv(k - 1, l - 1) * r(i, k, j, l);
        }
      out(i - 1, j - 1) = acc;
      out(j - 1, i - 1) = acc;
    }
  return SymTensor2(r.space(), out);
}

Rational scalar_curvature(const CurvatureTensor& r) { return ricci(r).trace_g(); }

Rational sectional_curvature(const CurvatureTensor& r, const VecQ& x, const VecQ& y) {
  const int n = r.dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("sectional_curvature: bad vector size");
  const MatQ& g = r.space()->metric();
  const Rational gxx = (x.transpose() * g * x)(0, 0);
  const Rational gyy = (y.transpose() * g * y)(0, 0);
  const Rational gxy = (x.transpose() * g * y)(0, 0);
  const Rational denom = gxx * gyy - gxy * gxy;
  if (denom.is_zero()) throw DegeneratePlaneError();
  Rational num(0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (x(i - 1).is_zero() || y(j - 1).is_zero()) continue;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          num += x(i - 1) * y(j - 1) * x(k - 1) * y(l - 1) * r(i, j, k, l);
    }
  return num / denom;
}

CurvatureDecomposition decompose(const CurvatureTensor& r) {
  const int n = r.dim();
  if (n < 2) throw DimensionError("decompose: dimension must be at least 2");
  const SpacePtr& sp = r.space();
  const SymTensor2 g = SymTensor2::metric(sp);
  const SymTensor2 ric = ricci(r);
  const Rational s = ric.trace_g();

  Tensor scalar_part =
      (s / Rational(2L * n * (n - 1))) * kulkarni_nomizu(g, g);

  SymTensor2 ric0(sp, MatQ(ric.m - (s / Rational(n)) * g.m));
  Tensor z_part(sp, 4);
  if (n > 2) z_part = Rational(1, n - 2) * kulkarni_nomizu(ric0, g);

  Tensor weyl = r.tensor() - scalar_part - z_part;
  return CurvatureDecomposition{std::move(scalar_part), std::move(z_part),
                                std::move(weyl), s, std::move(ric0)};
}

Rational trace_pair(const Tensor& a, const Tensor& b) {
  check_same_space(a.space(), b.space());
  if (a.degree() != 4 || b.degree() != 4)
    throw DegreeError("trace_pair: degree-4 tensors expected");
  const int n = a.dim();
  const auto pairs = masks_of_degree(n, 2);
  const int N = static_cast<int>(pairs.size());
  auto as_matrix = [&](const Tensor& t) {
    MatQ m(N, N);
    for (int p = 0; p < N; ++p) {
      const auto I = mask_to_indices(pairs[p]);
      for (int q = 0; q < N; ++q) {
        const auto J = mask_to_indices(pairs[q]);
        m(p, q) = t(I[0], I[1], J[0], J[1]);
      }
    }
    return m;
  };
  const MatQ ma = as_matrix(a), mb = as_matrix(b);
  if (a.space()->is_standard()) return (ma * mb).trace();
  // General metric: the tensors are bilinear forms on bivectors, so the
  // endomorphisms are G^{-1} B with G the metric Gram on Lambda^2 V,
  // G(e_i ^ e_j, e_k ^ e_l) = g(i,k) g(j,l) - g(i,l) g(j,k).
  const MatQ& g = a.space()->metric();
  MatQ gram(N, N);
  for (int p = 0; p < N; ++p) {
    const auto I = mask_to_indices(pairs[p]);
    for (int q = 0; q < N; ++q) {
      const auto J = mask_to_indices(pairs[q]);
      gram(p, q) = g(I[0] - 1, J[0] - 1) * g(I[1] - 1, J[1] - 1) -
                   g(I[0] - 1, J[1] - 1) * g(I[1] - 1, J[0] - 1);
    }
  }
  const MatQ ginv = exact_lu(gram).inverse();
  return (ginv * ma * ginv * mb).trace();
}

namespace {

// Basis of self-dual / anti-self-dual 2-forms on R^4:
// f1 = e12 + e34, f2 = e13 - e24, f3 = e14 + e23 and the sign-flipped ones.
std::vector<Form<Rational>> sd_basis(const SpacePtr& sp, int sign) {
  auto f = [&](int a, int b, int c, int d, int s) {
    Form<Rational> out(sp, 2);
    out.add_term(mask_from_indices({a, b}), 1);
    out.add_term(mask_from_indices({c, d}), s);
    return out;
  };
  return {f(1, 2, 3, 4, sign), f(1, 3, 2, 4, -sign), f(1, 4, 2, 3, sign)};
}

// R(alpha, beta) for 2-forms by bilinear extension of R(e^{ij}, e^{kl}) = R_{ijkl}.
Rational eval_on_two_forms(const CurvatureTensor& r, const Form<Rational>& a,
                           const Form<Rational>& b) {
  Rational acc(0);
  for (const auto& [ma, ca] : a.terms()) {
    const auto I = mask_to_indices(ma);
    for (const auto& [mb, cb] : b.terms()) {
      const auto J = mask_to_indices(mb);
      acc += ca * cb * r(I[0], I[1], J[0], J[1]);
    }
  }
  return acc;
}

// Symmetric product of 2-forms as a degree-4 tensor:
// (a . b)(x,y,z,t) = a(x,y)b(z,t) + b(x,y)a(z,t).
Tensor sym_product(const Form<Rational>& a, const Form<Rational>& b) {
  Tensor ta = form_to_tensor(a), tb = form_to_tensor(b);
  Tensor out(a.space(), 4);
  const int n = a.dim();
  for_each_index(n, 4, [&](const std::vector<int>& id) {
    const std::vector<int> xy{id[0], id[1]}, zt{id[2], id[3]};
    out.at(id) = ta.at(xy) * tb.at(zt) + tb.at(xy) * ta.at(zt);
  });
  return out;
}

}  // namespace

SingerThorpeSplit singer_thorpe_split(const CurvatureTensor& r) {
  if (r.dim() != 4) throw DimensionError("singer_thorpe_split: dimension must be 4");
  const SpacePtr& sp = r.space();
  auto plus = sd_basis(sp, +1), minus = sd_basis(sp, -1);

  // Matrix of R in the basis (f1+, f2+, f3+, f1-, f2-, f3-); each basis form
  // has squared norm 2, so the endomorphism blocks carry a factor 1/2.
  MatQ m(6, 6);
  std::vector<Form<Rational>> all = plus;
  all.insert(all.end(), minus.begin(), minus.end());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = eval_on_two_forms(r, all[i], all[j]);

  const Rational tr_plus = (m(0, 0) + m(1, 1) + m(2, 2)) / Rational(2);
  const Rational tr_minus = (m(3, 3) + m(4, 4) + m(5, 5)) / Rational(2);

  // Rebuild tensors from the blocks. With B(fa, fb) coefficients, the tensor
  // is sum B_ab (fa . fb) / (|fa|^2 |fb|^2) with |f|^2 = 2, and the symmetric
  // product double-counts the diagonal.
  auto rebuild = [&](const std::function<bool(int, int)>& keep,
                     const std::function<Rational(int, int)>& coeff) {
    Tensor acc(sp, 4);
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j) {
        if (!keep(i, j)) continue;
        const Rational c = coeff(i, j);
        if (c.is_zero()) continue;
        acc += (c / Rational(i == j ? 8 : 4)) * sym_product(all[i], all[j]);
      }
    return acc;
  };

  auto in_plus = [](int i) { return i < 3; };
  SingerThorpeSplit out{
      rebuild([&](int i, int j) { return in_plus(i) && in_plus(j); },
              [&](int i, int j) {
                Rational c = m(i, j);
                if (i == j) c -= tr_plus * Rational(2, 3);
                return c;
              }),
      rebuild([&](int i, int j) { return !in_plus(i) && !in_plus(j); },
              [&](int i, int j) {
                Rational c = m(i, j);
                if (i == j) c -= tr_minus * Rational(2, 3);
                return c;
              }),
      rebuild([&](int i, int j) { return in_plus(i) != in_plus(j); },
              [&](int i, int j) { return m(i, j); }),
      {tr_plus, tr_minus},
      rebuild([&](int i, int j) { return in_plus(i) && i == j; },
              [&](int, int) { return tr_plus * Rational(2, 3); }),
      rebuild([&](int i, int j) { return !in_plus(i) && i == j; },
              [&](int, int) { return tr_minus * Rational(2, 3); })};
  return out;
}

TorsionTypeSplit torsion_type_split(const Tensor& w) {
  if (w.degree() != 3) throw DegreeError("torsion_type_split: degree must be 3");
  const int n = w.dim();
  if (n < 2) throw DimensionError("torsion_type_split: dimension must be >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (w(i, j, k) != -w(i, k, j))
          throw InvalidInputError("torsion_type_split: not skew in the last two slots");

  const SpacePtr& sp = w.space();
  Tensor lambda3(sp, 3), vector_part(sp, 3);

  // Full alternation; given the skew symmetry it reduces to the cyclic average.
  const Rational third(1, 3);
  for_each_index(n, 3, [&](const std::vector<int>& id) {
    const int i = id[0], j = id[1], k = id[2];
    lambda3.at(id) = third * (w(i, j, k) + w(j, k, i) + w(k, i, j));
  });

  // Trace vector v_k = sum_l w(l, l, k); its invariant embedding is
  // (delta_{ij} v_k - delta_{ik} v_j) / (n - 1).
  std::vector<Rational> v(n + 1, Rational(0));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) v[k] += w(l, l, k);
  const Rational inv(1, n - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational val(0);
        if (i == j) val += v[k];
        if (i == k) val -= v[j];
        if (!val.is_zero()) vector_part(i, j, k) = inv * val;
      }

  Tensor y21 = w - lambda3 - vector_part;
  return TorsionTypeSplit{std::move(lambda3), std::move(vector_part), std::move(y21)};
}

CurvatureTensor curvature_from_ricci_n3(const SymTensor2& ric) {
  if (ric.space->dim() != 3)
    throw DimensionError("curvature_from_ricci_n3: dimension must be 3");
  const SymTensor2 g = SymTensor2::metric(ric.space);
  const Rational s = ric.trace_g();
  // R = s/12 g kn g + (Ric - s/3 g) kn g  in dimension 3.
  SymTensor2 ric0(ric.space, MatQ(ric.m - (s / Rational(3)) * g.m));
  Tensor t = (s / Rational(12)) * kulkarni_nomizu(g, g) + kulkarni_nomizu(ric0, g);
  return CurvatureTensor(std::move(t));
}

}  // namespace exgeo
