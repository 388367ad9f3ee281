#include "exgeo/lie.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

namespace exgeo {

LieAlgebra::LieAlgebra(int dim, std::vector<std::vector<std::vector<Rational>>> c)
    : dim_(dim), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != dim)
    throw InvalidInputError("LieAlgebra: bad structure constant shape");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
            -c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          throw InvalidInputError("LieAlgebra: structure constants not antisymmetric");
  if (!jacobi_holds()) throw InvalidInputError("LieAlgebra: Jacobi identity fails");
}

VecQ LieAlgebra::bracket(const VecQ& u, const VecQ& v) const {
  VecQ out = VecQ::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u(i).is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v(j).is_zero()) continue;
      for (int k = 0; k < dim_; ++k)
        out(k) += u(i) * v(j) * c(i, j, k);
    }
  }
  return out;
}

MatQ LieAlgebra::ad_basis(int i) const {
  MatQ m = MatQ::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

MatQ LieAlgebra::ad(const VecQ& v) const {
  MatQ m = MatQ::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!v(i).is_zero()) m += v(i) * ad_basis(i);
  return m;
}

bool LieAlgebra::jacobi_holds() const {
  VecQ ei = VecQ::Zero(dim_), ej = VecQ::Zero(dim_), ek = VecQ::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        ei.setZero();
        ej.setZero();
        ek.setZero();
        ei(i) = Rational(1);
        ej(j) = Rational(1);
        ek(k) = Rational(1);
        VecQ s = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                 bracket(ek, bracket(ei, ej));
        if (!s.isZero(Rational(0))) return false;
      }
  return true;
}

void LieAlgebra::set_torus(std::vector<VecQ> t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (!bracket(t[a], t[b]).isZero(Rational(0)))
        throw InvalidInputError("set_torus: elements do not commute");
  torus_ = std::move(t);
}

namespace {

LieAlgebra build_from_commutators(const std::vector<MatC>& mats) {
  const int d = static_cast<int>(mats.size());
  const long n = mats[0].rows();
  // Stack the basis as real column vectors (real parts above imaginary parts).
  MatQ basis(2 * n * n, d);
  auto vectorize = [&](const MatC& m, long col, MatQ* into) {
    long row = 0;
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        (*into)(row, col) = m(a, b).re;
        (*into)(row + n * n, col) = m(a, b).im;
        ++row;
      }
  };
  for (int i = 0; i < d; ++i) vectorize(mats[static_cast<std::size_t>(i)], i, &basis);
  if (exact_rank(basis) != d)
    throw InvalidInputError("structure_constants_from_matrices: basis not independent");

  std::vector<std::vector<std::vector<Rational>>> c(
      static_cast<std::size_t>(d),
      std::vector<std::vector<Rational>>(
          static_cast<std::size_t>(d),
          std::vector<Rational>(static_cast<std::size_t>(d), Rational(0))));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const MatC br = commutator(mats[static_cast<std::size_t>(i)],
                                 mats[static_cast<std::size_t>(j)]);
      MatQ target(2 * n * n, 1);
      vectorize(br, 0, &target);
      bool ok = true;
      MatQ x = exact_solve(basis, target, &ok);
      if (!ok) throw ClosureError(i + 1, j + 1);
      for (int k = 0; k < d; ++k) {
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j),
                   sk = static_cast<std::size_t>(k);
        c[si][sj][sk] = x(k, 0);
        c[sj][si][sk] = -x(k, 0);
      }
    }
  LieAlgebra l(d, std::move(c));
  l.set_matrices(mats);
  return l;
}

}  // namespace

LieAlgebra structure_constants_from_matrices(const std::vector<MatC>& mats) {
  if (mats.empty()) throw InvalidInputError("structure_constants_from_matrices: empty");
  return build_from_commutators(mats);
}

LieAlgebra structure_constants_from_matrices(const std::vector<MatQ>& mats) {
  std::vector<MatC> cm;
  cm.reserve(mats.size());
  for (const auto& m : mats) {
    MatC z(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) z(i, j) = CRational(m(i, j));
    cm.push_back(std::move(z));
  }
  return structure_constants_from_matrices(cm);
}

MatQ killing_form(const LieAlgebra& l) {
  const int d = l.dim();
  std::vector<MatQ> ads;
  ads.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) ads.push_back(l.ad_basis(i));
  MatQ k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      k(i, j) =
          (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

MatQ rescaled_trace_form(const LieAlgebra& l) {
  if (l.matrices().empty())
    throw InvalidInputError("rescaled_trace_form: no matrix realization");
  const int d = l.dim();
  MatQ b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const CRational t = ctrace(MatC(l.matrices()[static_cast<std::size_t>(i)] *
                                      l.matrices()[static_cast<std::size_t>(j)]));
      if (!t.im.is_zero())
        throw InvalidInputError("rescaled_trace_form: trace form is not real");
      b(i, j) = -t.re / Rational(2);
      b(j, i) = b(i, j);
    }
  return b;
}

bool is_negative_definite(const MatQ& sym) {
  const long n = sym.rows();
  for (long k = 1; k <= n; ++k) {
    const Rational minor = exact_lu(sym.topLeftCorner(k, k)).determinant();
    if ((k % 2 == 1 && minor.sign() >= 0) || (k % 2 == 0 && minor.sign() <= 0))
      return false;
  }
  return true;
}

// ---- polynomial helpers ----

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  while (!b.empty()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

std::vector<Rational> poly_div_exact(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
  std::vector<Rational> rem = a, q(a.size() - b.size() + 1, Rational(0));
  for (long i = static_cast<long>(rem.size()) - 1;
       i >= static_cast<long>(b.size()) - 1; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.back();
    q[static_cast<std::size_t>(i) - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[static_cast<std::size_t>(i) - (b.size() - 1) + j] -= f * b[j];
  }
  return q;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const MatQ& m) {
  const long n = m.rows();
  std::vector<Rational> minpoly{Rational(1)};

  for (long start = 0; start < n; ++start) {
    VecQ v = VecQ::Zero(n);
    v(start) = Rational(1);
    MatQ stacked(n, n + 1);
    stacked.col(0) = v;
    long k = 1;
    VecQ cur = v;
    for (;; ++k) {
      cur = m * cur;
      stacked.col(k) = cur;
      if (exact_rank(stacked.leftCols(k + 1)) <= k) break;
    }
    bool ok = true;
    MatQ coeff = exact_solve(stacked.leftCols(k), MatQ(stacked.col(k)), &ok);
    if (!ok) throw Error("minimal_polynomial: inconsistent Krylov solve");
    std::vector<Rational> ann(static_cast<std::size_t>(k) + 1);
    for (long i = 0; i < k; ++i) ann[static_cast<std::size_t>(i)] = -coeff(i, 0);
    ann[static_cast<std::size_t>(k)] = Rational(1);

    auto g = poly_gcd(minpoly, ann);
    auto quotient = (g.size() <= 1) ? ann : poly_div_exact(ann, g);
    minpoly = poly_mul(minpoly, quotient);
    if (static_cast<long>(minpoly.size()) == n + 1) break;
  }
  const Rational lead = minpoly.back();
  for (auto& x : minpoly) x /= lead;
  return minpoly;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& value) {
  mpz_class v = value < 0 ? mpz_class(-value) : value;
  std::vector<mpz_class> divs{1};
  if (v == 0) return divs;
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class rest = v, p = 2;
  // Trial division with a hard bound; a composite remainder is treated as a
  // single factor, which can only shrink the candidate set (callers fall back
  // to another torus element when a root is missed).
  while (p * p <= rest && p <= 1000000) {
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += 1;
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  for (const auto& [q, e] : factors) {
    const std::size_t cur = divs.size();
    mpz_class power = 1;
    for (int t = 1; t <= e; ++t) {
      power *= q;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& root) {
  std::vector<Rational> out(poly.size() - 1, Rational(0));
  Rational carry(0);
  for (long i = static_cast<long>(poly.size()) - 1; i >= 1; --i) {
    carry = poly[static_cast<std::size_t>(i)] + carry * root;
    out[static_cast<std::size_t>(i) - 1] = carry;
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& poly_in) {
  std::vector<Rational> poly = poly_in;
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.size() <= 1) return {};
  std::vector<Rational> roots;

  std::size_t low = 0;
  while (low < poly.size() && poly[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    poly.erase(poly.begin(), poly.begin() + static_cast<long>(low));
  }

  while (poly.size() > 1) {
    mpz_class denom_lcm = 1;
    for (const auto& c : poly) {
      mpz_class d = c.den(), g;
      mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
      denom_lcm = denom_lcm / g * d;
    }
    std::vector<mpz_class> z;
    z.reserve(poly.size());
    for (const auto& c : poly) z.push_back(c.num() * (denom_lcm / c.den()));
    const auto ps = divisors_of(z.front());
    const auto qs = divisors_of(z.back());
    bool found = false;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int sign : {1, -1}) {
          const Rational cand(sign > 0 ? p : mpz_class(-p), q);
          if (eval_poly(poly, cand).is_zero()) {
            if (std::find(roots.begin(), roots.end(), cand) == roots.end())
              roots.push_back(cand);
            do {
              poly = deflate(poly, cand);
            } while (poly.size() > 1 && eval_poly(poly, cand).is_zero());
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

// ---- roots from a torus ----

RootSystem roots_from_torus(const LieAlgebra& l, std::optional<MatQ> invariant_form,
                            std::optional<VecQ> positive_choice) {
  const auto& torus = l.torus();
  if (torus.empty()) throw InvalidInputError("roots_from_torus: no torus declared");
  const int r = static_cast<int>(torus.size());
  const int d = l.dim();

  MatQ form;
  if (invariant_form) {
    form = *invariant_form;
  } else if (!l.matrices().empty()) {
    form = rescaled_trace_form(l);
  } else {
    form = -killing_form(l);
  }

  RootSystem rs;
  rs.rank = r;
  rs.gram_t = MatQ(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rs.gram_t(i, j) = (torus[static_cast<std::size_t>(i)].transpose() * form *
                         torus[static_cast<std::size_t>(j)])(0, 0);
  if (exact_lu(rs.gram_t).determinant().is_zero())
    throw InvalidInputError("roots_from_torus: degenerate form on the torus");
  rs.gram_dual = exact_lu(rs.gram_t).inverse();

  std::vector<MatQ> ad_t;
  ad_t.reserve(torus.size());
  for (const auto& t : torus) ad_t.push_back(l.ad(t));

  // Generic torus element; each weight pattern is tried until the squared ad
  // has rational eigen-data with 2-dimensional root planes.
  const std::array<std::array<long, 4>, 4> weight_sets{
      {{1, 2, 5, 11}, {1, 3, 7, 13}, {2, 3, 11, 17}, {1, 5, 19, 23}}};
  std::string failure = "roots_from_torus: no generic torus element found";
  bool saw_nonmaximal = false;
  std::string nonmax_warning;
  for (const auto& ws : weight_sets) {
    RootSystem attempt = rs;
    MatQ a = MatQ::Zero(d, d);
    for (int i = 0; i < r; ++i)
      a += Rational(ws[static_cast<std::size_t>(i)]) * ad_t[static_cast<std::size_t>(i)];
    const MatQ m2 = a * a;

    const auto mp = minimal_polynomial(m2);
    auto eigen = rational_roots(mp);
    if (eigen.size() != mp.size() - 1) {
      failure = "roots_from_torus: ad^2 has irrational eigenvalues";
      continue;
    }

    const long kernel_dim = d - exact_rank(a);
    if (kernel_dim > r) {
      attempt.torus_maximal = false;
      attempt.warning =
          "declared torus is not maximal Abelian: centralizer of a generic "
          "element has dimension " +
          std::to_string(kernel_dim);
      saw_nonmaximal = true;
      nonmax_warning = attempt.warning;
    }

    std::vector<VecQ> roots;
    bool good = true;
    for (const auto& e : eigen) {
      if (e.is_zero()) continue;
      if (e.sign() > 0) {
        good = false;
        break;
      }
      MatQ plane = kernel_basis(MatQ(m2 - e * MatQ::Identity(d, d)));
      if (plane.cols() != 2) {
        good = false;  // eigenvalue collision: retry with other weights
        break;
      }
      plane.col(0) = integerize(plane.col(0));
      plane.col(1) = integerize(plane.col(1));
      // 2x2 blocks of each ad_t restricted to the plane.
      std::vector<MatQ> blocks;
      for (const auto& at : ad_t) {
        MatQ img(d, 2);
        img.col(0) = at * plane.col(0);
        img.col(1) = at * plane.col(1);
        bool ok = true;
        MatQ sol = exact_solve(plane, img, &ok);
        if (!ok) {
          good = false;
          break;
        }
        blocks.push_back(sol);
      }
      if (!good) break;

      int ref = -1;
      for (int i = 0; i < r; ++i)
        if (!blocks[static_cast<std::size_t>(i)].isZero(Rational(0))) {
          ref = i;
          break;
        }
      if (ref < 0) {
        good = false;
        break;
      }
      const MatQ& b0 = blocks[static_cast<std::size_t>(ref)];
      const MatQ b0sq = b0 * b0;
      const Rational c2 = -b0sq(0, 0);
      if (c2.sign() <= 0 ||
          !MatQ(b0sq + c2 * MatQ::Identity(2, 2)).isZero(Rational(0))) {
        good = false;
        break;
      }
      Rational rate;
      if (!nth_root(c2, 2, &rate)) {
        failure = "roots_from_torus: irrational rotation rate on a root plane";
        good = false;
        break;
      }
      VecQ root = VecQ::Zero(r);
      root(ref) = rate;
      for (int i = 0; i < r && good; ++i) {
        if (i == ref) continue;
        const MatQ& bi = blocks[static_cast<std::size_t>(i)];
        Rational ratio(0);
        bool found = false;
        for (int rr = 0; rr < 2 && !found; ++rr)
          for (int cc = 0; cc < 2 && !found; ++cc)
            if (!b0(rr, cc).is_zero()) {
              ratio = bi(rr, cc) / b0(rr, cc);
              found = true;
            }
        if (!MatQ(bi - ratio * b0).isZero(Rational(0))) good = false;
        root(i) = ratio * rate;
      }
      if (!good) break;
      roots.push_back(root);
      roots.push_back(VecQ(-root));
    }
    if (!good) continue;

    attempt.roots = std::move(roots);

    for (const auto& alpha : attempt.roots)
      for (const auto& beta : attempt.roots)
        if (!attempt.cartan(beta, alpha).is_integer())
          throw Error("roots_from_torus: Cartan integrality fails");

    auto is_positive = [&](const VecQ& v) {
      if (positive_choice) {
        const Rational pairing = (positive_choice->transpose() * v)(0, 0);
        if (!pairing.is_zero()) return pairing.sign() > 0;
        // fall through to the lexicographic tie-break
      }
      for (long i = 0; i < v.size(); ++i) {
        if (v(i).sign() > 0) return true;
        if (v(i).sign() < 0) return false;
      }
      return false;
    };
    for (std::size_t i = 0; i < attempt.roots.size(); ++i)
      if (is_positive(attempt.roots[i])) attempt.positive.push_back(i);

    for (std::size_t i : attempt.positive) {
      bool is_sum = false;
      for (std::size_t p : attempt.positive)
        for (std::size_t q : attempt.positive)
          if (VecQ(attempt.roots[p] + attempt.roots[q] - attempt.roots[i])
                  .isZero(Rational(0)))
            is_sum = true;
      if (!is_sum) attempt.simple.push_back(i);
    }
    if (static_cast<int>(attempt.simple.size()) != r)
      throw Error("roots_from_torus: simple root count differs from rank");

    MatQ sys(r, r);
    for (int j = 0; j < r; ++j) {
      const VecQ& alpha = attempt.roots[attempt.simple[static_cast<std::size_t>(j)]];
      const Rational norm = attempt.inner(alpha, alpha);
      const VecQ row = VecQ((Rational(2) / norm) * (attempt.gram_dual * alpha));
      for (int k = 0; k < r; ++k) sys(j, k) = row(k);
    }
    auto lu = exact_lu(sys);
    if (lu.rank() < r)
      throw InvalidInputError("fundamental_weights: degenerate simple-root set");
    for (int i = 0; i < r; ++i) {
      VecQ rhs = VecQ::Zero(r);
      rhs(i) = Rational(1);
      attempt.fundamental_weights.push_back(lu.solve(rhs));
    }
    return attempt;
  }
  if (saw_nonmaximal) {
    // A proper sub-torus cannot separate the root planes; report the warning
    // with no root data rather than failing.
    rs.torus_maximal = false;
    rs.warning = nonmax_warning;
    return rs;
  }
  throw Error(failure);
}

bool RootSystem::is_dominant(const VecQ& weight) const {
  for (std::size_t j : simple)
    if (inner(weight, roots[j]).sign() < 0) return false;
  return true;
}

long weyl_group_order(const RootSystem& rs) {
  const std::size_t nr = rs.roots.size();
  auto reflect = [&](const VecQ& alpha, const VecQ& beta) {
    return VecQ(beta - rs.cartan(beta, alpha) * alpha);
  };
  auto find_root = [&](const VecQ& v) -> long {
    for (std::size_t i = 0; i < nr; ++i)
      if (VecQ(rs.roots[i] - v).isZero(Rational(0))) return static_cast<long>(i);
    return -1;
  };
  std::vector<std::vector<int>> gens;
  for (const auto& alpha : rs.roots) {
    std::vector<int> perm(nr);
    for (std::size_t i = 0; i < nr; ++i) {
      const long j = find_root(reflect(alpha, rs.roots[i]));
      if (j < 0)
        throw Error("weyl_group_order: a reflection does not permute the roots");
      perm[i] = static_cast<int>(j);
    }
    gens.push_back(std::move(perm));
  }
  std::set<std::vector<int>> group;
  std::vector<int> id(nr);
  for (std::size_t i = 0; i < nr; ++i) id[i] = static_cast<int>(i);
  group.insert(id);
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        std::vector<int> comp(nr);
        for (std::size_t i = 0; i < nr; ++i) comp[i] = g[static_cast<std::size_t>(s[i])];
        if (group.insert(comp).second) next.push_back(std::move(comp));
        if (group.size() > 1000000) throw Error("weyl_group_order: guard exceeded");
      }
    frontier = std::move(next);
  }
  return static_cast<long>(group.size());
}

double SurdCoord::approx() const {
  return rat.to_double() + coef.to_double() * std::sqrt(radicand.to_double());
}

std::string SurdCoord::str() const {
  if (coef.is_zero()) return rat.str();
  std::string s;
  if (!rat.is_zero()) s = rat.str() + (coef.sign() > 0 ? "+" : "");
  if (coef == Rational(1))
    s += "sqrt(" + radicand.str() + ")";
  else if (coef == Rational(-1))
    s += "-sqrt(" + radicand.str() + ")";
  else
    s += "(" + coef.str() + ")sqrt(" + radicand.str() + ")";
  return s;
}

std::vector<SurdCoord> display_coordinates(const RootSystem& rs, const VecQ& v) {
  if (rs.rank > 2)
    throw InvalidInputError("display_coordinates: rank must be at most 2");
  std::vector<SurdCoord> out;
  const MatQ& b = rs.gram_t;
  const Rational b11 = b(0, 0);
  // Orthonormalize (T1, T2): u1 = T1/sqrt(B11); the value of a functional on
  // u1 is v1/sqrt(B11) = (v1/B11) sqrt(B11).
  out.push_back(SurdCoord{Rational(0), v(0) / b11, b11});
  if (rs.rank == 2) {
    // u2 = (T2 - (B12/B11) T1)/sqrt(det B / B11):
    // value = (v2 - v1 B12/B11) sqrt(B11/det B).
    const Rational det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    const Rational num = v(1) - v(0) * b(0, 1) / b11;
    out.push_back(SurdCoord{Rational(0), num, b11 / det});
  }
  for (auto& c : out) {
    Rational root;
    if (nth_root(c.radicand, 2, &root)) {
      c.rat += c.coef * root;
      c.coef = Rational(0);
      c.radicand = Rational(1);
    } else if (c.coef.is_zero()) {
      c.radicand = Rational(1);
    }
  }
  return out;
}

// ---- built-in presentations ----

namespace {
MatC mat_fill(int n, std::initializer_list<CRational> vals) {
  MatC m(n, n);
  auto it = vals.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}
}  // namespace

LieAlgebra lie_su2() {
  const CRational i = CRational::i(), o = CRational(0), one = CRational(1);
  std::vector<MatC> mats{
      mat_fill(2, {i, o, o, -i}),      // H
      mat_fill(2, {o, one, -one, o}),  // X
      mat_fill(2, {o, i, i, o}),       // Y
  };
  auto l = structure_constants_from_matrices(mats);
  VecQ h = VecQ::Zero(3);
  h(0) = Rational(1);
  l.set_torus({h});
  return l;
}

LieAlgebra lie_su3() {
  const CRational i = CRational::i(), o = CRational(0), one = CRational(1);
  const CRational mone = -one, mi = -i;
  const CRational m2i = CRational(Rational(0), Rational(-2));
  std::vector<MatC> mats{
      mat_fill(3, {o, one, o, mone, o, o, o, o, o}),  // E1
      mat_fill(3, {o, i, o, i, o, o, o, o, o}),       // E2
      mat_fill(3, {o, o, one, o, o, o, mone, o, o}),  // E3
      mat_fill(3, {o, o, i, o, o, o, i, o, o}),       // E4
      mat_fill(3, {o, o, o, o, o, one, o, mone, o}),  // E5
      mat_fill(3, {o, o, o, o, o, i, o, i, o}),       // E6
      mat_fill(3, {i, o, o, o, i, o, o, o, m2i}),     // E7
      mat_fill(3, {i, o, o, o, mi, o, o, o, o}),      // E8
  };
  auto l = structure_constants_from_matrices(mats);
  VecQ e7 = VecQ::Zero(8), e8 = VecQ::Zero(8);
  e7(6) = Rational(1);
  e8(7) = Rational(1);
  l.set_torus({e7, e8});
  return l;
}

LieAlgebra lie_g2() {
  auto g = standard_g2_structure(G2Variant::section2);
  auto basis = stabilizer_algebra(g.phi, Ambient::so_n);
  auto l = structure_constants_from_matrices(basis);

  // Cartan subalgebra by exact search: intersect the stabilizer with the
  // span of the coordinate-plane rotations R23, R45, R67. The intersection
  // is the maximal torus of the su(3) subalgebra fixing e_1, which is also
  // maximal in the stabilizer (equal rank), and its elements have integer
  // rotation rates.
  const int d = l.dim();
  auto flatten_skew = [](const MatQ& m) {
    VecQ v(21);
    int idx = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) v(idx++) = m(i, j);
    return v;
  };
  auto rot = [](int i, int j) {
    MatQ m = MatQ::Zero(7, 7);
    m(i - 1, j - 1) = Rational(1);
    m(j - 1, i - 1) = Rational(-1);
    return m;
  };
  MatQ sys(21, d + 3);
  for (int c = 0; c < d; ++c) {
    MatQ real(7, 7);
    const MatC& mc = l.matrices()[static_cast<std::size_t>(c)];
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) real(i, j) = mc(i, j).re;
    sys.col(c) = flatten_skew(real);
  }
  sys.col(d) = -flatten_skew(rot(2, 3));
  sys.col(d + 1) = -flatten_skew(rot(4, 5));
  sys.col(d + 2) = -flatten_skew(rot(6, 7));
  MatQ ker = kernel_basis(sys);
  if (ker.cols() != 2) throw Error("lie_g2: unexpected Cartan intersection");
  VecQ t1 = integerize(ker.col(0).head(d)), t2 = integerize(ker.col(1).head(d));
  if (!l.bracket(t1, t2).isZero(Rational(0)))
    throw Error("lie_g2: Cartan candidates do not commute");
  l.set_torus({t1, t2});
  return l;
}

}  // namespace exgeo
