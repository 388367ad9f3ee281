#include "exgeo/invariants.hpp"

#include <algorithm>
#include <array>

namespace exgeo {

InvariantSpace invariant_space_from_tag(const std::string& tag) {
  if (tag == "S2V") return InvariantSpace::S2V;
  if (tag == "LambdaP") return InvariantSpace::LambdaP;
  if (tag == "VtensorLambda2") return InvariantSpace::VtensorLambda2;
  if (tag == "S2Lambda2") return InvariantSpace::S2Lambda2;
  throw InvalidInputError("unknown invariant space tag: " + tag);
}

std::vector<QuadraticInvariant> quadratic_invariants(InvariantSpace tag, int n, int p) {
  std::vector<QuadraticInvariant> out;
  switch (tag) {
    case InvariantSpace::S2V: {
      if (n < 1) throw InvalidInputError("quadratic_invariants: n too small");
      out.push_back({"P1 = Tr(R)^2", [](const Tensor& t) {
                       Rational tr(0);
                       for (int i = 1; i <= t.dim(); ++i) tr += t(i, i);
                       return tr * tr;
                     }});
      out.push_back({"P2 = sum R_ij^2", [](const Tensor& t) {
                       Rational acc(0);
                       for_each_index(t.dim(), 2, [&](const std::vector<int>& id) {
                         acc += t.at(id) * t.at(id);
                       });
                       return acc;
                     }});
      break;
    }
    case InvariantSpace::LambdaP: {
      if (p < 0 || p > n) throw InvalidInputError("quadratic_invariants: bad p");
      out.push_back({"P = sum R_{i1..ip}^2", [](const Tensor& t) {
                       Rational acc(0);
                       for_each_index(t.dim(), t.degree(),
                                      [&](const std::vector<int>& id) {
                                        acc += t.at(id) * t.at(id);
                                      });
                       return acc;
                     }});
      break;
    }
    case InvariantSpace::VtensorLambda2: {
      if (n < 3) throw InvalidInputError("quadratic_invariants: n too small");
      out.push_back({"Q1 = sum w_ijk^2", [](const Tensor& t) {
                       Rational acc(0);
                       for_each_index(t.dim(), 3, [&](const std::vector<int>& id) {
                         acc += t.at(id) * t.at(id);
                       });
                       return acc;
                     }});
      out.push_back({"Q2 = sum w_ijk w_jik", [](const Tensor& t) {
                       Rational acc(0);
                       for_each_index(t.dim(), 3, [&](const std::vector<int>& id) {
                         acc += t.at(id) * t(id[1], id[0], id[2]);
                       });
                       return acc;
                     }});
      out.push_back({"Q3 = sum_k (sum_i w_iik)^2", [](const Tensor& t) {
                       Rational acc(0);
                       for (int k = 1; k <= t.dim(); ++k) {
                         Rational v(0);
                         for (int i = 1; i <= t.dim(); ++i) v += t(i, i, k);
                         acc += v * v;
                       }
                       return acc;
                     }});
      break;
    }
    case InvariantSpace::S2Lambda2: {
      if (n < 2) throw InvalidInputError("quadratic_invariants: n too small");
      out.push_back({"P1 = |T|^2", [](const Tensor& t) { return entry_dot(t, t); }});
      out.push_back({"P2 = sum T_ijkl T_ikjl", [](const Tensor& t) {
                       Rational acc(0);
                       for_each_index(t.dim(), 4, [&](const std::vector<int>& id) {
                         acc += t.at(id) * t(id[0], id[2], id[1], id[3]);
                       });
                       return acc;
                     }});
      out.push_back({"P3 = |rho(T)|^2", [](const Tensor& t) {
                       const int n2 = t.dim();
                       Rational acc(0);
                       for (int j = 1; j <= n2; ++j)
                         for (int l = 1; l <= n2; ++l) {
                           Rational r(0);
                           for (int i = 1; i <= n2; ++i) r += t(i, j, i, l);
                           acc += r * r;
                         }
                       return acc;
                     }});
      out.push_back({"P4 = tau(T)^2", [](const Tensor& t) {
                       Rational tr(0);
                       for (int i = 1; i <= t.dim(); ++i)
                         for (int j = 1; j <= t.dim(); ++j) tr += t(i, j, i, j);
                       return tr * tr;
                     }});
      break;
    }
  }
  return out;
}

Tensor transform_tensor(const Tensor& t, const MatQ& a) {
  if (a.rows() != t.dim() || a.cols() != t.dim())
    throw DimensionError("transform_tensor: matrix shape mismatch");
  const int d = t.degree(), n = t.dim();
  Tensor out(t.space(), d);
  // out(i1..id) = sum_j t(j1..jd) prod a(j, i): pull back one slot at a time.
  Tensor cur = t;
  for (int slot = 0; slot < d; ++slot) {
    Tensor next(t.space(), d);
    for_each_index(n, d, [&](const std::vector<int>& id) {
      Rational acc(0);
      std::vector<int> jd = id;
      for (int j = 1; j <= n; ++j) {
        if (a(j - 1, id[slot] - 1).is_zero()) continue;
        jd[slot] = j;
        acc += a(j - 1, id[slot] - 1) * cur.at(jd);
      }
      if (!acc.is_zero()) next.at(id) = acc;
    });
    cur = std::move(next);
  }
  return cur;
}

MatQ random_orthogonal(int n, std::mt19937_64& gen, bool special) {
  static const std::array<std::array<long, 3>, 4> triples{
      {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}}};
  MatQ q = MatQ::Identity(n, n);
  std::uniform_int_distribution<int> idx(0, n - 1), tri(0, 3), coin(0, 1);

  // Signed permutation part.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  MatQ p = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) p(perm[i], i) = Rational(coin(gen) == 0 ? 1 : -1);
  q = p * q;

  // A few rational Givens rotations.
  for (int r = 0; r < n; ++r) {
    int i = idx(gen), j = idx(gen);
    if (i == j) continue;
    const auto& t = triples[static_cast<std::size_t>(tri(gen))];
    const Rational c(t[0], t[2]), s(t[1], t[2]);
    MatQ g = MatQ::Identity(n, n);
    g(i, i) = c;
    g(j, j) = c;
    g(i, j) = -s;
    g(j, i) = s;
    q = g * q;
  }

  if (special && exact_lu(q).determinant() != Rational(1)) {
    MatQ flip = MatQ::Identity(n, n);
    flip(0, 0) = Rational(-1);
    q = q * flip;
  }
  return q;
}

}  // namespace exgeo
