#include "exgeo/rep.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exgeo {

std::vector<int> clebsch_gordan_su2(int k, int l) {
  if (k < 0 || l < 0) throw InvalidInputError("clebsch_gordan_su2: negative label");
  std::vector<int> out;
  for (int j = 0; j <= std::min(k, l); ++j) out.push_back(k + l - 2 * j);
  return out;
}

std::vector<int> so3_plethysm(PlethysmKind kind, int m, int n) {
  std::vector<int> out;
  switch (kind) {
    case PlethysmKind::tensor: {
      if (m < n) throw InvalidInputError("so3_plethysm: tensor requires m >= n");
      for (int d = m - n; d <= m + n; ++d) out.push_back(d);
      std::reverse(out.begin(), out.end());
      break;
    }
    case PlethysmKind::sym2:
      for (int d = 2 * m; d >= 0; d -= 2) out.push_back(d);
      break;
    case PlethysmKind::alt2:
      for (int d = 2 * m - 1; d >= 1; d -= 2) out.push_back(d);
      break;
  }
  // dimension bookkeeping: sum (2d+1) matches the product space
  long total = 0;
  for (int d : out) total += 2L * d + 1;
  long expect = 0;
  switch (kind) {
    case PlethysmKind::tensor: expect = (2L * m + 1) * (2L * n + 1); break;
    case PlethysmKind::sym2: expect = (2L * m + 1) * (m + 1); break;
    case PlethysmKind::alt2: expect = (2L * m + 1) * m; break;
  }
  if (total != expect) throw Error("so3_plethysm: dimension bookkeeping failed");
  return out;
}

Su2Irrep su2_irrep_matrices(int n) {
  if (n < 0) throw InvalidInputError("su2_irrep_matrices: negative label");
  const int d = n + 1;
  MatQ K = MatQ::Zero(d, d), U = MatQ::Zero(d, d), V = MatQ::Zero(d, d);
  // Basis m_k = x1^{n-k} x2^k. The right regular action differentiates to
  //   K = x1 d/dx1 - x2 d/dx2,  U = x1 d/dx2,  V = x2 d/dx1.
  for (int k = 0; k <= n; ++k) {
    K(k, k) = Rational(n - 2 * k);
    if (k >= 1) U(k - 1, k) = Rational(k);      // U m_k = k m_{k-1}
    if (k < n) V(k + 1, k) = Rational(n - k);   // V m_k = (n-k) m_{k+1}
  }
  return {K, U, V};
}

long commutant_dimension(const std::vector<MatQ>& mats) {
  if (mats.empty()) throw InvalidInputError("commutant_dimension: empty family");
  const long d = mats[0].rows();
  // Unknown A (d x d): rows of the system are the entries of AM - MA.
  MatQ sys(static_cast<long>(mats.size()) * d * d, d * d);
  long row = 0;
  for (const auto& m : mats) {
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        // (AM - MA)(i, j) = sum_k A(i,k) M(k,j) - M(i,k) A(k,j)
        for (long k = 0; k < d; ++k) {
          sys(row, i * d + k) += m(k, j);
          sys(row, k * d + j) -= m(i, k);
        }
        ++row;
      }
  }
  return d * d - exact_rank(sys);
}

WeightDecomposition weight_decompose(const std::vector<MatQ>& torus_matrices) {
  if (torus_matrices.empty())
    throw InvalidInputError("weight_decompose: empty torus family");
  const long d = torus_matrices[0].rows();
  for (std::size_t a = 0; a < torus_matrices.size(); ++a) {
    if (torus_matrices[a].rows() != d || torus_matrices[a].cols() != d)
      throw InvalidInputError("weight_decompose: shape mismatch");
    for (std::size_t b = a + 1; b < torus_matrices.size(); ++b)
      if (!commutator(torus_matrices[a], torus_matrices[b]).isZero(Rational(0)))
        throw InvalidInputError("weight_decompose: matrices do not commute");
  }
  // The supplied basis must diagonalize the family.
  for (const auto& m : torus_matrices)
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j)
        if (i != j && !m(i, j).is_zero())
          throw InvalidInputError(
              "weight_decompose: torus action is not diagonal in the supplied basis");

  WeightDecomposition out;
  for (long v = 0; v < d; ++v) {
    std::vector<Rational> w;
    w.reserve(torus_matrices.size());
    for (const auto& m : torus_matrices) w.push_back(m(v, v));
    out.weights.push_back(std::move(w));
  }

  if (torus_matrices.size() == 1) {
    // Greedy su(2) peeling: repeatedly strip {w, w-2, ..., -w} from the top.
    std::multiset<Rational> pool;
    for (const auto& w : out.weights) pool.insert(w[0]);
    while (!pool.empty()) {
      const Rational top = *pool.rbegin();
      if (!top.is_integer() || top.sign() < 0)
        throw InvalidInputError("weight_decompose: weights are not su(2)-like");
      const long n = top.num().get_si();
      for (long w = n; w >= -n; w -= 2) {
        auto it = pool.find(Rational(w));
        if (it == pool.end())
          throw InvalidInputError("weight_decompose: weight string is broken");
        pool.erase(it);
      }
      out.su2_labels.push_back(static_cast<int>(n));
    }
  }
  return out;
}

MatQ su2_tensor_torus_matrix(int k, int l) {
  const auto a = su2_irrep_matrices(k), b = su2_irrep_matrices(l);
  const long dk = k + 1, dl = l + 1;
  MatQ out = MatQ::Zero(dk * dl, dk * dl);
  for (long i = 0; i < dk; ++i)
    for (long j = 0; j < dl; ++j)
      out(i * dl + j, i * dl + j) = a.K(i, i) + b.K(j, j);
  return out;
}

}  // namespace exgeo
