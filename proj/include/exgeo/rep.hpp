#pragma once

#include <vector>

#include "exgeo/lie.hpp"

namespace exgeo {

/// V_k (x) V_l = sum of V_{k+l-2j}, j = 0..min(k,l); returned as the list of
/// highest weights in descending order.
std::vector<int> clebsch_gordan_su2(int k, int l);

enum class PlethysmKind { tensor, sym2, alt2 };

/// H_d labels (d = highest weight / 2) of the SO(3) plethysms
///   H_m (x) H_n = H_{m-n} + ... + H_{m+n},
///   S^2 H_m = H_0 + H_2 + ... + H_{2m},
///   Lambda^2 H_m = H_1 + H_3 + ... + H_{2m-1}.
std::vector<int> so3_plethysm(PlethysmKind kind, int m, int n = 0);

/// K, U, V acting on degree-n homogeneous polynomials in two variables by the
/// differentiated right regular action; basis x1^{n-k} x2^k, k = 0..n.
struct Su2Irrep {
  MatQ K, U, V;  // [K,U] = 2U, [K,V] = -2V, [U,V] = K
};
Su2Irrep su2_irrep_matrices(int n);

/// Dimension of {A : AM = MA for all M}, by exact null-space computation.
long commutant_dimension(const std::vector<MatQ>& mats);

/// Weight-space data of a commuting torus family plus the greedy su(2)
/// highest-weight peeling.
struct WeightDecomposition {
  std::vector<std::vector<Rational>> weights;  // one tuple per basis vector
  std::vector<int> su2_labels;  // V_n labels when the family is a single matrix
};

/// Reads the weights off a family of commuting matrices whose joint action is
/// diagonalizable over the rationals; throws InvalidInputError otherwise.
WeightDecomposition weight_decompose(const std::vector<MatQ>& torus_matrices);

/// Diagonal torus matrix of su(2) acting on V_k (x) V_l (K (x) 1 + 1 (x) K).
MatQ su2_tensor_torus_matrix(int k, int l);

}  // namespace exgeo
