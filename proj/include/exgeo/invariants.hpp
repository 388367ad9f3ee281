#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "exgeo/tensor.hpp"

namespace exgeo {

enum class InvariantSpace { S2V, LambdaP, VtensorLambda2, S2Lambda2 };

InvariantSpace invariant_space_from_tag(const std::string& tag);

/// One elementary quadratic invariant (a product of traces) evaluable on a
/// dense tensor of the degree the tag expects.
struct QuadraticInvariant {
  std::string name;
  std::function<Rational(const Tensor&)> eval;
};

/// The independent elementary quadratic invariants on the tagged space:
/// 2 on S^2 V, 1 on Lambda^p V, 3 on V (x) Lambda^2 V, 4 on S^2 Lambda^2 V.
std::vector<QuadraticInvariant> quadratic_invariants(InvariantSpace tag, int n, int p = 0);

/// Pullback of a covariant tensor along a linear map: (a . t)(v...) = t(a v...).
Tensor transform_tensor(const Tensor& t, const MatQ& a);

/// Deterministic exact orthogonal matrices: products of signed permutations
/// and Givens rotations built from Pythagorean triples.
MatQ random_orthogonal(int n, std::mt19937_64& gen, bool special = false);

}  // namespace exgeo
