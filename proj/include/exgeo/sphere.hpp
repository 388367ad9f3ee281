#pragma once

#include <vector>

#include "exgeo/eigen_support.hpp"

namespace exgeo {

/// Deterministic exact rational points on the unit sphere S^{N-1}, from the
/// inverse stereographic image of rational points; the first point is
/// (1, 0, ..., 0).
std::vector<VecQ> rational_sphere_points(int n, int count);

/// Tangent vectors at a unit-sphere point p: a maximal independent subset of
/// the projections e_i - (e_i . p) p, exactly orthogonal to p.
std::vector<VecQ> tangent_frame(const VecQ& p);

}  // namespace exgeo
