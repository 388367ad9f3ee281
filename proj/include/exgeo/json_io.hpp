#pragma once

#include <json.hpp>

#include "exgeo/curvature.hpp"

namespace exgeo {

using Json = nlohmann::ordered_json;

/// Multivector wire format, shared by every module:
/// {"n": 7, "degree": 3, "orientation": 1, "metric": "standard" | [[..]],
///  "terms": [{"idx": [1,2,3], "coeff": "1"}, ...]}
/// Rational coefficients travel as "p" or "p/q" strings.
Json form_to_json(const Form<Rational>& f);
Form<Rational> form_from_json(const Json& j);

/// Sparse curvature format: {"n": 4, "entries": [{"idx": [1,2,1,2],
/// "coeff": "3/2"}, ...]}; unlisted entries follow by symmetry or are zero.
Json curvature_to_json(const Tensor& t);
Tensor curvature_from_json(const Json& j);

Json sym2_to_json(const SymTensor2& s);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace exgeo
