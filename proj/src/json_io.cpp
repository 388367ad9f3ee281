#include "exgeo/json_io.hpp"

#include <algorithm>

namespace exgeo {

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInputError("expected a rational as an integer or \"p/q\" string");
}

Json form_to_json(const Form<Rational>& f) {
  Json j;
  j["n"] = f.dim();
  j["degree"] = f.degree();
  j["orientation"] = f.space()->orientation();
  if (f.space()->is_standard()) {
    j["metric"] = "standard";
  } else {
    Json rows = Json::array();
    const MatQ& g = f.space()->metric();
    for (long r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (long c = 0; c < g.cols(); ++c) row.push_back(rational_to_json(g(r, c)));
      rows.push_back(row);
    }
    j["metric"] = rows;
  }
  // terms sorted by index tuple for stable output
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(mask_to_indices(m), c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json arr = Json::array();
  for (const auto& [idx, c] : terms) {
    Json term;
    term["idx"] = idx;
    term["coeff"] = rational_to_json(c);
    arr.push_back(term);
  }
  j["terms"] = std::move(arr);
  return j;
}

Form<Rational> form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("degree"))
    throw InvalidInputError("multivector JSON needs at least n and degree");
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  const int orientation = j.value("orientation", 1);
  SpacePtr sp;
  if (!j.contains("metric") || (j.at("metric").is_string() &&
                                j.at("metric").get<std::string>() == "standard")) {
    sp = InnerSpace::standard(n, orientation);
  } else {
    const Json& rows = j.at("metric");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw InvalidInputError("metric must be \"standard\" or an n x n array");
    MatQ g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = rational_from_json(rows.at(r).at(c));
    sp = InnerSpace::make(n, std::move(g), orientation);
  }
  Form<Rational> f(sp, degree);
  for (const auto& term : j.value("terms", Json::array())) {
    const auto idx = term.at("idx").get<std::vector<int>>();
    if (static_cast<int>(idx.size()) != degree)
      throw InvalidInputError("term index tuple length differs from degree");
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInputError("term index tuple has a repeated index");
    for (int i : sorted)
      if (i < 1 || i > n) throw InvalidInputError("term index out of range");
    Rational c = rational_from_json(term.at("coeff"));
    if (perm_sign(idx) < 0) c = -c;
    f.add_term(mask_from_indices(sorted), c);
  }
  return f;
}

Json curvature_to_json(const Tensor& t) {
  Json j;
  j["n"] = t.dim();
  Json arr = Json::array();
  const int n = t.dim();
  // canonical entries: i < j, k < l, (i,j) <= (k,l)
  for (int i = 1; i <= n; ++i)
    for (int jdx = i + 1; jdx <= n; ++jdx)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k < i || (k == i && l < jdx)) continue;
          const Rational& c = t(i, jdx, k, l);
          if (c.is_zero()) continue;
          Json term;
          term["idx"] = std::vector<int>{i, jdx, k, l};
          term["coeff"] = rational_to_json(c);
          arr.push_back(term);
        }
  j["entries"] = std::move(arr);
  return j;
}

Tensor curvature_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw InvalidInputError("curvature JSON needs n");
  const int n = j.at("n").get<int>();
  auto sp = InnerSpace::standard(n);
  Tensor t(sp, 4);
  Tensor seen(sp, 4);  // 1 where a value was pinned
  auto put = [&](int a, int b, int c, int d, const Rational& v) {
    if (!seen(a, b, c, d).is_zero()) {
      if (t(a, b, c, d) != v)
        throw InvalidInputError("curvature entries conflict under symmetry completion");
      return;
    }
    seen(a, b, c, d) = Rational(1);
    t(a, b, c, d) = v;
  };
  for (const auto& term : j.value("entries", Json::array())) {
    const auto idx = term.at("idx").get<std::vector<int>>();
    if (idx.size() != 4) throw InvalidInputError("curvature entries need 4 indices");
    for (int i : idx)
      if (i < 1 || i > n) throw InvalidInputError("curvature index out of range");
    const Rational v = rational_from_json(term.at("coeff"));
    const int a = idx[0], b = idx[1], c = idx[2], d = idx[3];
    // orbit under the pair symmetries
    put(a, b, c, d, v);
    put(b, a, c, d, -v);
    put(a, b, d, c, -v);
    put(b, a, d, c, v);
    put(c, d, a, b, v);
    put(d, c, a, b, -v);
    put(c, d, b, a, -v);
    put(d, c, b, a, v);
  }
  return t;
}

Json sym2_to_json(const SymTensor2& s) {
  Json rows = Json::array();
  for (long r = 0; r < s.m.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < s.m.cols(); ++c) row.push_back(rational_to_json(s.m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace exgeo
