#include "exgeo/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace exgeo {

namespace {

std::string fmt(double v) {
  // fixed four decimals, negative zero normalized
  char buf[64];
  if (std::abs(v) < 5e-5) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Pt {
  double x, y;
};

}  // namespace

std::string root_diagram_svg(const RootSystem& rs, const std::string& title) {
  if (rs.rank > 2) throw InvalidInputError("root_diagram_svg: rank must be <= 2");
  if (rs.roots.empty()) throw InvalidInputError("root_diagram_svg: no roots");

  auto to_xy = [&](const VecQ& v) {
    auto d = display_coordinates(rs, v);
    Pt p{d[0].approx(), rs.rank == 2 ? d[1].approx() : 0.0};
    return p;
  };

  double max_norm = 1.0;
  std::vector<Pt> root_pts, weight_pts;
  for (const auto& r : rs.roots) {
    root_pts.push_back(to_xy(r));
    max_norm = std::max(max_norm, std::hypot(root_pts.back().x, root_pts.back().y));
  }
  for (const auto& w : rs.fundamental_weights) {
    weight_pts.push_back(to_xy(w));
    max_norm = std::max(max_norm, std::hypot(weight_pts.back().x, weight_pts.back().y));
  }

  const double size = 420.0, margin = 40.0;
  const double scale = (size / 2.0 - margin) / max_norm;
  auto X = [&](double x) { return size / 2.0 + scale * x; };
  auto Y = [&](double y) { return size / 2.0 - scale * y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size)
      << "\" height=\"" << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << " "
      << fmt(size) << "\">\n";
  svg << "<title>" << title << "</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // dominant chamber (rank 2): the cone spanned by the fundamental weights
  if (rs.rank == 2 && weight_pts.size() == 2) {
    const double reach = size;
    auto ray = [&](Pt p) {
      const double n = std::hypot(p.x, p.y);
      return Pt{p.x / n * reach, p.y / n * reach};
    };
    Pt a = ray(weight_pts[0]), b = ray(weight_pts[1]);
    svg << "<path d=\"M " << fmt(X(0)) << " " << fmt(Y(0)) << " L " << fmt(X(a.x))
        << " " << fmt(Y(a.y)) << " L " << fmt(X(b.x)) << " " << fmt(Y(b.y))
        << " Z\" fill=\"#c8e6c9\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
  }

  // axes
  svg << "<line x1=\"" << fmt(margin / 2) << "\" y1=\"" << fmt(size / 2) << "\" x2=\""
      << fmt(size - margin / 2) << "\" y2=\"" << fmt(size / 2)
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<line x1=\"" << fmt(size / 2) << "\" y1=\"" << fmt(margin / 2) << "\" x2=\""
      << fmt(size / 2) << "\" y2=\"" << fmt(size - margin / 2)
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";

  // roots as arrows
  for (const auto& p : root_pts) {
    const double x2 = X(p.x), y2 = Y(p.y);
    svg << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
        << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\" stroke=\"black\" stroke-width=\"1.6\"/>\n";
    // arrow head
    const double angle = std::atan2(Y(p.y) - Y(0), X(p.x) - X(0));
    const double ah = 8.0;
    for (double s : {0.5, -0.5}) {
      svg << "<line x1=\"" << fmt(x2) << "\" y1=\"" << fmt(y2) << "\" x2=\""
          << fmt(x2 - ah * std::cos(angle + s)) << "\" y2=\""
          << fmt(y2 - ah * std::sin(angle + s))
          << "\" stroke=\"black\" stroke-width=\"1.6\"/>\n";
    }
  }

  // fundamental weights as dots
  for (const auto& p : weight_pts)
    svg << "<circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y))
        << "\" r=\"4\" fill=\"#1565c0\"/>\n";

  svg << "<text x=\"" << fmt(margin / 2) << "\" y=\"" << fmt(margin / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace exgeo
