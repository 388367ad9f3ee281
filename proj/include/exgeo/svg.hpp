#pragma once

#include <string>

#include "exgeo/lie.hpp"

namespace exgeo {

/// Deterministic SVG root diagram for rank <= 2: roots as arrows, fundamental
/// weights as dots, dominant chamber shaded. Byte-stable across runs.
std::string root_diagram_svg(const RootSystem& rs, const std::string& title);

}  // namespace exgeo
