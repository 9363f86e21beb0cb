#pragma once

#include <optional>
#include <string>

#include "orthocircles/analysis.hpp"

namespace orthocircles {

/// SVG 1.1 document with one <circle> per arrangement circle inside a single
/// y-flipped group. The viewBox is the bounding box plus a 5% margin and the
/// stroke width is 0.5% of the bounding-box diagonal. With a classification,
/// red/black/green circles are colored accordingly; all others are gray.
std::string render_svg(const Arrangement& arr, const std::optional<Classification>& cls = std::nullopt);

}  // namespace orthocircles
