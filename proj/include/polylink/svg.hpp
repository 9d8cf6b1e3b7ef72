/* Apache License, Version 2.0 */
#pragma once

#include <string>
#include <vector>

#include "polylink/link_path.hpp"

namespace polylink {

// Display-only scene; rationals are rendered as 12-significant-digit
// decimals and never read back.
struct Scene {
    SimplePolygon polygon;
    struct Marker {
        Point at;
        std::string label;
    };
    struct Path {
        Polyline line;
        std::string label;
    };
    std::vector<Marker> markers;
    std::vector<Path> paths;
};

/// Deterministic SVG: polygon outline, markers, polylines; viewBox from the
/// scene bounding box with a 10% margin.
std::string emit_svg(const Scene& scene);

}  // namespace polylink
