/* Apache License, Version 2.0 */
#pragma once

#include <string>
#include <string_view>

#include "polylink/polygon.hpp"

namespace polylink {

// Text format: first significant line "n", then n lines "x y" with scalars
// as "p/q" or finite decimals. '#' starts a comment; blank lines ignored.

SimplePolygon parse_polygon_file(std::string_view text);

/// Exact writer; parse(format(P)) reproduces P scalar-for-scalar.
std::string format_polygon_file(const SimplePolygon& P);

Point parse_point(std::string_view xs, std::string_view ys);

}  // namespace polylink
