/* Apache License, Version 2.0 */
#pragma once

#include <algorithm>
#include <vector>

#include "polylink/errors.hpp"
#include "polylink/geom.hpp"

namespace polylink {

// Exact circular order on nonzero direction vectors, counterclockwise from
// (1, 0). Opposite vectors land in different halves, so parallel vectors in
// the same half point the same way.

inline int angular_half(const Vec& v) {
    if (v.dy.sign() > 0 || (v.dy.is_zero() && v.dx.sign() > 0)) return 0;
    return 1;
}

inline bool same_direction(const Vec& a, const Vec& b) {
    return cross(a, b).is_zero() && angular_half(a) == angular_half(b);
}

inline bool angle_less(const Vec& a, const Vec& b) {
    int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
}

/// w strictly inside the open counterclockwise arc from d1 to d2
/// (d1, d2 distinct directions).
inline bool ccw_strictly_between(const Vec& d1, const Vec& w, const Vec& d2) {
    int c12 = cross(d1, d2).sign();
    int c1w = cross(d1, w).sign();
    int cw2 = cross(w, d2).sign();
    if (c12 > 0) return c1w > 0 && cw2 > 0;
    if (c12 < 0) return c1w > 0 || cw2 > 0;
    // opposite directions, arc of exactly pi
    return c1w > 0;
}

/// Rational direction strictly inside the open ccw arc (d1, d2), obtained by
/// rotating d1 by a halved rational tangent t: (dx - t*dy, dy + t*dx).
inline Vec rotate_into_arc(const Vec& d1, const Vec& d2) {
    Rat t(1);
    for (int iter = 0; iter < 256; ++iter) {
        Vec w{d1.dx - t * d1.dy, d1.dy + t * d1.dx};
        if (ccw_strictly_between(d1, w, d2)) return w;
        t /= Rat(2);
    }
    throw HaltingCapExceeded("rotate_into_arc: halving cap exceeded");
}

/// Sorted, deduplicated circular list of the given nonzero directions.
inline std::vector<Vec> sorted_distinct_directions(std::vector<Vec> dirs) {
    std::sort(dirs.begin(), dirs.end(),
              [](const Vec& a, const Vec& b) { return angle_less(a, b); });
    std::vector<Vec> out;
    for (const Vec& d : dirs)
        if (out.empty() || !same_direction(out.back(), d)) out.push_back(d);
    return out;
}

}  // namespace polylink
