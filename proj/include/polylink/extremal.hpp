/* Apache License, Version 2.0 */
#pragma once

#include "polylink/link_oracle.hpp"

namespace polylink {

// An n-gon attaining both polygonal-diameter bounds simultaneously:
// floor(n/2) for the interior pair (a, b) and ceil(n/2) for the exterior
// pair (c, d).
struct ExtremalInstance {
    SimplePolygon polygon;
    Point int_a, int_b;
    Point ext_c, ext_d;
    std::size_t int_value = 0;
    std::size_t ext_value = 0;
};

/// The spiral family: a pointed spiral strip of n vertices whose interior
/// forces one bend per arm and whose exterior forces a wind per arm. Odd n
/// adds a wedge on the outer wall sheltering the exterior witness.
ExtremalInstance spiral(std::size_t n);

struct VerifyReport {
    std::size_t int_claimed = 0, int_actual = 0;
    std::size_t ext_claimed = 0, ext_actual = 0;
    std::size_t sampled_int_max = 0, sampled_ext_max = 0;
};

/// Oracle-checks both witness pairs against the claimed values and the
/// upper-bound law on sampled pairs. Throws VerificationFailed on any
/// mismatch; OracleRefused if n exceeds the oracle budget.
VerifyReport verify(const ExtremalInstance& inst, const OracleOptions& opts = {});

}  // namespace polylink
