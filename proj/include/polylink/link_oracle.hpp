/* Apache License, Version 2.0 */
#pragma once

#include <cstdint>
#include <optional>

#include "polylink/link_path.hpp"

namespace polylink {

struct OracleOptions {
    /// instances with more vertices are refused (desk-scale tool)
    std::size_t max_n = 16;
    std::uint64_t seed = 0;
};

struct OracleStability {
    int box_doublings = 0;
    int enrichment_rounds = 0;
    bool stable = true;
};

struct OracleResult {
    /// nullopt means unreachable over the candidate field (signals a bug or
    /// a component mismatch for valid inputs)
    std::optional<std::size_t> distance;
    /// sound witness path with `distance` links (empty for distance 0)
    Polyline witness;
    OracleStability stability;
};

// Finite bend-point field: the query points, the polygon vertices pushed
// into the domain, and all pairwise intersections of lines through two
// distinct base points, filtered to the domain (exterior: clipped to a box).
struct CandidateField {
    Location::Kind domain = Location::Kind::Interior;
    std::vector<Point> points;
    std::pair<Point, Point> box;  ///< exterior clip box
};

CandidateField build_candidates(const SimplePolygon& P, const std::vector<Point>& extras,
                                Location::Kind domain);

/// Exact-flavored minimum link distance over the candidate field: BFS
/// layering by visibility. 1- and 2-link answers are decided directly; the
/// exterior box is doubled until the answer is stable, and the field is
/// enriched with seeded extra points until stable again.
OracleResult link_distance(const SimplePolygon& P, const Point& a, const Point& b,
                           Location::Kind domain, const OracleOptions& opts = {});

struct PoldiamSample {
    std::size_t lower_bound = 0;
    Point witness_a, witness_b;
    OracleResult result;
};

/// Max of link_distance over seeded sampled same-component pairs; an
/// explicit lower bound on poldiam of the domain.
PoldiamSample poldiam_sampled(const SimplePolygon& P, Location::Kind domain, std::size_t budget,
                              std::uint64_t seed, const OracleOptions& opts = {});

}  // namespace polylink
