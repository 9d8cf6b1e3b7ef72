/* Apache License, Version 2.0 */
#pragma once

#include <cstddef>
#include <vector>

#include "polylink/geom.hpp"

namespace polylink {

// A validated simple closed n-gon. Vertices are 0-based p_0..p_{n-1};
// edge i joins vertex i-1 to vertex i, so edge 0 closes the cycle from
// p_{n-1} to p_0 and edge 1 is [p_0, p_1]. Immutable after validation.
class SimplePolygon {
public:
    /// Checks all simplicity invariants; throws ValidationError naming the
    /// violating feature indices otherwise.
    static SimplePolygon validate(std::vector<Point> vertices);

    std::size_t size() const { return v_.size(); }
    const Point& vertex(std::size_t i) const { return v_[i]; }
    const Point& vertex_cyc(long i) const {
        long n = static_cast<long>(v_.size());
        return v_[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    const std::vector<Point>& vertices() const { return v_; }

    Segment edge(std::size_t i) const {
        return Segment(vertex_cyc(static_cast<long>(i) - 1), v_[i]);
    }

    /// axis-aligned bounding box as (min corner, max corner)
    std::pair<Point, Point> bounding_box() const;

    /// Rational lower bound on the shortest edge's Euclidean length
    /// (the L-infinity length of the shortest edge). Used to scale
    /// verified-epsilon searches.
    Rat shortest_edge_linf() const;

    /// average of the vertices
    Point vertex_centroid() const;

private:
    explicit SimplePolygon(std::vector<Point> v) : v_(std::move(v)) {}
    std::vector<Point> v_;
};

/// A rational direction not parallel to any line through two distinct
/// vertices; deterministically the first valid (1, k), k = 1, 2, ...
Vec generic_direction(const SimplePolygon& P);

/// min(|i-j|, n-|i-j|)
std::size_t cyclic_edge_distance(const SimplePolygon& P, std::size_t i, std::size_t j);

// One of the two boundary arcs between vertex `start` and vertex `end`.
// `forward` means increasing vertex indices.
struct BoundaryArc {
    std::size_t start = 0, end = 0;
    bool forward = true;
    std::size_t edge_count = 0;
    /// vertex indices from start to end inclusive, in arc order
    std::vector<std::size_t> vertex_indices(const SimplePolygon& P) const;
};

/// The arc whose edge count equals cyclic_edge_distance(P, i, j); ties are
/// broken toward increasing indices.
BoundaryArc shorter_arc(const SimplePolygon& P, std::size_t i, std::size_t j);

// Rational stand-ins for the unit-normal sums at vertex i: nonzero vectors
// with p_i + eps*inward interior and p_i + eps*outward exterior for a
// verified eps > 0.
struct WedgeDirections {
    std::size_t vertex = 0;
    Vec inward, outward;
};

WedgeDirections wedge_directions(const SimplePolygon& P, std::size_t i);

}  // namespace polylink
