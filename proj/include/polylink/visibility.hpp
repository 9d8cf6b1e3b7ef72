/* Apache License, Version 2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polylink/raindrop.hpp"

namespace polylink {

/// true iff the open segment ]s.a, s.b[ meets no point of P
bool segment_avoids(const SimplePolygon& P, const Segment& s);

/// p sees vertex i: the open segment between them avoids P. Pre: p not on P.
bool sees_vertex(const SimplePolygon& P, const Point& p, std::size_t i);

struct FirstHit {
    Point point;
    Feature feature;
    Rat lambda;
};

/// First point of P along the ray origin + t*dir (t >= 0), with its carrying
/// feature. Pre: origin not on P, dir nonzero.
std::optional<FirstHit> first_hit(const SimplePolygon& P, const Point& origin, const Vec& dir);

struct SeenEdge {
    std::size_t edge = 0;
    /// witness in the edge's relative interior with [p, witness] ∩ P = {witness}
    Point witness;
};

/// An edge seen by p, found along a seeded deterministic vertex-avoiding ray.
/// Pre: p not on P. Always succeeds.
SeenEdge seen_edge(const SimplePolygon& P, const Point& p, std::uint64_t seed = 0);

/// Given a seen point b in the relative interior of an edge with endpoint
/// bprime, returns a vertex of P visible from a inside the closed triangle
/// [a, bprime, b] and off [a, b]. Discrete sweep over candidate vertices.
std::size_t visible_vertex_in_triangle(const SimplePolygon& P, const Point& a, const Point& b,
                                       const Point& bprime);

struct VisibleVertexPair {
    std::size_t first = 0, second = 0;
    bool nonadjacent = false;
};

/// Two distinct vertices seen by a. Pre: a not on P.
VisibleVertexPair two_visible_vertices(const SimplePolygon& P, const Point& a,
                                       std::uint64_t seed = 0);

/// Two non-adjacent vertices seen by a. Pre: n >= 4, a not on P, and every
/// ray from a meets P (free_direction(P, a) must be empty).
VisibleVertexPair two_nonadjacent_visible(const SimplePolygon& P, const Point& a);

struct FreeDirection {
    Point origin;
    Vec dir;  ///< the ray origin + t*dir misses P entirely
};

// Maximal inter-event arc of directions whose rays from the query point all
// miss P, with a verified rational witness direction inside it.
struct FreeArc {
    Vec d1, d2;
    Vec witness;
};

/// All free inter-event arcs around a, in circular order. Rays from a in
/// directions strictly between consecutive vertex directions either all hit
/// or all miss P, so one witness per arc decides it. Pre: a not on P.
std::vector<FreeArc> free_arcs(const SimplePolygon& P, const Point& a);

/// A ray from a missing P, if one exists; exact circular sweep over the
/// direction arcs cut by the vertex directions. Pre: a not on P.
std::optional<FreeDirection> free_direction(const SimplePolygon& P, const Point& a);

/// All vertex indices visible from a (brute force). Pre: a not on P.
std::vector<std::size_t> visible_vertices(const SimplePolygon& P, const Point& a);

}  // namespace polylink
