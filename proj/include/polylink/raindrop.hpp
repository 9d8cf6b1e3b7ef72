/* Apache License, Version 2.0 */
#pragma once

#include <cstdint>
#include <optional>

#include "polylink/polygon.hpp"

namespace polylink {

struct Feature {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    std::size_t index = 0;
};

inline bool operator==(const Feature& a, const Feature& b) {
    return a.kind == b.kind && a.index == b.index;
}

struct Location {
    enum class Kind { Interior, Exterior, Boundary };
    Kind kind = Kind::Exterior;
    /// set iff kind == Boundary; lowest-index containing feature, vertices
    /// preferred over edges
    std::optional<Feature> feature;

    bool is_interior() const { return kind == Kind::Interior; }
    bool is_exterior() const { return kind == Kind::Exterior; }
    bool on_boundary() const { return kind == Kind::Boundary; }
};

inline bool operator==(const Location& a, const Location& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Location::Kind::Boundary) return true;
    return a.feature == b.feature;
}
inline bool operator!=(const Location& a, const Location& b) { return !(a == b); }

// Polygon plus a generic "up" direction v; the raindrop ray from p is
// {p - t*v : t >= 0}. v is never parallel to a line through two vertices,
// so a raindrop ray meets at most one vertex.
class RaindropContext {
public:
    explicit RaindropContext(SimplePolygon P);
    /// Caller-supplied v must itself be generic for P.
    RaindropContext(SimplePolygon P, Vec v);

    const SimplePolygon& polygon() const { return polygon_; }
    const Vec& v() const { return v_; }

private:
    SimplePolygon polygon_;
    Vec v_;
};

/// Number of edges met by the closed downward ray from p. Requires p in S0:
/// off the polygon and with a vertex-free ray; throws NotInS0 otherwise.
int crossing_count(const RaindropContext& ctx, const Point& p);

/// Total classification: boundary detection plus the parity function,
/// extended over vertex events by the side rule (a vertex on the ray counts
/// once when its edges straddle the vertical line through p, zero otherwise).
Location classify(const RaindropContext& ctx, const Point& p);

/// Independent cross-check: parity along a seeded vertex-avoiding ray.
Location classify_by_random_ray(const SimplePolygon& P, const Point& p, std::uint64_t seed);

/// Boundary test without any context (used by both classifiers).
std::optional<Feature> boundary_feature(const SimplePolygon& P, const Point& p);

/// wedge_directions against an existing context (saves re-deriving v)
WedgeDirections wedge_directions(const RaindropContext& ctx, std::size_t i);

}  // namespace polylink
