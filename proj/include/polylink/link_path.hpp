/* Apache License, Version 2.0 */
#pragma once

#include <cstddef>
#include <vector>

#include "polylink/visibility.hpp"

namespace polylink {

// A polygonal path; the certificate object whose segment count witnesses an
// upper bound on the link distance.
struct Polyline {
    std::vector<Point> points;

    Polyline() = default;
    explicit Polyline(std::vector<Point> pts);

    std::size_t links() const { return points.empty() ? 0 : points.size() - 1; }
    Segment link(std::size_t i) const { return Segment(points[i], points[i + 1]); }
};

enum class PathCase {
    Direct,
    CommonVertex,
    BoundaryArc,
    FarRays,
    Mixed,
    Naive,
};

const char* to_string(PathCase c);

struct PathCertificate {
    Polyline path;
    Location::Kind component = Location::Kind::Interior;
    std::size_t bound = 0;
    PathCase tag = PathCase::Direct;
};

/// Replace the boundary vertices of the walk a, q_1, ..., q_k, b by points
/// pushed strictly into `component` with a verified halved epsilon; the
/// result has exactly k+1 links, all avoiding P. Pre: a and b lie in
/// `component`, a sees q_1 and b sees q_k via its closure, and consecutive
/// q's are adjacent on P.
Polyline push_off_boundary(const SimplePolygon& P, const Point& a,
                           const std::vector<std::size_t>& walk, const Point& b,
                           Location::Kind component);

/// Simple construction: seen edges, shorter boundary arc between
/// them, pushed off the boundary. Certificate bound floor(n/2) + 3.
PathCertificate connect_naive(const SimplePolygon& P, const Point& a, const Point& b);

/// Tight construction: certificate bound floor(n/2) for the interior and
/// ceil(n/2) for the exterior.
PathCertificate connect(const SimplePolygon& P, const Point& a, const Point& b);

/// Direction whose rays from both a and b miss P, if one exists (exact
/// sweep over the merged vertex-direction arcs).
std::optional<Vec> common_free_direction(const SimplePolygon& P, const Point& a, const Point& b);

/// Two-link path a -> a + lambda*dir -> b, doubling lambda until both links
/// clear P. Intended for a common free direction of a and b.
std::optional<Polyline> far_waypoint_path(const SimplePolygon& P, const Point& a, const Point& b,
                                          const Vec& dir);

struct MinVisiblePair {
    std::size_t a_vertex = 0, b_vertex = 0;
    std::size_t distance = 0;
};

/// Pair in A x B minimizing cyclic edge distance; ties broken by smallest
/// index pair.
MinVisiblePair min_visible_pair(const SimplePolygon& P, const std::vector<std::size_t>& A,
                                const std::vector<std::size_t>& B);

/// Full certificate check: endpoints, link avoidance, component membership
/// of every internal point and link midpoint, links <= bound. Throws
/// VerificationFailed.
void verify_certificate(const SimplePolygon& P, const PathCertificate& cert, const Point& a,
                        const Point& b);

}  // namespace polylink
