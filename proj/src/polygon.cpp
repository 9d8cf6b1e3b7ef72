/* Apache License, Version 2.0 */
#include "polylink/polygon.hpp"

#include <string>

#include "polylink/errors.hpp"

namespace polylink {

SimplePolygon SimplePolygon::validate(std::vector<Point> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3)
        throw ValidationError(ValidationFault::TooFewVertices, n, n,
                              "polygon needs at least 3 vertices, got " + std::to_string(n));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (vertices[i] == vertices[j])
                throw ValidationError(ValidationFault::DuplicateVertex, i, j,
                                      "vertices " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide");

    SimplePolygon P(std::move(vertices));
    for (std::size_t i = 0; i < n; ++i) {
        Segment ei = P.edge(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            Segment ej = P.edge(j);
            SegRelation rel = segment_relation(ei, ej);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            std::string tag = "edges " + std::to_string(i) + " and " + std::to_string(j);
            if (adjacent) {
                // must touch exactly at the shared vertex
                if (rel.kind == SegKind::Overlap)
                    throw ValidationError(ValidationFault::CollinearOverlap, i, j,
                                          tag + " overlap along a subsegment");
                // with distinct vertices, adjacent edges always share their
                // common endpoint, so Touch is the only other possibility
            } else {
                if (rel.kind == SegKind::Overlap)
                    throw ValidationError(ValidationFault::CollinearOverlap, i, j,
                                          tag + " overlap along a subsegment");
                if (rel.kind != SegKind::Disjoint)
                    throw ValidationError(ValidationFault::EdgeCrossing, i, j,
                                          tag + " intersect");
            }
        }
    }
    return P;
}

std::pair<Point, Point> SimplePolygon::bounding_box() const {
    Point lo = v_[0], hi = v_[0];
    for (const Point& p : v_) {
        lo.x = min(lo.x, p.x);
        lo.y = min(lo.y, p.y);
        hi.x = max(hi.x, p.x);
        hi.y = max(hi.y, p.y);
    }
    return {lo, hi};
}

Rat SimplePolygon::shortest_edge_linf() const {
    Rat best;
    for (std::size_t i = 0; i < size(); ++i) {
        Vec d = edge(i).dir();
        Rat linf = max(d.dx.abs(), d.dy.abs());
        if (i == 0 || linf < best) best = linf;
    }
    return best;
}

Point SimplePolygon::vertex_centroid() const {
    Rat sx(0), sy(0);
    for (const Point& p : v_) {
        sx += p.x;
        sy += p.y;
    }
    Rat n(static_cast<long>(v_.size()));
    return {sx / n, sy / n};
}

Vec generic_direction(const SimplePolygon& P) {
    const std::size_t n = P.size();
    // (1, k) has a slope distinct from (1, k') for k != k', so at most
    // C(n,2) candidates are forbidden and this terminates.
    for (long k = 1;; ++k) {
        Vec v{Rat(1), Rat(k)};
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (cross(v, P.vertex(j) - P.vertex(i)).is_zero()) ok = false;
        if (ok) return v;
    }
}

std::size_t cyclic_edge_distance(const SimplePolygon& P, std::size_t i, std::size_t j) {
    const std::size_t n = P.size();
    require(i < n && j < n, "cyclic_edge_distance: index out of range");
    std::size_t d = i < j ? j - i : i - j;
    return std::min(d, n - d);
}

std::vector<std::size_t> BoundaryArc::vertex_indices(const SimplePolygon& P) const {
    const std::size_t n = P.size();
    std::vector<std::size_t> out;
    out.reserve(edge_count + 1);
    std::size_t cur = start;
    out.push_back(cur);
    for (std::size_t k = 0; k < edge_count; ++k) {
        cur = forward ? (cur + 1) % n : (cur + n - 1) % n;
        out.push_back(cur);
    }
    return out;
}

BoundaryArc shorter_arc(const SimplePolygon& P, std::size_t i, std::size_t j) {
    const std::size_t n = P.size();
    require(i < n && j < n, "shorter_arc: index out of range");
    std::size_t fwd = (j + n - i) % n;  // edges walking i -> j with increasing indices
    std::size_t bwd = n - fwd;
    BoundaryArc arc;
    arc.start = i;
    arc.end = j;
    if (i == j) {
        arc.forward = true;
        arc.edge_count = 0;
    } else if (fwd <= bwd) {
        arc.forward = true;
        arc.edge_count = fwd;
    } else {
        arc.forward = false;
        arc.edge_count = bwd;
    }
    return arc;
}

}  // namespace polylink
