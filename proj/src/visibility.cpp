/* Apache License, Version 2.0 */
#include "polylink/visibility.hpp"

#include <algorithm>

#include "polylink/angular.hpp"
#include "polylink/errors.hpp"
#include "polylink/rng.hpp"

namespace polylink {

bool segment_avoids(const SimplePolygon& P, const Segment& s) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        SegRelation rel = segment_relation(s, P.edge(i));
        switch (rel.kind) {
            case SegKind::Disjoint:
                break;
            case SegKind::ProperCross:
            case SegKind::Overlap:
                return false;
            case SegKind::Touch:
                if (*rel.point != s.a && *rel.point != s.b) return false;
                break;
        }
    }
    return true;
}

bool sees_vertex(const SimplePolygon& P, const Point& p, std::size_t i) {
    require(i < P.size(), "sees_vertex: index out of range");
    return segment_avoids(P, Segment(p, P.vertex(i)));
}

std::optional<FirstHit> first_hit(const SimplePolygon& P, const Point& origin, const Vec& dir) {
    require(!dir.is_zero(), "first_hit: zero direction");
    if (boundary_feature(P, origin))
        throw PreconditionViolated("first_hit: origin lies on the polygon");

    std::optional<RayHit> best;
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto h = ray_segment_hit(origin, dir, P.edge(i));
        if (h && (!best || h->lambda < best->lambda)) best = h;
    }
    if (!best) return std::nullopt;

    FirstHit out{best->point, Feature{Feature::Kind::Edge, 0}, best->lambda};
    for (std::size_t i = 0; i < P.size(); ++i)
        if (P.vertex(i) == best->point) {
            out.feature = Feature{Feature::Kind::Vertex, i};
            return out;
        }
    for (std::size_t i = 0; i < P.size(); ++i)
        if (point_on_segment(best->point, P.edge(i))) {
            out.feature = Feature{Feature::Kind::Edge, i};
            return out;
        }
    throw HaltingCapExceeded("first_hit: hit point not on any feature");
}

namespace {

bool forward_ray_meets_vertex(const SimplePolygon& P, const Point& p, const Vec& dir) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        Vec d = P.vertex(i) - p;
        if (cross(dir, d).is_zero() && dot(dir, d).sign() > 0) return true;
    }
    return false;
}

}  // namespace

SeenEdge seen_edge(const SimplePolygon& P, const Point& p, std::uint64_t seed) {
    if (boundary_feature(P, p)) throw PreconditionViolated("seen_edge: point lies on the polygon");
    const std::size_t n = P.size();
    SplitMix64 rng(seed);
    std::size_t rot = rng.below(n);

    auto try_target = [&](const Point& target) -> std::optional<SeenEdge> {
        if (target == p) return std::nullopt;
        Vec dir = target - p;
        if (forward_ray_meets_vertex(P, p, dir)) return std::nullopt;
        auto h = first_hit(P, p, dir);
        if (!h) return std::nullopt;
        // no vertex on the ray, so the first hit is in an edge's relint
        return SeenEdge{h->feature.index, h->point};
    };

    if (auto se = try_target(P.vertex_centroid())) return *se;
    // Edge targets at parameters 1/2, 1/3, 2/3, 1/4, 3/4, ...: only finitely
    // many directions from p meet a vertex, so some target works.
    for (long q = 2; q < 260; ++q) {
        for (long r = 1; r < q; ++r) {
            Rat t(r, q);
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t e = (k + rot) % n;
                if (auto se = try_target(P.edge(e).at(t))) return *se;
            }
        }
    }
    throw HaltingCapExceeded("seen_edge: target enumeration exhausted");
}

std::size_t visible_vertex_in_triangle(const SimplePolygon& P, const Point& a, const Point& b,
                                       const Point& bprime) {
    const std::size_t n = P.size();
    if (boundary_feature(P, a))
        throw PreconditionViolated("visible_vertex_in_triangle: a lies on the polygon");
    if (b == bprime) throw PreconditionViolated("visible_vertex_in_triangle: b equals bprime");

    // bprime must be a vertex and [bprime, b] must run along an incident edge
    std::optional<std::size_t> bprime_index;
    for (std::size_t i = 0; i < n; ++i)
        if (P.vertex(i) == bprime) {
            bprime_index = i;
            break;
        }
    bool on_incident_edge = false;
    if (bprime_index) {
        for (std::size_t e : {*bprime_index, (*bprime_index + 1) % n})
            if (point_on_segment(b, P.edge(e))) on_incident_edge = true;
    }
    if (!on_incident_edge)
        throw PreconditionViolated("visible_vertex_in_triangle: b not on an edge at bprime");

    if (!segment_avoids(P, Segment(a, b)))
        throw PreconditionViolated("visible_vertex_in_triangle: a does not see b");

    if (segment_avoids(P, Segment(a, bprime))) return *bprime_index;

    for (std::size_t i = 0; i < n; ++i)
        if (P.vertex(i) == b)
            throw PreconditionViolated(
                "visible_vertex_in_triangle: b must be in an edge's relative interior");

    // a, b, bprime are affinely independent here: a collinear configuration
    // would put a point of P inside ]a,b[ or ]a,bprime[ = ]a,b[ extended.
    int s = orient(a, b, bprime);
    if (s == 0) throw HaltingCapExceeded("visible_vertex_in_triangle: degenerate triangle");

    Segment base(b, bprime);
    Vec base_dir = base.dir();
    Rat base_len2 = norm2(base_dir);

    std::optional<std::size_t> best;
    Rat best_t, best_d2;
    for (std::size_t q = 0; q < n; ++q) {
        const Point& v = P.vertex(q);
        if (orient(a, b, v) * s < 0 || orient(b, bprime, v) * s < 0 ||
            orient(bprime, a, v) * s < 0)
            continue;  // outside the closed triangle
        auto hit = ray_segment_hit(a, v - a, base);
        if (!hit) throw HaltingCapExceeded("visible_vertex_in_triangle: sweep ray missed base");
        Rat t = dot(hit->point - b, base_dir) / base_len2;
        Rat d2 = norm2(v - a);
        if (!best || t < best_t || (t == best_t && d2 < best_d2)) {
            best = q;
            best_t = t;
            best_d2 = d2;
        }
    }
    if (!best) throw HaltingCapExceeded("visible_vertex_in_triangle: no candidate vertex");
    if (!sees_vertex(P, a, *best))
        throw HaltingCapExceeded("visible_vertex_in_triangle: swept vertex not visible");
    return *best;
}

VisibleVertexPair two_visible_vertices(const SimplePolygon& P, const Point& a,
                                       std::uint64_t seed) {
    SeenEdge se = seen_edge(P, a, seed);
    const std::size_t n = P.size();
    std::size_t tail = (se.edge + n - 1) % n;
    std::size_t head = se.edge;
    std::size_t c1 = visible_vertex_in_triangle(P, a, se.witness, P.vertex(tail));
    std::size_t c2 = visible_vertex_in_triangle(P, a, se.witness, P.vertex(head));
    if (c1 == c2) throw HaltingCapExceeded("two_visible_vertices: identical vertices");
    return VisibleVertexPair{c1, c2, cyclic_edge_distance(P, c1, c2) >= 2};
}

VisibleVertexPair two_nonadjacent_visible(const SimplePolygon& P, const Point& a) {
    const std::size_t n = P.size();
    require(n >= 4, "two_nonadjacent_visible: n >= 4 required");
    if (free_direction(P, a))
        throw PreconditionViolated("two_nonadjacent_visible: a free direction exists");

    std::size_t c = two_visible_vertices(P, a).first;
    auto h = first_hit(P, a, a - P.vertex(c));
    if (!h) throw HaltingCapExceeded("two_nonadjacent_visible: opposite ray missed P");

    auto pair_of = [&](std::size_t x, std::size_t y) {
        return VisibleVertexPair{x, y, true};
    };

    if (h->feature.kind == Feature::Kind::Vertex) {
        // [c, b] passes through a, so c and b cannot be joined by an edge
        return pair_of(c, h->feature.index);
    }

    std::size_t edge = h->feature.index;
    std::size_t bprime = (edge + n - 1) % n;
    std::size_t bsecond = edge;
    std::size_t c1 = visible_vertex_in_triangle(P, a, h->point, P.vertex(bprime));
    std::size_t c2 = visible_vertex_in_triangle(P, a, h->point, P.vertex(bsecond));
    if (cyclic_edge_distance(P, c1, c2) >= 2) return pair_of(c1, c2);
    if (cyclic_edge_distance(P, c, c1) >= 2) return pair_of(c, c1);
    if (cyclic_edge_distance(P, c, c2) >= 2) return pair_of(c, c2);

    // robustness fallback over the full visible set
    std::vector<std::size_t> vis = visible_vertices(P, a);
    for (std::size_t i = 0; i < vis.size(); ++i)
        for (std::size_t j = i + 1; j < vis.size(); ++j)
            if (cyclic_edge_distance(P, vis[i], vis[j]) >= 2) return pair_of(vis[i], vis[j]);
    throw HaltingCapExceeded("two_nonadjacent_visible: no nonadjacent visible pair");
}

std::vector<FreeArc> free_arcs(const SimplePolygon& P, const Point& a) {
    if (boundary_feature(P, a))
        throw PreconditionViolated("free_arcs: point lies on the polygon");
    const std::size_t n = P.size();

    std::vector<Vec> events;
    events.reserve(n);
    for (std::size_t i = 0; i < n; ++i) events.push_back(P.vertex(i) - a);
    std::vector<Vec> dirs = sorted_distinct_directions(std::move(events));

    auto ray_misses = [&](const Vec& d) {
        for (std::size_t i = 0; i < n; ++i)
            if (ray_segment_hit(a, d, P.edge(i))) return false;
        return true;
    };

    std::vector<FreeArc> out;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Vec& d1 = dirs[k];
        const Vec& d2 = dirs[(k + 1) % dirs.size()];
        Vec w = same_direction(d1, d2) ? d1.perp() : rotate_into_arc(d1, d2);
        if (ray_misses(w)) out.push_back(FreeArc{d1, d2, w});
    }
    return out;
}

std::optional<FreeDirection> free_direction(const SimplePolygon& P, const Point& a) {
    std::vector<FreeArc> arcs = free_arcs(P, a);
    if (arcs.empty()) return std::nullopt;
    return FreeDirection{a, arcs.front().witness};
}

std::vector<std::size_t> visible_vertices(const SimplePolygon& P, const Point& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (sees_vertex(P, a, i)) out.push_back(i);
    return out;
}

}  // namespace polylink
