/* Apache License, Version 2.0 */
#include "polylink/raindrop.hpp"

#include <vector>

#include "polylink/errors.hpp"
#include "polylink/rng.hpp"

namespace polylink {

namespace {

bool is_generic_for(const SimplePolygon& P, const Vec& v) {
    if (v.is_zero()) return false;
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cross(v, P.vertex(j) - P.vertex(i)).is_zero()) return false;
    return true;
}

}  // namespace

RaindropContext::RaindropContext(SimplePolygon P)
    : polygon_(std::move(P)), v_(generic_direction(polygon_)) {}

RaindropContext::RaindropContext(SimplePolygon P, Vec v)
    : polygon_(std::move(P)), v_(std::move(v)) {
    require(is_generic_for(polygon_, v_), "RaindropContext: direction is not generic");
}

std::optional<Feature> boundary_feature(const SimplePolygon& P, const Point& p) {
    for (std::size_t i = 0; i < P.size(); ++i)
        if (p == P.vertex(i)) return Feature{Feature::Kind::Vertex, i};
    for (std::size_t i = 0; i < P.size(); ++i)
        if (point_on_segment(p, P.edge(i))) return Feature{Feature::Kind::Edge, i};
    return std::nullopt;
}

namespace {

// Vertex indices met by the open downward ray {p - t*v : t > 0}.
std::vector<std::size_t> ray_vertices(const RaindropContext& ctx, const Point& p) {
    const SimplePolygon& P = ctx.polygon();
    const Vec& v = ctx.v();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.size(); ++i) {
        Vec d = P.vertex(i) - p;
        if (!cross(v, d).is_zero()) continue;
        // q = p - t*v with t = -dot(d, v)/|v|^2; on the ray iff t > 0
        if ((-dot(d, v)).sign() > 0) out.push_back(i);
    }
    return out;
}

int count_crossings(const RaindropContext& ctx, const Point& p,
                    const std::vector<std::size_t>& on_ray) {
    const SimplePolygon& P = ctx.polygon();
    const std::size_t n = P.size();
    const Vec down = -ctx.v();

    std::vector<bool> vertex_on_ray(n, false);
    for (std::size_t i : on_ray) vertex_on_ray[i] = true;

    int count = 0;
    // vertex events: the two incident edges against the vertical line L = p + Rv
    for (std::size_t i : on_ray) {
        const Point& prev = P.vertex_cyc(static_cast<long>(i) - 1);
        const Point& next = P.vertex_cyc(static_cast<long>(i) + 1);
        int s1 = cross(ctx.v(), prev - p).sign();
        int s2 = cross(ctx.v(), next - p).sign();
        // genericity: neither neighbor can be on L as well
        if (s1 * s2 < 0) ++count;  // incident edges straddle L: counts once
    }
    // plain edge crossings away from ray vertices
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t tail = (i + n - 1) % n;
        if (vertex_on_ray[tail] || vertex_on_ray[i]) continue;
        if (ray_segment_hit(p, down, P.edge(i))) ++count;
    }
    return count;
}

}  // namespace

int crossing_count(const RaindropContext& ctx, const Point& p) {
    if (boundary_feature(ctx.polygon(), p))
        throw NotInS0("crossing_count: point lies on the polygon");
    std::vector<std::size_t> on_ray = ray_vertices(ctx, p);
    if (!on_ray.empty())
        throw NotInS0("crossing_count: raindrop ray meets a vertex");
    return count_crossings(ctx, p, on_ray);
}

Location classify(const RaindropContext& ctx, const Point& p) {
    if (auto f = boundary_feature(ctx.polygon(), p))
        return Location{Location::Kind::Boundary, f};
    int r = count_crossings(ctx, p, ray_vertices(ctx, p));
    return Location{r % 2 == 1 ? Location::Kind::Interior : Location::Kind::Exterior,
                    std::nullopt};
}

Location classify_by_random_ray(const SimplePolygon& P, const Point& p, std::uint64_t seed) {
    if (auto f = boundary_feature(P, p)) return Location{Location::Kind::Boundary, f};

    SplitMix64 rng(seed);
    const std::size_t n = P.size();
    Vec dir{Rat(0), Rat(0)};
    for (long span = 8;; span *= 2) {
        Vec cand{Rat(rng.range(-span, span)), Rat(rng.range(-span, span))};
        if (cand.is_zero()) continue;
        bool hits_vertex = false;
        for (std::size_t i = 0; i < n && !hits_vertex; ++i) {
            Vec d = P.vertex(i) - p;
            if (cross(cand, d).is_zero() && dot(cand, d).sign() > 0) hits_vertex = true;
        }
        if (!hits_vertex) {
            dir = cand;
            break;
        }
    }

    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (ray_segment_hit(p, dir, P.edge(i))) ++count;
    return Location{count % 2 == 1 ? Location::Kind::Interior : Location::Kind::Exterior,
                    std::nullopt};
}

// --- wedge directions (declared in polygon.hpp) ---------------------------

namespace {

// The sample must be reached from the vertex without re-entering P, so a
// large epsilon cannot jump across a slot into another part of the polygon.
bool local_sample(const SimplePolygon& P, const Point& vertex, const Point& sample) {
    if (vertex == sample) return false;
    Segment probe(vertex, sample);
    for (std::size_t e = 0; e < P.size(); ++e) {
        SegRelation rel = segment_relation(probe, P.edge(e));
        switch (rel.kind) {
            case SegKind::Disjoint:
                break;
            case SegKind::ProperCross:
            case SegKind::Overlap:
                return false;
            case SegKind::Touch:
                if (*rel.point != vertex) return false;
                break;
        }
    }
    return true;
}

}  // namespace

WedgeDirections wedge_directions(const RaindropContext& ctx, std::size_t i) {
    const SimplePolygon& P = ctx.polygon();
    require(i < P.size(), "wedge_directions: index out of range");
    const Point& prev = P.vertex_cyc(static_cast<long>(i) - 1);
    const Point& cur = P.vertex(i);
    const Point& next = P.vertex_cyc(static_cast<long>(i) + 1);

    Vec d = (prev - cur) + (next - cur);
    if (orient(prev, cur, next) == 0) {
        // straight vertex: the incident edges are collinear, push normal to them
        d = (next - prev).perp();
    }

    Rat eps = P.shortest_edge_linf();
    for (int iter = 0; iter < 256; ++iter) {
        Point plus_pt = cur + eps * d;
        Point minus_pt = cur - eps * d;
        if (local_sample(P, cur, plus_pt) && local_sample(P, cur, minus_pt)) {
            Location plus = classify(ctx, plus_pt);
            Location minus = classify(ctx, minus_pt);
            if (plus.is_interior() && minus.is_exterior())
                return WedgeDirections{i, d, -d};
            if (plus.is_exterior() && minus.is_interior())
                return WedgeDirections{i, -d, d};
        }
        eps /= Rat(2);
    }
    throw HaltingCapExceeded("wedge_directions: halving cap exceeded");
}

WedgeDirections wedge_directions(const SimplePolygon& P, std::size_t i) {
    return wedge_directions(RaindropContext(P), i);
}

}  // namespace polylink
