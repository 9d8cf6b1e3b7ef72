/* Apache License, Version 2.0 */
#include "polylink/link_path.hpp"

#include <algorithm>
#include <optional>

#include "polylink/angular.hpp"
#include "polylink/errors.hpp"

namespace polylink {

Polyline::Polyline(std::vector<Point> pts) : points(std::move(pts)) {
    require(points.size() >= 2, "Polyline: need at least 2 points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        require(points[i] != points[i + 1], "Polyline: consecutive points must differ");
}

const char* to_string(PathCase c) {
    switch (c) {
        case PathCase::Direct: return "direct";
        case PathCase::CommonVertex: return "common-vertex";
        case PathCase::BoundaryArc: return "boundary-arc";
        case PathCase::FarRays: return "far-rays";
        case PathCase::Mixed: return "mixed";
        case PathCase::Naive: return "naive";
    }
    return "?";
}

namespace {

// A walk waypoint to be realized strictly inside the target component.
// Vertex waypoints move along the wedge direction; EdgePoint waypoints are
// boundary points pulled along a direction already known to enter the
// component (toward the endpoint that sees them).
struct Waypoint {
    enum class Kind { Fixed, Vertex, EdgePoint };
    Kind kind = Kind::Fixed;
    Point point{Rat(0), Rat(0)};
    std::size_t vertex = 0;
    Vec pull{Rat(0), Rat(0)};
};

Waypoint fixed_wp(const Point& p) {
    Waypoint w;
    w.kind = Waypoint::Kind::Fixed;
    w.point = p;
    return w;
}

Waypoint vertex_wp(std::size_t v) {
    Waypoint w;
    w.kind = Waypoint::Kind::Vertex;
    w.vertex = v;
    return w;
}

Waypoint edge_wp(const Point& p, const Vec& pull) {
    Waypoint w;
    w.kind = Waypoint::Kind::EdgePoint;
    w.point = p;
    w.pull = pull;
    return w;
}

Polyline realize_walk(const RaindropContext& ctx, const std::vector<Waypoint>& wps,
                      Location::Kind component) {
    const SimplePolygon& P = ctx.polygon();
    std::vector<Vec> push(wps.size(), Vec{Rat(0), Rat(0)});
    for (std::size_t i = 0; i < wps.size(); ++i) {
        if (wps[i].kind == Waypoint::Kind::Vertex) {
            WedgeDirections wd = wedge_directions(ctx, wps[i].vertex);
            push[i] = component == Location::Kind::Interior ? wd.inward : wd.outward;
        } else if (wps[i].kind == Waypoint::Kind::EdgePoint) {
            push[i] = wps[i].pull;
        }
    }

    Rat eps = min(P.shortest_edge_linf(), Rat(1, 2));
    for (int iter = 0; iter < 256; ++iter, eps /= Rat(2)) {
        std::vector<Point> pts;
        pts.reserve(wps.size());
        for (std::size_t i = 0; i < wps.size(); ++i) {
            switch (wps[i].kind) {
                case Waypoint::Kind::Fixed:
                    pts.push_back(wps[i].point);
                    break;
                case Waypoint::Kind::Vertex:
                    pts.push_back(P.vertex(wps[i].vertex) + eps * push[i]);
                    break;
                case Waypoint::Kind::EdgePoint:
                    pts.push_back(wps[i].point + eps * push[i]);
                    break;
            }
        }

        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1]) ok = false;
        for (std::size_t i = 0; ok && i < pts.size(); ++i) {
            if (wps[i].kind == Waypoint::Kind::Fixed) continue;
            if (classify(ctx, pts[i]).kind != component) ok = false;
        }
        for (std::size_t i = 0; ok && i + 1 < pts.size(); ++i) {
            Segment link(pts[i], pts[i + 1]);
            if (!segment_avoids(P, link) ||
                classify(ctx, link.midpoint()).kind != component)
                ok = false;
        }
        if (ok) return Polyline(std::move(pts));
    }
    throw HaltingCapExceeded("realize_walk: halving cap exceeded");
}

Location::Kind checked_component(const RaindropContext& ctx, const Point& a, const Point& b) {
    Location la = classify(ctx, a);
    Location lb = classify(ctx, b);
    if (la.on_boundary() || lb.on_boundary())
        throw OnBoundaryInput("endpoint lies on the polygon");
    if (la.kind != lb.kind) throw ComponentMismatch("endpoints lie in different components");
    return la.kind;
}

void verify_with_ctx(const RaindropContext& ctx, const PathCertificate& cert, const Point& a,
                     const Point& b) {
    const SimplePolygon& P = ctx.polygon();
    if (cert.path.points.size() < 2) throw VerificationFailed("certificate: path too short");
    if (cert.path.points.front() != a || cert.path.points.back() != b)
        throw VerificationFailed("certificate: endpoints do not match");
    if (cert.path.links() > cert.bound) throw VerificationFailed("certificate: exceeds bound");
    for (std::size_t i = 0; i < cert.path.links(); ++i) {
        Segment link = cert.path.link(i);
        if (!segment_avoids(P, link)) throw VerificationFailed("certificate: link meets P");
        if (classify(ctx, link.midpoint()).kind != cert.component)
            throw VerificationFailed("certificate: link midpoint in wrong component");
    }
    for (std::size_t i = 1; i + 1 < cert.path.points.size(); ++i)
        if (classify(ctx, cert.path.points[i]).kind != cert.component)
            throw VerificationFailed("certificate: bend point in wrong component");
}

// --- exterior machinery ----------------------------------------------------

std::optional<Point> ray_ray_meet(const Point& a, const Vec& u, const Point& b, const Vec& w) {
    Rat den = cross(u, w);
    if (den.is_zero()) return std::nullopt;
    Vec f = b - a;
    Rat s = cross(f, w) / den;
    Rat t = cross(f, u) / den;
    if (s.sign() < 0 || t.sign() < 0) return std::nullopt;
    return a + s * u;
}

bool ray_misses(const SimplePolygon& P, const Point& origin, const Vec& d) {
    for (std::size_t i = 0; i < P.size(); ++i)
        if (ray_segment_hit(origin, d, P.edge(i))) return false;
    return true;
}

}  // namespace

// Freeness is constant on arcs between consecutive merged vertex
// directions, so one witness per merged arc decides both sides at once.
std::optional<Vec> common_free_direction(const SimplePolygon& P, const Point& a, const Point& b) {
    std::vector<Vec> events;
    events.reserve(2 * P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        events.push_back(P.vertex(i) - a);
        events.push_back(P.vertex(i) - b);
    }
    std::vector<Vec> dirs = sorted_distinct_directions(std::move(events));
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Vec& d1 = dirs[k];
        const Vec& d2 = dirs[(k + 1) % dirs.size()];
        Vec w = same_direction(d1, d2) ? d1.perp() : rotate_into_arc(d1, d2);
        if (ray_misses(P, a, w) && ray_misses(P, b, w)) return w;
    }
    return std::nullopt;
}

std::optional<Polyline> far_waypoint_path(const SimplePolygon& P, const Point& a, const Point& b,
                                          const Vec& dir) {
    Rat lambda(1);
    for (int i = 0; i < 160; ++i, lambda *= Rat(2)) {
        Point m = a + lambda * dir;
        if (m == b) continue;
        if (segment_avoids(P, Segment(a, m)) && segment_avoids(P, Segment(m, b)))
            return Polyline({a, m, b});
    }
    return std::nullopt;
}

namespace {

std::optional<Polyline> far_segment_path(const SimplePolygon& P, const Point& a, const Vec& ua,
                                         const Point& b, const Vec& ub) {
    Rat lambda(1);
    for (int i = 0; i < 160; ++i, lambda *= Rat(2)) {
        Point x = a + lambda * ua;
        Point y = b + lambda * ub;
        if (x == y) continue;
        if (segment_avoids(P, Segment(a, x)) && segment_avoids(P, Segment(x, y)) &&
            segment_avoids(P, Segment(y, b)))
            return Polyline({a, x, y, b});
    }
    return std::nullopt;
}

bool antiparallel(const Vec& u, const Vec& w) {
    return cross(u, w).is_zero() && dot(u, w).sign() < 0;
}

// Free directions for a and b whose positive combinations never vanish, so
// the far segment between them eventually clears the (compact) polygon.
std::pair<Vec, Vec> non_antiparallel_free_pair(const SimplePolygon& P, const Point& a,
                                               const Point& b) {
    std::vector<FreeArc> arcs_a = free_arcs(P, a);
    std::vector<FreeArc> arcs_b = free_arcs(P, b);
    if (arcs_a.empty() || arcs_b.empty())
        throw HaltingCapExceeded("non_antiparallel_free_pair: no free arcs");
    for (const FreeArc& fa : arcs_a)
        for (const FreeArc& fb : arcs_b)
            if (!antiparallel(fa.witness, fb.witness)) return {fa.witness, fb.witness};
    // every witness pair antiparallel: rotate inside the first arc
    Vec wa2 = rotate_into_arc(arcs_a.front().witness, arcs_a.front().d2);
    return {wa2, arcs_b.front().witness};
}

// --- the n = 4 exterior cover ----------------------------------------------

// strict half-plane {x : nx*x + ny*y > rhs}
struct HalfPlane {
    Vec normal;
    Rat rhs;
};

Rat hp_eval(const HalfPlane& h, const Point& p) {
    return h.normal.dx * p.x + h.normal.dy * p.y - h.rhs;
}

bool strictly_inside(const std::vector<HalfPlane>& cs, const Point& p) {
    for (const HalfPlane& h : cs)
        if (hp_eval(h, p).sign() <= 0) return false;
    return true;
}

int polygon_orientation(const SimplePolygon& P) {
    Rat s(0);
    for (std::size_t i = 0; i < P.size(); ++i) {
        const Point& p = P.vertex(i);
        const Point& q = P.vertex_cyc(static_cast<long>(i) + 1);
        s += p.x * q.y - q.x * p.y;
    }
    return s.sign();
}

// open half-plane strictly on the exterior side of edge i's line
HalfPlane exterior_side(const SimplePolygon& P, std::size_t edge, int orientation) {
    Segment e = P.edge(edge);
    Vec d = e.dir();
    // interior is left of the directed edge for ccw orientation
    Rat sigma(orientation);
    HalfPlane h;
    h.normal = Vec{sigma * d.dy, sigma * (-d.dx)};
    h.rhs = h.normal.dx * e.a.x + h.normal.dy * e.a.y;
    return h;
}

// A strictly feasible point of an open polyhedron given by at most one
// constraint beyond a pair with independent normals.
std::optional<Point> strict_point(std::vector<HalfPlane> cs) {
    const std::size_t m = cs.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat det = cross(cs[i].normal, cs[j].normal);
            if (det.is_zero()) continue;
            const Vec& ni = cs[i].normal;
            const Vec& nj = cs[j].normal;
            // x0: boundary intersection; e1, e2: dual basis
            Point x0{(cs[i].rhs * nj.dy - cs[j].rhs * ni.dy) / det,
                     (cs[j].rhs * ni.dx - cs[i].rhs * nj.dx) / det};
            Vec e1{nj.dy / det, -nj.dx / det};
            Vec e2{-ni.dy / det, ni.dx / det};
            // remaining constraints as alpha + beta*y1 + gamma*y2 > 0
            Rat y1(1), y2(1);
            bool feasible = true;
            for (std::size_t k = 0; k < m && feasible; ++k) {
                if (k == i || k == j) continue;
                Rat alpha = hp_eval(cs[k], x0);
                Rat beta = dot(cs[k].normal, e1);
                Rat gamma = dot(cs[k].normal, e2);
                if (alpha.sign() > 0) {
                    // shrink toward x0 far enough to keep this constraint
                    Rat denom = beta.abs() + gamma.abs() + Rat(1);
                    Rat t = alpha / (Rat(2) * denom);
                    y1 = min(y1, t);
                    y2 = min(y2, t);
                } else if (beta.sign() > 0) {
                    y2 = min(y2, Rat(1));
                    y1 = max(y1, (alpha.abs() + gamma.abs() + Rat(1)) / beta);
                } else if (gamma.sign() > 0) {
                    y1 = min(y1, Rat(1));
                    y2 = max(y2, (alpha.abs() + beta.abs() + Rat(1)) / gamma);
                } else {
                    feasible = false;
                }
            }
            if (!feasible) continue;
            Point cand = x0 + y1 * e1 + y2 * e2;
            if (strictly_inside(cs, cand)) return cand;
        }
    // all normals pairwise parallel: reduce to an interval on a line
    if (m == 0) return std::nullopt;
    Vec n = cs[0].normal;
    Vec tdir = n.perp();
    // param x = s * n / |n|^2: dot(n_k, x) = s * dot(n_k, n)/|n|^2
    Rat nn = norm2(n);
    std::optional<Rat> lo, hi;
    for (const HalfPlane& h : cs) {
        Rat c = dot(h.normal, n) / nn;  // dot(h.normal, x) = c*s
        if (c.sign() > 0) {
            Rat bnd = h.rhs / c;
            if (!lo || bnd > *lo) lo = bnd;
        } else if (c.sign() < 0) {
            Rat bnd = h.rhs / c;
            if (!hi || bnd < *hi) hi = bnd;
        } else {
            return std::nullopt;
        }
    }
    Rat s;
    if (lo && hi) {
        if (!(*lo < *hi)) return std::nullopt;
        s = (*lo + *hi) / Rat(2);
    } else if (lo) {
        s = *lo + Rat(1);
    } else {
        s = *hi - Rat(1);
    }
    Rat inv = s / nn;
    Point cand{inv * n.dx, inv * n.dy};
    (void)tdir;
    if (strictly_inside(cs, cand)) return cand;
    return std::nullopt;
}

// Nonconvex quadrilateral: exterior = wedge at the reflex vertex plus the
// exterior half-planes of the two hull edges; any two of those convex sets
// meet, which yields a two-link waypoint.
std::optional<Polyline> quad_cover_path(const SimplePolygon& P, const Point& a, const Point& b) {
    const std::size_t n = P.size();
    if (n != 4) return std::nullopt;
    int sigma = polygon_orientation(P);
    std::optional<std::size_t> reflex;
    for (std::size_t i = 0; i < n; ++i) {
        int o = orient(P.vertex_cyc(static_cast<long>(i) - 1), P.vertex(i),
                       P.vertex_cyc(static_cast<long>(i) + 1));
        if (o == -sigma) reflex = i;
    }
    if (!reflex) return std::nullopt;

    std::size_t r = *reflex;
    std::vector<std::vector<HalfPlane>> sets;
    sets.push_back({exterior_side(P, r, sigma), exterior_side(P, (r + 1) % n, sigma)});  // wedge
    sets.push_back({exterior_side(P, (r + 2) % n, sigma)});
    sets.push_back({exterior_side(P, (r + 3) % n, sigma)});

    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!strictly_inside(sets[i], a)) continue;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j || !strictly_inside(sets[j], b)) continue;
            std::vector<HalfPlane> joint = sets[i];
            joint.insert(joint.end(), sets[j].begin(), sets[j].end());
            auto w = strict_point(joint);
            if (!w || *w == a || *w == b) continue;
            if (segment_avoids(P, Segment(a, *w)) && segment_avoids(P, Segment(*w, b)))
                return Polyline({a, *w, b});
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> common_visible_vertex(const SimplePolygon& P, const Point& a,
                                                 const Point& b) {
    for (std::size_t v = 0; v < P.size(); ++v)
        if (sees_vertex(P, a, v) && sees_vertex(P, b, v)) return v;
    return std::nullopt;
}

}  // namespace

Polyline push_off_boundary(const SimplePolygon& P, const Point& a,
                           const std::vector<std::size_t>& walk, const Point& b,
                           Location::Kind component) {
    require(component != Location::Kind::Boundary, "push_off_boundary: component must be a side");
    RaindropContext ctx(P);
    if (classify(ctx, a).kind != component || classify(ctx, b).kind != component)
        throw PreconditionViolated("push_off_boundary: endpoint not in the component");
    if (walk.empty()) {
        if (!segment_avoids(P, Segment(a, b)))
            throw PreconditionViolated("push_off_boundary: a must see b for an empty walk");
        return Polyline({a, b});
    }
    for (std::size_t q : walk) require(q < P.size(), "push_off_boundary: vertex out of range");
    if (!sees_vertex(P, a, walk.front()) || !sees_vertex(P, b, walk.back()))
        throw PreconditionViolated("push_off_boundary: endpoint does not see its walk vertex");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (cyclic_edge_distance(P, walk[i], walk[i + 1]) != 1)
            throw PreconditionViolated("push_off_boundary: walk vertices not adjacent on P");

    std::vector<Waypoint> wps;
    wps.push_back(fixed_wp(a));
    for (std::size_t q : walk) wps.push_back(vertex_wp(q));
    wps.push_back(fixed_wp(b));
    return realize_walk(ctx, wps, component);
}

PathCertificate connect_naive(const SimplePolygon& P, const Point& a, const Point& b) {
    require(a != b, "connect_naive: endpoints must differ");
    RaindropContext ctx(P);
    Location::Kind comp = checked_component(ctx, a, b);
    const std::size_t n = P.size();
    const std::size_t bound = n / 2 + 3;

    SeenEdge sa = seen_edge(P, a, 0);
    SeenEdge sb = seen_edge(P, b, 0);

    std::vector<Waypoint> wps;
    wps.push_back(fixed_wp(a));
    if (sa.edge == sb.edge) {
        wps.push_back(edge_wp(sa.witness, a - sa.witness));
        if (sb.witness != sa.witness) wps.push_back(edge_wp(sb.witness, b - sb.witness));
    } else {
        std::size_t i = sa.edge, j = sb.edge;
        std::size_t m_fwd = (j + n - 1 - i) % n;  // vertices v_i .. v_{j-1}
        std::size_t m_bwd = (i + n - 1 - j) % n;  // vertices v_{i-1} .. v_j
        wps.push_back(edge_wp(sa.witness, a - sa.witness));
        if (m_fwd <= m_bwd)
            for (std::size_t k = 0; k <= m_fwd; ++k) wps.push_back(vertex_wp((i + k) % n));
        else
            for (std::size_t k = 0; k <= m_bwd; ++k)
                wps.push_back(vertex_wp((i + n - 1 - k) % n));
        wps.push_back(edge_wp(sb.witness, b - sb.witness));
    }
    wps.push_back(fixed_wp(b));

    PathCertificate cert{realize_walk(ctx, wps, comp), comp, bound, PathCase::Naive};
    verify_with_ctx(ctx, cert, a, b);
    return cert;
}

PathCertificate connect(const SimplePolygon& P, const Point& a, const Point& b) {
    require(a != b, "connect: endpoints must differ");
    RaindropContext ctx(P);
    Location::Kind comp = checked_component(ctx, a, b);
    const std::size_t n = P.size();
    const std::size_t bound = comp == Location::Kind::Interior ? n / 2 : (n + 1) / 2;

    auto finish = [&](Polyline path, PathCase tag) {
        PathCertificate cert{std::move(path), comp, bound, tag};
        verify_with_ctx(ctx, cert, a, b);
        return cert;
    };

    if (segment_avoids(P, Segment(a, b))) return finish(Polyline({a, b}), PathCase::Direct);

    if (comp == Location::Kind::Interior) {
        if (auto v = common_visible_vertex(P, a, b)) {
            std::vector<Waypoint> wps{fixed_wp(a), vertex_wp(*v), fixed_wp(b)};
            return finish(realize_walk(ctx, wps, comp), PathCase::CommonVertex);
        }
        std::vector<std::size_t> A = visible_vertices(P, a);
        std::vector<std::size_t> B = visible_vertices(P, b);
        MinVisiblePair mv = min_visible_pair(P, A, B);
        BoundaryArc arc = shorter_arc(P, mv.a_vertex, mv.b_vertex);
        std::vector<Waypoint> wps;
        wps.push_back(fixed_wp(a));
        for (std::size_t q : arc.vertex_indices(P)) wps.push_back(vertex_wp(q));
        wps.push_back(fixed_wp(b));
        return finish(realize_walk(ctx, wps, comp), PathCase::BoundaryArc);
    }

    // exterior
    std::optional<FreeDirection> fa = free_direction(P, a);
    std::optional<FreeDirection> fb = free_direction(P, b);

    if (fa && fb) {
        if (auto m = ray_ray_meet(a, fa->dir, b, fb->dir)) {
            if (*m != a && *m != b && segment_avoids(P, Segment(a, *m)) &&
                segment_avoids(P, Segment(*m, b)))
                return finish(Polyline({a, *m, b}), PathCase::FarRays);
        }
        if (auto d = common_free_direction(P, a, b)) {
            if (auto pl = far_waypoint_path(P, a, b, *d))
                return finish(std::move(*pl), PathCase::FarRays);
        }
        if (n == 4) {
            if (auto pl = quad_cover_path(P, a, b))
                return finish(std::move(*pl), PathCase::FarRays);
            throw HaltingCapExceeded("connect: quadrilateral exterior cover failed");
        }
        auto [ua, ub] = non_antiparallel_free_pair(P, a, b);
        if (auto pl = far_segment_path(P, a, ua, b, ub))
            return finish(std::move(*pl), PathCase::FarRays);
        throw HaltingCapExceeded("connect: far segment search failed");
    }

    PathCase tag = (fa || fb) ? PathCase::Mixed : PathCase::BoundaryArc;
    if (auto v = common_visible_vertex(P, a, b)) {
        std::vector<Waypoint> wps{fixed_wp(a), vertex_wp(*v), fixed_wp(b)};
        return finish(realize_walk(ctx, wps, comp), PathCase::CommonVertex);
    }
    std::vector<std::size_t> A = visible_vertices(P, a);
    std::vector<std::size_t> B = visible_vertices(P, b);
    MinVisiblePair mv = min_visible_pair(P, A, B);
    BoundaryArc arc = shorter_arc(P, mv.a_vertex, mv.b_vertex);
    std::vector<Waypoint> wps;
    wps.push_back(fixed_wp(a));
    for (std::size_t q : arc.vertex_indices(P)) wps.push_back(vertex_wp(q));
    wps.push_back(fixed_wp(b));
    return finish(realize_walk(ctx, wps, comp), tag);
}

MinVisiblePair min_visible_pair(const SimplePolygon& P, const std::vector<std::size_t>& A,
                                const std::vector<std::size_t>& B) {
    require(!A.empty() && !B.empty(), "min_visible_pair: empty vertex set");
    std::optional<MinVisiblePair> best;
    for (std::size_t x : A)
        for (std::size_t y : B) {
            std::size_t d = cyclic_edge_distance(P, x, y);
            if (!best || d < best->distance ||
                (d == best->distance &&
                 (x < best->a_vertex || (x == best->a_vertex && y < best->b_vertex))))
                best = MinVisiblePair{x, y, d};
        }
    return *best;
}

void verify_certificate(const SimplePolygon& P, const PathCertificate& cert, const Point& a,
                        const Point& b) {
    RaindropContext ctx(P);
    verify_with_ctx(ctx, cert, a, b);
}

}  // namespace polylink
