/* Apache License, Version 2.0 */
#include "polylink/geom.hpp"

#include <algorithm>

#include "polylink/errors.hpp"

namespace polylink {

int orient(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
    require(a != b, "Segment: endpoints must differ");
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    // collinear; check the box
    return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
           min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

namespace {

// 1-D interval overlap of two collinear segments, measured along the
// dominant axis of d. Returns the overlap as points of the line.
SegRelation collinear_relation(const Segment& s, const Segment& t) {
    Vec d = s.dir();
    bool use_x = d.dx.abs() >= d.dy.abs();
    auto coord = [use_x](const Point& p) { return use_x ? p.x : p.y; };

    Point slo = s.a, shi = s.b;
    if (coord(shi) < coord(slo)) std::swap(slo, shi);
    Point tlo = t.a, thi = t.b;
    if (coord(thi) < coord(tlo)) std::swap(tlo, thi);

    const Point& lo = coord(slo) < coord(tlo) ? tlo : slo;
    const Point& hi = coord(shi) < coord(thi) ? shi : thi;

    SegRelation r;
    if (coord(hi) < coord(lo)) {
        r.kind = SegKind::Disjoint;
    } else if (coord(hi) == coord(lo)) {
        r.kind = SegKind::Touch;
        r.point = lo;
    } else {
        r.kind = SegKind::Overlap;
        r.shared = Segment(lo, hi);
    }
    return r;
}

}  // namespace

SegRelation segment_relation(const Segment& s, const Segment& t) {
    int o1 = orient(s.a, s.b, t.a);
    int o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a);
    int o4 = orient(t.a, t.b, s.b);

    if (o1 == 0 && o2 == 0) return collinear_relation(s, t);

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // interiors cross in exactly one point; solve the 2x2 system
        Vec ds = s.dir(), dt = t.dir();
        Rat den = cross(ds, dt);
        Rat u = cross(t.a - s.a, dt) / den;
        SegRelation r;
        r.kind = SegKind::ProperCross;
        r.point = s.at(u);
        return r;
    }

    // any remaining intersection involves an endpoint lying on the other segment
    SegRelation r;
    for (const Point& p : {t.a, t.b})
        if (point_on_segment(p, s)) {
            r.kind = SegKind::Touch;
            r.point = p;
            return r;
        }
    for (const Point& p : {s.a, s.b})
        if (point_on_segment(p, t)) {
            r.kind = SegKind::Touch;
            r.point = p;
            return r;
        }
    r.kind = SegKind::Disjoint;
    return r;
}

std::optional<RayHit> ray_segment_hit(const Point& origin, const Vec& dir, const Segment& s) {
    require(!dir.is_zero(), "ray_segment_hit: zero direction");
    Vec e = s.dir();
    Vec f = s.a - origin;
    Rat den = cross(dir, e);

    if (!den.is_zero()) {
        Rat lambda = cross(f, e) / den;
        Rat mu = cross(f, dir) / den;
        if (lambda.sign() >= 0 && mu.sign() >= 0 && mu <= Rat(1))
            return RayHit{lambda, origin + lambda * dir};
        return std::nullopt;
    }

    // parallel
    if (!cross(f, dir).is_zero()) return std::nullopt;
    // collinear: the nearest parameter in [0, inf)
    Rat dd = norm2(dir);
    Rat ta = dot(s.a - origin, dir) / dd;
    Rat tb = dot(s.b - origin, dir) / dd;
    Rat lo = min(ta, tb), hi = max(ta, tb);
    if (hi.sign() < 0) return std::nullopt;
    Rat lambda = max(lo, Rat(0));
    return RayHit{lambda, origin + lambda * dir};
}

}  // namespace polylink
