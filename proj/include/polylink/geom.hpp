/* Apache License, Version 2.0 */
#pragma once

#include <optional>

#include "polylink/rat.hpp"

namespace polylink {

struct Vec {
    Rat dx, dy;
    bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
    /// counterclockwise quarter turn
    Vec perp() const { return {-dy, dx}; }
    Vec operator-() const { return {-dx, -dy}; }
};

struct Point {
    Rat x, y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
inline bool operator==(const Vec& a, const Vec& b) { return a.dx == b.dx && a.dy == b.dy; }
inline bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Vec& v) { return {p.x + v.dx, p.y + v.dy}; }
inline Point operator-(const Point& p, const Vec& v) { return {p.x - v.dx, p.y - v.dy}; }
inline Vec operator+(const Vec& a, const Vec& b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline Vec operator-(const Vec& a, const Vec& b) { return {a.dx - b.dx, a.dy - b.dy}; }
inline Vec operator*(const Rat& s, const Vec& v) { return {s * v.dx, s * v.dy}; }

inline Rat cross(const Vec& a, const Vec& b) { return a.dx * b.dy - a.dy * b.dx; }
inline Rat dot(const Vec& a, const Vec& b) { return a.dx * b.dx + a.dy * b.dy; }
inline Rat norm2(const Vec& a) { return dot(a, a); }

/// Sign of cross(b-a, c-a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

/// Lexicographic (x, then y); used for deterministic tie-breaks.
bool lex_less(const Point& a, const Point& b);

struct Segment {
    Segment(Point a_, Point b_);
    Point a, b;
    Vec dir() const { return b - a; }
    Point midpoint() const { return {(a.x + b.x) / Rat(2), (a.y + b.y) / Rat(2)}; }
    /// point at parameter t in [0,1]
    Point at(const Rat& t) const { return a + t * (b - a); }
};

enum class SegKind { Disjoint, ProperCross, Touch, Overlap };

struct SegRelation {
    SegKind kind = SegKind::Disjoint;
    /// single intersection point for ProperCross and Touch
    std::optional<Point> point;
    /// shared subsegment for Overlap
    std::optional<Segment> shared;
};

/// Exact classification of s ∩ t: empty, one interior-interior point, one
/// point involving an endpoint, or a positive-length shared subsegment.
SegRelation segment_relation(const Segment& s, const Segment& t);

/// p in the closed segment [s.a, s.b]
bool point_on_segment(const Point& p, const Segment& s);

struct RayHit {
    Rat lambda;
    Point point;
};

/// Smallest lambda >= 0 with origin + lambda*dir on s, if any. dir must be nonzero.
std::optional<RayHit> ray_segment_hit(const Point& origin, const Vec& dir, const Segment& s);

}  // namespace polylink
