/* Apache License, Version 2.0 */
#include <doctest.h>

#include "polylink/errors.hpp"
#include "polylink/raindrop.hpp"
#include "support/testgen.hpp"

using namespace polylink;
using testgen::pt;

namespace {

// Independent enumeration for S0 points: count edges whose closed downward
// ray crossing exists, solving each edge directly.
int brute_crossings(const SimplePolygon& P, const Vec& v, const Point& p) {
    int count = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (ray_segment_hit(p, -v, P.edge(i))) ++count;
    return count;
}

}  // namespace

TEST_CASE("crossing_count on the unit square with v = (1,3)") {
    RaindropContext ctx(testgen::unit_square(), Vec{Rat(1), Rat(3)});

    // brute enumeration fixes the expected values
    CHECK(brute_crossings(ctx.polygon(), ctx.v(), pt(1, 2, 1, 2)) == 1);
    CHECK(crossing_count(ctx, pt(1, 2, 1, 2)) == 1);

    CHECK(brute_crossings(ctx.polygon(), ctx.v(), pt(1, 2, 2, 1)) == 2);
    CHECK(crossing_count(ctx, pt(1, 2, 2, 1)) == 2);

    CHECK(crossing_count(ctx, pt(5, 5)) == 0);
}

TEST_CASE("crossing_count rejects points outside S0") {
    RaindropContext ctx(testgen::unit_square(), Vec{Rat(1), Rat(3)});
    CHECK_THROWS_AS(crossing_count(ctx, pt(1, 2, 0, 1)), NotInS0);  // on the bottom edge
    // directly above vertex (1,1) along v
    Point above = pt(1, 1) + Rat(2) * Vec{Rat(1), Rat(3)};
    CHECK_THROWS_AS(crossing_count(ctx, above), NotInS0);
}

TEST_CASE("classify spec examples") {
    RaindropContext sq(testgen::unit_square());
    CHECK(classify(sq, pt(1, 2, 1, 2)).is_interior());

    Location on_edge = classify(sq, pt(1, 2, 0, 1));
    REQUIRE(on_edge.on_boundary());
    CHECK(on_edge.feature->kind == Feature::Kind::Edge);
    CHECK(on_edge.feature->index == 1);

    RaindropContext lh(testgen::l_hexagon());
    CHECK(classify(lh, pt(3, 2, 3, 2)).is_exterior());  // the notch
    CHECK(classify(lh, pt(1, 2, 3, 2)).is_interior());  // left column
}

TEST_CASE("classify reports vertices over edges") {
    RaindropContext sq(testgen::unit_square());
    Location at_vertex = classify(sq, pt(1, 1));
    REQUIRE(at_vertex.on_boundary());
    CHECK(at_vertex.feature->kind == Feature::Kind::Vertex);
    CHECK(at_vertex.feature->index == 2);
}

TEST_CASE("classify handles vertex events on the ray") {
    // point straight above a square corner along v: the ray meets the vertex
    RaindropContext ctx(testgen::unit_square(), Vec{Rat(1), Rat(3)});
    for (std::size_t i = 0; i < 4; ++i) {
        Point p = ctx.polygon().vertex(i) + Rat(3, 2) * ctx.v();
        Location loc = classify(ctx, p);
        Location ref = classify_by_random_ray(ctx.polygon(), p, 17);
        CHECK(loc == ref);
    }
}

TEST_CASE("classify_by_random_ray spec examples") {
    SimplePolygon sq = testgen::unit_square();
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL})
        CHECK(classify_by_random_ray(sq, pt(1, 2, 1, 2), seed).is_interior());
    SimplePolygon lh = testgen::l_hexagon();
    for (std::uint64_t seed : {0ULL, 7ULL})
        CHECK(classify_by_random_ray(lh, pt(3, 2, 3, 2), seed).is_exterior());
    CHECK(classify_by_random_ray(sq, pt(1, 2, 0, 1), 9).on_boundary());
}

TEST_CASE("classifiers agree on random clouds") {
    SplitMix64 rng(101);
    for (int t = 0; t < 25; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 12, rng);
        RaindropContext ctx(P);
        for (int q = 0; q < 60; ++q) {
            Point p = testgen::random_box_point(P, rng);
            Location a = classify(ctx, p);
            Location b = classify_by_random_ray(P, p, rng.next());
            CHECK(a == b);
        }
    }
}

TEST_CASE("local constancy off the boundary") {
    SplitMix64 rng(55);
    for (int t = 0; t < 10; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 10, rng);
        RaindropContext ctx(P);
        for (int q = 0; q < 12; ++q) {
            Point p = testgen::random_box_point(P, rng);
            Location base = classify(ctx, p);
            if (base.on_boundary()) continue;
            // verified delta: halve until all 8 compass perturbations agree
            Rat delta(1);
            bool ok = false;
            for (int it = 0; it < 256 && !ok; ++it, delta /= Rat(2)) {
                ok = true;
                for (long dx = -1; dx <= 1 && ok; ++dx)
                    for (long dy = -1; dy <= 1 && ok; ++dy) {
                        if (dx == 0 && dy == 0) continue;
                        Point q8 = p + delta * Vec{Rat(dx), Rat(dy)};
                        if (classify(ctx, q8) != base) ok = false;
                    }
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("edge straddle flips the classification") {
    SplitMix64 rng(77);
    for (int t = 0; t < 10; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 10, rng);
        RaindropContext ctx(P);
        for (int q = 0; q < 10; ++q) {
            auto [e, x] = testgen::random_edge_point(P, rng);
            // x must not be vertically aligned with a vertex
            bool aligned = false;
            for (std::size_t i = 0; i < P.size(); ++i)
                if (cross(ctx.v(), P.vertex(i) - x).is_zero()) aligned = true;
            if (aligned) continue;
            // verified epsilon: halve until both perturbations are off the
            // boundary and the classifications flip
            Rat eps(1);
            bool flipped = false;
            for (int it = 0; it < 256 && !flipped; ++it, eps /= Rat(2)) {
                Location up = classify(ctx, x + eps * ctx.v());
                Location down = classify(ctx, x - eps * ctx.v());
                if (up.on_boundary() || down.on_boundary()) continue;
                if (up != down) flipped = true;
            }
            CHECK(flipped);
        }
    }
}

TEST_CASE("points outside the bounding box classify exterior") {
    SplitMix64 rng(91);
    for (int t = 0; t < 12; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 12, rng);
        RaindropContext ctx(P);
        auto [lo, hi] = P.bounding_box();
        CHECK(classify(ctx, Point{hi.x + Rat(1), hi.y + Rat(2)}).is_exterior());
        CHECK(classify(ctx, Point{lo.x - Rat(3), lo.y - Rat(1)}).is_exterior());
        CHECK(classify(ctx, Point{lo.x - Rat(1), hi.y + Rat(1)}).is_exterior());
    }
}

TEST_CASE("classification is invariant under the choice of v") {
    SplitMix64 rng(13);
    for (int t = 0; t < 8; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 10, rng);
        RaindropContext c1(P);
        // a second, larger generic direction
        Vec v2 = c1.v();
        for (long k = v2.dy.num().get_si() + 1;; ++k) {
            Vec cand{Rat(1), Rat(k)};
            bool ok = true;
            for (std::size_t i = 0; i < P.size() && ok; ++i)
                for (std::size_t j = i + 1; j < P.size() && ok; ++j)
                    if (cross(cand, P.vertex(j) - P.vertex(i)).is_zero()) ok = false;
            if (ok) {
                v2 = cand;
                break;
            }
        }
        RaindropContext c2(P, v2);
        for (int q = 0; q < 40; ++q) {
            Point p = testgen::random_box_point(P, rng);
            CHECK(classify(c1, p) == classify(c2, p));
        }
    }
}

TEST_CASE("context rejects a non-generic direction") {
    CHECK_THROWS_AS(RaindropContext(testgen::unit_square(), Vec{Rat(0), Rat(1)}),
                    PreconditionViolated);
    CHECK_THROWS_AS(RaindropContext(testgen::unit_square(), Vec{Rat(1), Rat(1)}),
                    PreconditionViolated);
}
