/* Apache License, Version 2.0 */
#include <doctest.h>

#include "polylink/errors.hpp"
#include "polylink/polygon.hpp"
#include "polylink/raindrop.hpp"
#include "support/testgen.hpp"

using namespace polylink;
using testgen::pt;

TEST_CASE("validate accepts the unit square") {
    SimplePolygon P = testgen::unit_square();
    CHECK(P.size() == 4);
    CHECK(P.edge(1).a == pt(0, 0));
    CHECK(P.edge(1).b == pt(1, 0));
    CHECK(P.edge(0).a == pt(0, 1));  // edge 0 closes the cycle
    CHECK(P.edge(0).b == pt(0, 0));
}

TEST_CASE("validate rejects the bowtie") {
    try {
        SimplePolygon::validate({pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)});
        FAIL("bowtie accepted");
    } catch (const ValidationError& e) {
        CHECK(e.fault == ValidationFault::EdgeCrossing);
    }
}

TEST_CASE("validate rejects the degenerate collinear triangle") {
    try {
        SimplePolygon::validate({pt(0, 0), pt(1, 0), pt(2, 0)});
        FAIL("collinear triangle accepted");
    } catch (const ValidationError& e) {
        CHECK(e.fault == ValidationFault::CollinearOverlap);
    }
}

TEST_CASE("validate rejects duplicates and short lists") {
    try {
        SimplePolygon::validate({pt(0, 0), pt(1, 0)});
        FAIL("two vertices accepted");
    } catch (const ValidationError& e) {
        CHECK(e.fault == ValidationFault::TooFewVertices);
    }
    try {
        SimplePolygon::validate({pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)});
        FAIL("duplicate vertex accepted");
    } catch (const ValidationError& e) {
        CHECK(e.fault == ValidationFault::DuplicateVertex);
        CHECK(e.i == 0);
        CHECK(e.j == 2);
    }
}

TEST_CASE("validate rejects a vertex touching a non-adjacent edge") {
    // vertex (2,0) lies in the relative interior of edge [(0,0),(4,0)]
    CHECK_THROWS_AS(
        SimplePolygon::validate({pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 0), pt(0, 4)}),
        ValidationError);
}

TEST_CASE("validate accepts a straight-angle vertex") {
    SimplePolygon P = SimplePolygon::validate({pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
    CHECK(P.size() == 5);
}

TEST_CASE("generic_direction avoids every vertex-pair direction") {
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 12, rng);
        Vec v = generic_direction(P);
        for (std::size_t i = 0; i < P.size(); ++i)
            for (std::size_t j = i + 1; j < P.size(); ++j)
                CHECK_FALSE(cross(v, P.vertex(j) - P.vertex(i)).is_zero());
    }
}

TEST_CASE("generic_direction on canonical shapes") {
    // unit square forbids slopes {0, inf, 1, -1}; the enumeration (1, k)
    // first clears at k = 2
    CHECK(generic_direction(testgen::unit_square()) == Vec{Rat(1), Rat(2)});
    // axis-aligned rectangle forbids {0, inf, and the two diagonals}
    SimplePolygon rect = SimplePolygon::validate({pt(0, 0), pt(4, 0), pt(4, 1), pt(0, 1)});
    Vec v = generic_direction(rect);
    for (std::size_t i = 0; i < rect.size(); ++i)
        for (std::size_t j = i + 1; j < rect.size(); ++j)
            CHECK_FALSE(cross(v, rect.vertex(j) - rect.vertex(i)).is_zero());
    // triangle (0,0),(1,0),(0,1): slopes {0, inf, -1}; k = 1 already works
    CHECK(generic_direction(testgen::triangle()) == Vec{Rat(1), Rat(1)});
}

TEST_CASE("cyclic_edge_distance basic values and laws") {
    SimplePolygon sq = testgen::unit_square();
    CHECK(cyclic_edge_distance(sq, 0, 2) == 2);
    CHECK(cyclic_edge_distance(sq, 1, 1) == 0);
    SimplePolygon hexa = testgen::l_hexagon();
    CHECK(cyclic_edge_distance(hexa, 0, 4) == 2);
    CHECK(cyclic_edge_distance(hexa, 0, 5) == 1);

    for (std::size_t i = 0; i < hexa.size(); ++i)
        for (std::size_t j = 0; j < hexa.size(); ++j) {
            CHECK(cyclic_edge_distance(hexa, i, j) == cyclic_edge_distance(hexa, j, i));
            CHECK(cyclic_edge_distance(hexa, i, j) <= hexa.size() / 2);
            for (std::size_t k = 0; k < hexa.size(); ++k)
                CHECK(cyclic_edge_distance(hexa, i, k) <=
                      cyclic_edge_distance(hexa, i, j) + cyclic_edge_distance(hexa, j, k));
        }
}

TEST_CASE("shorter_arc ties break forward and lengths match") {
    SimplePolygon sq = testgen::unit_square();
    BoundaryArc arc = shorter_arc(sq, 0, 2);
    CHECK(arc.forward);
    CHECK(arc.edge_count == 2);
    CHECK(arc.vertex_indices(sq) == std::vector<std::size_t>{0, 1, 2});

    SimplePolygon hexa = testgen::l_hexagon();
    arc = shorter_arc(hexa, 0, 5);
    CHECK_FALSE(arc.forward);
    CHECK(arc.edge_count == 1);
    CHECK(arc.vertex_indices(hexa) == std::vector<std::size_t>{0, 5});

    arc = shorter_arc(hexa, 2, 2);
    CHECK(arc.edge_count == 0);
    CHECK(arc.vertex_indices(hexa) == std::vector<std::size_t>{2});
}

TEST_CASE("wedge_directions on canonical shapes") {
    SimplePolygon sq = testgen::unit_square();
    WedgeDirections wd = wedge_directions(sq, 0);
    CHECK(wd.inward == Vec{Rat(1), Rat(1)});
    CHECK(wd.outward == Vec{Rat(-1), Rat(-1)});

    // reflex vertex (1,1) of the L-hexagon: the diagonal points outward
    SimplePolygon hexa = testgen::l_hexagon();
    WedgeDirections wr = wedge_directions(hexa, 3);
    CHECK(wr.outward == Vec{Rat(1), Rat(1)});
    CHECK(wr.inward == Vec{Rat(-1), Rat(-1)});
}

TEST_CASE("wedge_directions handles a straight vertex") {
    SimplePolygon P = SimplePolygon::validate({pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
    WedgeDirections wd = wedge_directions(P, 1);  // (1,0), interior above
    CHECK(same_direction(wd.inward, Vec{Rat(0), Rat(1)}));
    CHECK(same_direction(wd.outward, Vec{Rat(0), Rat(-1)}));
}

TEST_CASE("wedge samples classify to the right sides") {
    SplitMix64 rng(5);
    for (int t = 0; t < 12; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 10, rng);
        RaindropContext ctx(P);
        for (std::size_t i = 0; i < P.size(); ++i) {
            WedgeDirections wd = wedge_directions(ctx, i);
            // re-run the halving to exhibit a verified epsilon
            Rat eps = P.shortest_edge_linf();
            bool verified = false;
            for (int it = 0; it < 256 && !verified; ++it, eps /= Rat(2)) {
                Location in = classify(ctx, P.vertex(i) + eps * wd.inward);
                Location out = classify(ctx, P.vertex(i) + eps * wd.outward);
                verified = in.is_interior() && out.is_exterior();
            }
            CHECK(verified);
        }
    }
}

TEST_CASE("bounding box and shortest edge") {
    SimplePolygon hexa = testgen::l_hexagon();
    auto [lo, hi] = hexa.bounding_box();
    CHECK(lo == pt(0, 0));
    CHECK(hi == pt(2, 2));
    CHECK(hexa.shortest_edge_linf() == Rat(1));
}
