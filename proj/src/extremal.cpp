/* Apache License, Version 2.0 */
#include "polylink/extremal.hpp"

#include <string>

#include "polylink/errors.hpp"

namespace polylink {

namespace {

const Vec kCard[4] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};

const Vec& dir_of(std::size_t i) { return kCard[i % 4]; }
const Vec& left_of(std::size_t i) { return kCard[(i + 1) % 4]; }

ExtremalInstance make_triangle() {
    auto P = SimplePolygon::validate(
        {Point{Rat(0), Rat(0)}, Point{Rat(16), Rat(0)}, Point{Rat(0), Rat(12)}});
    ExtremalInstance inst{std::move(P), Point{Rat(2), Rat(1)}, Point{Rat(10), Rat(1)},
                          Point{Rat(-2), Rat(2)}, Point{Rat(18), Rat(2)}, 1, 2};
    return inst;
}

}  // namespace

// The spiral strip: a rectangular wall of k quarter turns and unit half
// thickness, tapering to points at both ends. Its interior forces one bend
// per leg; the exterior slot between wraps forces the same number of bends
// on the way out plus the hop to the shielded witness d behind the east
// wall. Odd n spends one extra vertex on a wedge that lengthens the
// exterior unwinding by exactly one bend.
namespace {

// Ten vertices with the last leg run diagonally back across the cavity: the
// diagonal walls off a sliver cell whose exit pencil dies on the bottom
// taper, which buys the fifth exterior bend that a rectangular last leg
// loses at its tip.
ExtremalInstance make_ten_gon() {
    auto p = [](long x, long y) { return Point{Rat(x), Rat(y)}; };
    auto P = SimplePolygon::validate({p(0, 0), p(29, -1), p(29, 29), p(3, 29), p(3, 2),
                                      p(16, 24), p(5, 8), p(5, 27), p(27, 27), p(27, 1)});
    return ExtremalInstance{std::move(P), p(2, 0), p(13, 19), p(7, 20), p(31, 14), 5, 5};
}

}  // namespace

ExtremalInstance spiral(std::size_t n) {
    require(n >= 3, "spiral: n >= 3 required");
    if (n == 3) return make_triangle();
    if (n == 10) return make_ten_gon();

    const std::size_t m = n / 2;
    const std::size_t k = m - 1;  // spiral corners; legs k+1
    const long B = 4 * static_cast<long>(k) + 12;
    const bool odd = (n % 2) == 1;

    // leg j (1-based) has direction dir_of(j-1) and length B - 4*floor((j-1)/2),
    // which keeps successive wraps 4 apart center-to-center
    auto leg_len = [&](std::size_t j) {
        return Rat(B - 4 * static_cast<long>((j - 1) / 2));
    };
    std::vector<Point> spine{Point{Rat(0), Rat(0)}};
    for (std::size_t j = 1; j <= k + 1; ++j)
        spine.push_back(spine.back() + leg_len(j) * dir_of(j - 1));
    const Point t_out = spine.front();
    const Point t_in = spine.back();

    std::vector<Point> lefts, rights;
    std::vector<Vec> diag;
    for (std::size_t j = 1; j <= k; ++j) {
        Vec u = left_of(j - 1) + left_of(j);
        diag.push_back(u);
        lefts.push_back(spine[j] + u);
        rights.push_back(spine[j] - u);
    }

    std::vector<Point> vertices;
    vertices.push_back(t_out);
    for (std::size_t j = 0; j < k; ++j) {
        vertices.push_back(rights[j]);
        if (odd && k == 1)  // wedge on the outer east wall
            vertices.push_back(Point{Rat(B + 8), Rat(B, 2)});
    }
    vertices.push_back(t_in);
    if (odd && k >= 5) {
        // wedge on the innermost left wall, poking into the deepest room
        Point mid = Segment(lefts[k - 1], t_in).midpoint();
        vertices.push_back(mid + Rat(5) * left_of(k));
    }
    for (std::size_t j = k; j-- > 0;) {
        vertices.push_back(lefts[j]);
        if (odd && k == 2 && j == k - 1)
            vertices.push_back(Point{Rat(B - 6), Rat(3)});  // hook from the top wall
        if (odd && (k == 3 || k == 4) && j == 1) {
            // wedge on the east inner wall between L_2 and L_1
            long tip_x = (k == 3) ? 6 : B - 5;
            vertices.push_back(Point{Rat(tip_x), Rat(B, 2)});
        }
    }

    // the k = 2 hook sits between T_in and L_2, not after L_2
    if (odd && k == 2) {
        // reorder: built as [..., T_in, L_2, K, L_1]; wanted [..., T_in, K, L_2, L_1]
        std::swap(vertices[vertices.size() - 3], vertices[vertices.size() - 2]);
    }

    ExtremalInstance inst{SimplePolygon::validate(std::move(vertices)),
                          Point{Rat(0), Rat(0)}, Point{Rat(0), Rat(0)},
                          Point{Rat(0), Rat(0)}, Point{Rat(0), Rat(0)},
                          m, odd ? m + 1 : m};

    // interior witnesses on the spine near the two tips
    inst.int_a = t_out + Rat(2) * dir_of(0);
    inst.int_b = t_in - Rat(2) * dir_of(k);

    // exterior witness c in the deepest exterior cell, d behind the east wall
    if (k == 1) {
        inst.ext_c = Point{Rat(B - 3), Rat(3)};
    } else if (odd && k == 2) {
        inst.ext_c = Point{Rat(B - 2), Rat(6)};  // sliver east of the hook
    } else if (odd && k == 3) {
        inst.ext_c = Point{Rat(B - 6), Rat(B - 2)};  // pocket north of the wedge
    } else {
        inst.ext_c = spine[k - 1] + Rat(2) * diag[k - 2];
    }
    inst.ext_d = (odd && k == 1) ? Point{Rat(B + 2), Rat(0)} : Point{Rat(B + 3), Rat(B, 2)};

    RaindropContext ctx(inst.polygon);
    if (!classify(ctx, inst.int_a).is_interior() || !classify(ctx, inst.int_b).is_interior())
        throw VerificationFailed("spiral: interior witness misclassified");
    if (!classify(ctx, inst.ext_c).is_exterior() || !classify(ctx, inst.ext_d).is_exterior())
        throw VerificationFailed("spiral: exterior witness misclassified");
    return inst;
}

VerifyReport verify(const ExtremalInstance& inst, const OracleOptions& opts) {
    VerifyReport rep;
    rep.int_claimed = inst.int_value;
    rep.ext_claimed = inst.ext_value;

    OracleResult ri =
        link_distance(inst.polygon, inst.int_a, inst.int_b, Location::Kind::Interior, opts);
    if (!ri.distance)
        throw VerificationFailed("verify: interior witnesses unreachable");
    rep.int_actual = *ri.distance;

    OracleResult re =
        link_distance(inst.polygon, inst.ext_c, inst.ext_d, Location::Kind::Exterior, opts);
    if (!re.distance)
        throw VerificationFailed("verify: exterior witnesses unreachable");
    rep.ext_actual = *re.distance;

    if (rep.int_actual != rep.int_claimed)
        throw VerificationFailed("verify: interior distance " + std::to_string(rep.int_actual) +
                                 " != claimed " + std::to_string(rep.int_claimed));
    if (rep.ext_actual != rep.ext_claimed)
        throw VerificationFailed("verify: exterior distance " + std::to_string(rep.ext_actual) +
                                 " != claimed " + std::to_string(rep.ext_claimed));

    // upper-bound law on sampled pairs
    const std::size_t n = inst.polygon.size();
    PoldiamSample si = poldiam_sampled(inst.polygon, Location::Kind::Interior, 12, opts.seed, opts);
    PoldiamSample se = poldiam_sampled(inst.polygon, Location::Kind::Exterior, 12, opts.seed, opts);
    rep.sampled_int_max = si.lower_bound;
    rep.sampled_ext_max = se.lower_bound;
    if (si.lower_bound > n / 2)
        throw VerificationFailed("verify: sampled interior distance exceeds floor(n/2)");
    if (se.lower_bound > (n + 1) / 2)
        throw VerificationFailed("verify: sampled exterior distance exceeds ceil(n/2)");
    return rep;
}

}  // namespace polylink
