/* Apache License, Version 2.0 */
#include "polylink/link_oracle.hpp"

#include <algorithm>
#include <string>

#include "polylink/errors.hpp"
#include "polylink/rng.hpp"

namespace polylink {

namespace {

struct Line {
    // n . x = c
    Vec n;
    Rat c;
};

Line line_through(const Point& p, const Point& q) {
    Vec n = (q - p).perp();
    return Line{n, n.dx * p.x + n.dy * p.y};
}

std::optional<Point> line_meet(const Line& l1, const Line& l2) {
    Rat det = cross(l1.n, l2.n);
    if (det.is_zero()) return std::nullopt;
    return Point{(l1.c * l2.n.dy - l2.c * l1.n.dy) / det,
                 (l2.c * l1.n.dx - l1.c * l2.n.dx) / det};
}

void sort_dedupe(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

bool in_closed_box(const Point& p, const std::pair<Point, Point>& box) {
    return box.first.x <= p.x && p.x <= box.second.x && box.first.y <= p.y &&
           p.y <= box.second.y;
}

std::pair<Point, Point> scaled_box(const SimplePolygon& P, const std::vector<Point>& extras,
                                   long factor) {
    auto [lo, hi] = P.bounding_box();
    for (const Point& p : extras) {
        lo.x = min(lo.x, p.x);
        lo.y = min(lo.y, p.y);
        hi.x = max(hi.x, p.x);
        hi.y = max(hi.y, p.y);
    }
    Point c{(lo.x + hi.x) / Rat(2), (lo.y + hi.y) / Rat(2)};
    Rat hx = max((hi.x - lo.x) / Rat(2), Rat(1)) * Rat(factor);
    Rat hy = max((hi.y - lo.y) / Rat(2), Rat(1)) * Rat(factor);
    return {Point{c.x - hx, c.y - hy}, Point{c.x + hx, c.y + hy}};
}

Point pushed_vertex(const RaindropContext& ctx, std::size_t i, Location::Kind domain) {
    const SimplePolygon& P = ctx.polygon();
    WedgeDirections wd = wedge_directions(ctx, i);
    Vec dir = domain == Location::Kind::Interior ? wd.inward : wd.outward;
    // normalize the first step to at most a quarter of the shortest edge so
    // the sample hugs its vertex instead of sliding along a thin pocket
    Rat eps = min(P.shortest_edge_linf(), Rat(1, 2)) /
              (Rat(4) * max(dir.dx.abs(), dir.dy.abs()));
    for (int iter = 0; iter < 256; ++iter, eps /= Rat(2)) {
        Point cand = P.vertex(i) + eps * dir;
        // the push must stay local: reachable from the vertex without
        // crossing P (a big step can land in another part of the domain)
        if (!segment_avoids(P, Segment(P.vertex(i), cand))) continue;
        if (classify(ctx, cand).kind == domain) return cand;
    }
    throw HaltingCapExceeded("pushed_vertex: halving cap exceeded");
}

CandidateField build_field(const RaindropContext& ctx, const std::vector<Point>& extras,
                           Location::Kind domain, long box_factor) {
    const SimplePolygon& P = ctx.polygon();
    CandidateField field;
    field.domain = domain;
    field.box = scaled_box(P, extras, box_factor);

    std::vector<Point> base(P.vertices());
    base.insert(base.end(), extras.begin(), extras.end());
    sort_dedupe(base);

    std::vector<Line> lines;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            lines.push_back(line_through(base[i], base[j]));

    std::vector<Point> raw;
    for (const Point& p : extras) raw.push_back(p);
    for (std::size_t i = 0; i < P.size(); ++i) raw.push_back(pushed_vertex(ctx, i, domain));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto m = line_meet(lines[i], lines[j])) raw.push_back(*m);

    if (domain == Location::Kind::Exterior) {
        const auto& [lo, hi] = field.box;
        Point c1 = lo, c2{hi.x, lo.y}, c3 = hi, c4{lo.x, hi.y};
        for (const Point& c : {c1, c2, c3, c4}) raw.push_back(c);
        for (const Segment& side :
             {Segment(c1, c2), Segment(c2, c3), Segment(c3, c4), Segment(c4, c1)})
            for (const Line& l : lines) {
                Line sl = line_through(side.a, side.b);
                if (auto m = line_meet(sl, l))
                    if (point_on_segment(*m, side)) raw.push_back(*m);
            }
    }

    for (Point& p : raw) {
        if (domain == Location::Kind::Exterior && !in_closed_box(p, field.box)) continue;
        if (classify(ctx, p).kind == domain) field.points.push_back(p);
    }
    sort_dedupe(field.points);
    return field;
}

struct BfsOut {
    std::optional<std::size_t> dist;
    Polyline witness;
};

BfsOut bfs_over(const SimplePolygon& P, const Point& a, const Point& b,
                const std::vector<Point>& cands) {
    const std::size_t K = cands.size();
    std::size_t ia = K, ib = K;
    for (std::size_t i = 0; i < K; ++i) {
        if (cands[i] == a) ia = i;
        if (cands[i] == b) ib = i;
    }
    if (ia == K || ib == K)
        throw HaltingCapExceeded("bfs_over: endpoints missing from candidate field");

    std::vector<std::size_t> dist(K, SIZE_MAX), parent(K, SIZE_MAX);
    std::vector<std::size_t> frontier{ia};
    dist[ia] = 0;

    auto reconstruct = [&](std::size_t v) {
        std::vector<Point> pts;
        for (std::size_t u = v; u != SIZE_MAX; u = parent[u]) pts.push_back(cands[u]);
        std::reverse(pts.begin(), pts.end());
        return Polyline(std::move(pts));
    };

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t u : frontier)
            for (std::size_t v = 0; v < K; ++v) {
                if (dist[v] != SIZE_MAX || cands[v] == cands[u]) continue;
                if (!segment_avoids(P, Segment(cands[u], cands[v]))) continue;
                dist[v] = dist[u] + 1;
                parent[v] = u;
                if (v == ib) return BfsOut{dist[v], reconstruct(v)};
                next.push_back(v);
            }
        frontier = std::move(next);
    }
    return BfsOut{std::nullopt, Polyline{}};
}

std::vector<Point> sample_domain_points(const RaindropContext& ctx, Location::Kind domain,
                                        const std::pair<Point, Point>& box, std::size_t count,
                                        SplitMix64& rng) {
    std::vector<Point> out;
    const Rat wx = box.second.x - box.first.x;
    const Rat wy = box.second.y - box.first.y;
    for (std::size_t tries = 0; tries < count * 30 && out.size() < count; ++tries) {
        Rat fx(static_cast<long>(rng.below(4096)), 4096L);
        Rat fy(static_cast<long>(rng.below(4096)), 4096L);
        Point p{box.first.x + fx * wx, box.first.y + fy * wy};
        if (classify(ctx, p).kind == domain) out.push_back(p);
    }
    return out;
}

void check_witness(const SimplePolygon& P, const RaindropContext& ctx, const Polyline& w,
                   Location::Kind domain, std::size_t dist) {
    if (w.links() != dist) throw HaltingCapExceeded("oracle witness: wrong link count");
    for (std::size_t i = 0; i < w.links(); ++i) {
        Segment link = w.link(i);
        if (!segment_avoids(P, link))
            throw HaltingCapExceeded("oracle witness: link meets P");
        if (classify(ctx, link.midpoint()).kind != domain)
            throw HaltingCapExceeded("oracle witness: link leaves the domain");
    }
}

}  // namespace

CandidateField build_candidates(const SimplePolygon& P, const std::vector<Point>& extras,
                                Location::Kind domain) {
    require(domain != Location::Kind::Boundary, "build_candidates: domain must be a side");
    RaindropContext ctx(P);
    for (const Point& p : extras)
        if (classify(ctx, p).kind != domain)
            throw PreconditionViolated("build_candidates: extra point not in domain");
    return build_field(ctx, extras, domain, 4);
}

OracleResult link_distance(const SimplePolygon& P, const Point& a, const Point& b,
                           Location::Kind domain, const OracleOptions& opts) {
    require(domain != Location::Kind::Boundary, "link_distance: domain must be a side");
    if (P.size() > opts.max_n)
        throw OracleRefused("link_distance: n = " + std::to_string(P.size()) +
                            " exceeds max-n = " + std::to_string(opts.max_n));
    RaindropContext ctx(P);
    if (classify(ctx, a).kind != domain || classify(ctx, b).kind != domain)
        throw ComponentMismatch("link_distance: endpoint not in the requested domain");

    OracleResult res;
    if (a == b) {
        res.distance = 0;
        return res;
    }
    if (segment_avoids(P, Segment(a, b))) {
        res.distance = 1;
        res.witness = Polyline({a, b});
        return res;
    }
    // far-field two-link check is exact and independent of the box
    if (domain == Location::Kind::Exterior) {
        if (auto d = common_free_direction(P, a, b))
            if (auto pl = far_waypoint_path(P, a, b, *d)) {
                res.distance = 2;
                res.witness = std::move(*pl);
                check_witness(P, ctx, res.witness, domain, 2);
                return res;
            }
    }

    std::vector<Point> extras{a, b};
    std::vector<Point> acc;
    BfsOut bfs;

    if (domain == Location::Kind::Exterior) {
        std::optional<std::size_t> prev;
        bool settled = false;
        long factor = 4;
        for (int k = 0; k < 10; ++k, factor *= 2) {
            CandidateField f = build_field(ctx, extras, domain, factor);
            acc.insert(acc.end(), f.points.begin(), f.points.end());
            sort_dedupe(acc);
            bfs = bfs_over(P, a, b, acc);
            res.stability.box_doublings = k;
            if (prev && bfs.dist == prev) {
                settled = true;
                break;
            }
            prev = bfs.dist;
        }
        res.stability.stable = settled;
    } else {
        CandidateField f = build_field(ctx, extras, domain, 4);
        acc = f.points;
        bfs = bfs_over(P, a, b, acc);
    }

    // enrichment: extra seeded domain points must not change the answer
    SplitMix64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    auto box = scaled_box(P, extras, domain == Location::Kind::Exterior ? 8 : 1);
    for (int round = 0; round < 4; ++round) {
        std::vector<Point> extra =
            sample_domain_points(ctx, domain, box, 2 * P.size() + 8, rng);
        if (extra.empty()) break;
        std::size_t before = acc.size();
        acc.insert(acc.end(), extra.begin(), extra.end());
        sort_dedupe(acc);
        if (acc.size() == before) break;
        BfsOut again = bfs_over(P, a, b, acc);
        res.stability.enrichment_rounds = round + 1;
        if (again.dist == bfs.dist) {
            bfs = std::move(again);
            break;
        }
        bfs = std::move(again);
        if (round == 3) res.stability.stable = false;
    }

    res.distance = bfs.dist;
    if (bfs.dist) {
        res.witness = std::move(bfs.witness);
        check_witness(P, ctx, res.witness, domain, *bfs.dist);
    }
    return res;
}

PoldiamSample poldiam_sampled(const SimplePolygon& P, Location::Kind domain, std::size_t budget,
                              std::uint64_t seed, const OracleOptions& opts) {
    require(budget >= 1, "poldiam_sampled: budget must be positive");
    require(domain != Location::Kind::Boundary, "poldiam_sampled: domain must be a side");
    RaindropContext ctx(P);

    CandidateField field = build_field(ctx, {}, domain, 4);
    std::vector<Point> pool = field.points;
    SplitMix64 rng(seed);
    auto box = scaled_box(P, {}, domain == Location::Kind::Exterior ? 6 : 1);
    std::vector<Point> extra = sample_domain_points(ctx, domain, box, P.size() + 8, rng);
    pool.insert(pool.end(), extra.begin(), extra.end());
    sort_dedupe(pool);
    if (pool.size() < 2) throw HaltingCapExceeded("poldiam_sampled: empty sample pool");

    PoldiamSample best;
    bool have = false;
    std::size_t spent = 0;
    auto try_pair = [&](const Point& x, const Point& y) {
        if (x == y || spent >= budget) return;
        ++spent;
        OracleResult r = link_distance(P, x, y, domain, opts);
        if (!r.distance) return;
        if (!have || *r.distance > best.lower_bound) {
            best.lower_bound = *r.distance;
            best.witness_a = x;
            best.witness_b = y;
            best.result = std::move(r);
            have = true;
        }
    };

    // points pushed off antipodal boundary features are the usual poldiam
    // witnesses; try those pairs first, random pairs fill the rest
    const std::size_t n = P.size();
    std::vector<Point> pushed;
    for (std::size_t i = 0; i < n; ++i) pushed.push_back(pushed_vertex(ctx, i, domain));
    for (std::size_t i = 0; i < n && spent < budget; ++i)
        try_pair(pushed[i], pushed[(i + n / 2) % n]);
    for (std::size_t i = 0; i < n && spent < budget; ++i)
        for (std::size_t j = i + 1; j < n && spent < budget; ++j) try_pair(pushed[i], pushed[j]);

    for (std::size_t guard = 0; spent < budget && guard < 40 * budget; ++guard)
        try_pair(pool[rng.below(pool.size())], pool[rng.below(pool.size())]);
    if (!have) {
        OracleResult r = link_distance(P, pool[0], pool[1], domain, opts);
        best.lower_bound = r.distance.value_or(0);
        best.witness_a = pool[0];
        best.witness_b = pool[1];
        best.result = std::move(r);
    }
    return best;
}

}  // namespace polylink
