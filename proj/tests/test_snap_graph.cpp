#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rledtw/snap_graph.hpp"

using namespace rledtw;

TEST_CASE("geometric ladder values") {
    GeomLadder pow2 = build_ladder(Rational(1), 10);
    CHECK(pow2.values == std::vector<std::int64_t>{1, 2, 4, 8, 16});
    GeomLadder half = build_ladder(Rational(1, 2), 12);
    CHECK(half.values == std::vector<std::int64_t>{1, 2, 3, 5, 7, 11, 17});
    CHECK(build_ladder(Rational(3), 1).cover(1) == 1);
}

TEST_CASE("ladder covers every offset") {
    for (Rational eps : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
        GeomLadder ladder = build_ladder(eps, 20000);
        for (std::int64_t d = 1; d <= 20000; ++d) {
            auto delta = ladder.cover(d);
            REQUIRE(delta.has_value());
            CHECK(*delta >= d);
            CHECK(Rational(*delta) <= (1 + eps) * Rational(d));
        }
    }
}

TEST_CASE("snap points of a single wide block") {
    // block spanning columns 1..10, single row
    RleString x = RleString::from_runs(std::vector<Run>{{'a', 10}});
    RleString y = RleString::from_runs(std::vector<Run>{{'b', 1}});
    BlockGrid g = build_block_grid(x, y, DistanceFn::hamming());
    GeomLadder ladder = build_ladder(Rational(1), 10);
    auto v = generate_snap_points(g, ladder);
    std::vector<Point> expect{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {9, 1}, {10, 1}};
    CHECK(v == expect);
}

TEST_CASE("degenerate single-cell grid") {
    RleString a = rle_encode_chars("a");
    BlockGrid g = build_block_grid(a, a, DistanceFn::hamming());
    GeomLadder ladder = build_ladder(Rational(1), 1);
    auto v = generate_snap_points(g, ladder);
    CHECK(v == std::vector<Point>{{1, 1}});
    ApproxGraph graph = build_edges(g, v, ladder);
    CHECK(graph.edges.empty());
    CHECK(shortest_path_dag(graph) == 0);
}

TEST_CASE("snap lookups") {
    // two-row block so the lower boundary is unambiguous
    RleString x = RleString::from_runs(std::vector<Run>{{'a', 10}});
    RleString y = RleString::from_runs(std::vector<Run>{{'b', 2}});
    BlockGrid g = build_block_grid(x, y, DistanceFn::hamming());
    GeomLadder ladder = build_ladder(Rational(1), 10);
    // lower-boundary snap columns are {1,2,3,4,6,10}
    CHECK(snap_h(g, ladder, {5, 1}) == Point{6, 1});
    CHECK(snap_h(g, ladder, {3, 1}) == Point{3, 1});
    CHECK(snap_h(g, ladder, {10, 1}) == Point{10, 1});  // corner
    CHECK(snap_h(g, ladder, {1, 1}) == Point{1, 1});
    CHECK(snap_h(g, ladder, {7, 1}) == Point{10, 1});
    // upper-boundary snap columns are {1,2,3,5,9,10}
    CHECK(snap_h(g, ladder, {4, 2}) == Point{5, 2});
    CHECK_THROWS_AS(snap_v(g, ladder, {5, 1}), std::invalid_argument);

    RleString xt = RleString::from_runs(std::vector<Run>{{'a', 2}});
    RleString yt = RleString::from_runs(std::vector<Run>{{'b', 10}});
    BlockGrid gt = build_block_grid(xt, yt, DistanceFn::hamming());
    CHECK(snap_v(gt, ladder, {1, 5}) == Point{1, 6});
    CHECK(snap_v(gt, ladder, {2, 4}) == Point{2, 5});
    CHECK_THROWS_AS(snap_h(gt, ladder, {1, 5}), std::invalid_argument);
}

TEST_CASE("snap lookups agree with the generated set") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        RleString x = oracle::rand_rle(rng, 6, 6, 5);
        RleString y = oracle::rand_rle(rng, 6, 6, 5);
        BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
        Rational eps = iter % 2 ? Rational(1) : Rational(1, 2);
        GeomLadder ladder = build_ladder(eps, std::max(g.m(), g.n()));
        auto v = generate_snap_points(g, ladder);
        std::set<Point> vset(v.begin(), v.end());
        for (const Point& p : v) {
            unsigned tags = boundary_tags(g, p);
            CHECK(tags != 0);  // every snap point lies on a boundary
            if (tags & (kBoundaryLower | kBoundaryUpper)) CHECK(snap_h(g, ladder, p) == p);
            if (tags & (kBoundaryLeft | kBoundaryRight)) CHECK(snap_v(g, ladder, p) == p);
        }
        // exhaustive agreement on horizontal boundaries
        for (std::int64_t J = 1; J <= g.l(); ++J) {
            for (std::int64_t r : {g.row_lo(J), g.row_hi(J)}) {
                for (std::int64_t c = 1; c <= g.m(); ++c) {
                    Point got = snap_h(g, ladder, {c, r});
                    // nearest generated point at or right of c on this row,
                    // within the same x-run
                    auto [I, Jq] = block_of_point(g, c, r);
                    (void)Jq;
                    std::int64_t want = -1;
                    for (std::int64_t u = c; u <= g.col_hi(I); ++u) {
                        if (vset.count({u, r})) {
                            want = u;
                            break;
                        }
                    }
                    REQUIRE(want != -1);
                    CHECK(got == Point{want, r});
                }
            }
        }
        // snap closure: diagonal successors of upper/right boundary snaps.
        // Points on both opposite boundaries of a thickness-1 block are the
        // one documented exception (their successors may fall between snaps).
        for (const Point& p : v) {
            if (p.i == g.m() || p.j == g.n()) continue;
            unsigned tags = boundary_tags(g, p);
            bool thin = ((tags & kBoundaryLower) && (tags & kBoundaryUpper)) ||
                        ((tags & kBoundaryLeft) && (tags & kBoundaryRight));
            if ((tags & (kBoundaryUpper | kBoundaryRight)) && !thin)
                CHECK(vset.count({p.i + 1, p.j + 1}) == 1);
        }
    }
}

TEST_CASE("vertex count stays within the stated constant") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        RleString x = oracle::rand_rle(rng, 10, 20, 6);
        RleString y = oracle::rand_rle(rng, 10, 20, 6);
        BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
        for (Rational eps : {Rational(1, 4), Rational(1)}) {
            GeomLadder ladder = build_ladder(eps, std::max(g.m(), g.n()));
            auto v = generate_snap_points(g, ladder);
            double logm = std::log(static_cast<double>(g.m())) / std::log1p(eps.get_d());
            double logn = std::log(static_cast<double>(g.n())) / std::log1p(eps.get_d());
            double bound = 4.0 * static_cast<double>(g.k() * g.l()) * (2.0 + logm + logn);
            CHECK(static_cast<double>(v.size()) <= bound);
        }
    }
}

TEST_CASE("edge weights match their witness paths") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 50; ++iter) {
        RleString x = oracle::rand_rle(rng, 5, 8, 5);
        RleString y = oracle::rand_rle(rng, 5, 8, 5);
        BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
        Rational eps = iter % 2 ? Rational(1) : Rational(2, 5);
        GeomLadder ladder = build_ladder(eps, std::max(g.m(), g.n()));
        ApproxGraph graph = build_edges(g, generate_snap_points(g, ladder), ladder, true);
        REQUIRE(graph.witnesses.size() == graph.edges.size());
        for (std::size_t e = 0; e < graph.edges.size(); ++e) {
            const auto& edge = graph.edges[e];
            const auto& w = graph.witnesses[e];
            CHECK(w[0] == graph.vertices[static_cast<std::size_t>(edge.from)]);
            CHECK(w[4] == graph.vertices[static_cast<std::size_t>(edge.to)]);
            CHECK(edge.w == oracle::witness_cost_scaled(g, w));
            // monotone, acyclic
            CHECK(w[4].i >= w[0].i);
            CHECK(w[4].j >= w[0].j);
            CHECK(w[4] != w[0]);
        }
    }
}

TEST_CASE("closed-form h-to-v and v-to-h lengths") {
    RleString x = rle_encode_chars("aaabbbbddd");
    RleString y = rle_encode_chars("aabcdd");
    BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
    SUBCASE("degenerate shape") {
        Point p{1, 1};
        CHECK(htov_edge_length(g, p, p, p, p, p) == 0);
        CHECK(vtoh_edge_length(g, p, p, p, p, p) == 0);
    }
    SUBCASE("pure diagonal within the first run") {
        CHECK(htov_edge_length(g, {1, 1}, {1, 1}, {1, 1}, {3, 3}, {3, 3}) == 0);
    }
    SUBCASE("shape validation") {
        // q2 leaves the x-run of p1
        CHECK_THROWS_AS(htov_edge_length(g, {1, 1}, {1, 1}, {5, 1}, {5, 1}, {5, 1}),
                        std::invalid_argument);
    }
    SUBCASE("transpose symmetry") {
        BlockGrid gt = build_block_grid(y, x, DistanceFn::absdiff());
        auto flip = [](Point p) { return Point{p.j, p.i}; };
        Point p1{4, 4}, q1{5, 5}, q2{5, 5}, q3{6, 6}, q4{6, 6};
        CHECK(htov_edge_length(g, p1, q1, q2, q3, q4) ==
              vtoh_edge_length(gt, flip(p1), flip(q1), flip(q2), flip(q3), flip(q4)));
    }
}

TEST_CASE("dag distance matches Bellman-Ford") {
    std::mt19937_64 rng(808);
    for (int iter = 0; iter < 40; ++iter) {
        RleString x = oracle::rand_rle(rng, 6, 6, 5);
        RleString y = oracle::rand_rle(rng, 6, 6, 5);
        BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
        GeomLadder ladder = build_ladder(Rational(1, 2), std::max(g.m(), g.n()));
        ApproxGraph graph = build_edges(g, generate_snap_points(g, ladder), ladder);
        auto ref = oracle::bellman_ford(graph);
        REQUIRE(ref.has_value());
        CHECK(shortest_path_dag(graph) == *ref);
    }
}

TEST_CASE("graph value stays within the sandwich") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        RleString x = oracle::rand_rle(rng, 6, 6, 6);
        RleString y = oracle::rand_rle(rng, 6, 6, 6);
        DistanceFn d = DistanceFn::absdiff();
        BlockGrid g = build_block_grid(x, y, d);
        Rational exact = oracle::naive_dtw(rle_decode(x), rle_decode(y), d);
        for (Rational eps : {Rational(1, 10), Rational(1, 2), Rational(1), Rational(3)}) {
            GeomLadder ladder = build_ladder(eps, std::max(g.m(), g.n()));
            ApproxGraph graph = build_edges(g, generate_snap_points(g, ladder), ladder);
            Rational value(shortest_path_dag(graph), g.den());
            value.canonicalize();
            value += d(x.runs().back().letter, y.runs().back().letter);
            CHECK(value >= exact);
            CHECK(value <= (1 + eps) * exact);
        }
    }
}
