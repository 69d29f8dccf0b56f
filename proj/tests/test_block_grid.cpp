#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rledtw/block_grid.hpp"

using namespace rledtw;

namespace {

// Grid with one x-run per entry of `row` and a single y-run, so the block
// costs along the row are exactly `row`.
BlockGrid single_row_grid(const std::vector<long long>& row) {
    std::vector<Run> xruns;
    for (std::size_t t = 0; t < row.size(); ++t)
        xruns.push_back({static_cast<Letter>(t), 1});
    RleString x = RleString::from_runs(xruns);
    RleString y = RleString::from_runs(std::vector<Run>{{static_cast<Letter>(row.size()), 1}});
    std::size_t n = row.size() + 1;
    std::vector<std::vector<long long>> table(n, std::vector<long long>(n, 0));
    for (std::size_t t = 0; t < row.size(); ++t) {
        table[t][row.size()] = row[t];
        table[row.size()][t] = row[t];
        for (std::size_t u = 0; u < row.size(); ++u)
            if (t != u) table[t][u] = 1;
    }
    return build_block_grid(x, y, DistanceFn::matrix(table));
}

}  // namespace

TEST_CASE("figure-style grid tables") {
    RleString x = rle_encode_chars("aaabbbbddd");
    RleString y = rle_encode_chars("aabcdd");
    BlockGrid g = build_block_grid(x, y, DistanceFn::absdiff());
    REQUIRE(g.k() == 3);
    REQUIRE(g.l() == 4);
    CHECK(g.m() == 10);
    CHECK(g.n() == 6);
    // costs against the y-run 'a'
    CHECK(g.cost(1, 1) == 0);
    CHECK(g.cost(2, 1) == 1);
    CHECK(g.cost(3, 1) == 3);
    // mu_v of B_{1,3}: 2*delta(a,a) + 1*delta(a,b)
    CHECK(g.mu_v(1, 3) == 1);
    // block extents
    CHECK(g.col_lo(2) == 4);
    CHECK(g.col_hi(2) == 7);
    CHECK(g.row_lo(3) == 4);
    CHECK(g.row_hi(3) == 4);

    SUBCASE("block_of_point") {
        CHECK(block_of_point(g, 4, 3) == std::pair<std::int64_t, std::int64_t>{2, 2});
        CHECK(block_of_point(g, 1, 1) == std::pair<std::int64_t, std::int64_t>{1, 1});
        CHECK(block_of_point(g, g.m(), g.n()) == std::pair<std::int64_t, std::int64_t>{3, 4});
    }
}

TEST_CASE("trivial one-by-one grid") {
    RleString a = rle_encode_chars("a");
    BlockGrid g = build_block_grid(a, a, DistanceFn::absdiff());
    CHECK(g.k() == 1);
    CHECK(g.l() == 1);
    CHECK(g.cost(1, 1) == 0);
    CHECK(beta_stats(g).beta_star == 1);
}

TEST_CASE("beta successor examples") {
    SUBCASE("mixed row") {
        BlockGrid g = single_row_grid({3, 1, 2, 0});
        CHECK(g.beta_h(1, 1) == 2);
        CHECK(g.beta_h(2, 1) == 4);
        CHECK(g.beta_h(3, 1) == 4);
        CHECK(g.beta_h(4, 1) == 0);
    }
    SUBCASE("constant row has no successors") {
        BlockGrid g = single_row_grid({5, 5, 5});
        for (std::int64_t i = 1; i <= 3; ++i) CHECK(g.beta_h(i, 1) == 0);
    }
    SUBCASE("strictly decreasing row chains to the neighbor") {
        BlockGrid g = single_row_grid({3, 2, 1});
        CHECK(g.beta_h(1, 1) == 2);
        CHECK(g.beta_h(2, 1) == 3);
        CHECK(g.beta_h(3, 1) == 0);
    }
    SUBCASE("chain of length four") {
        BlockGrid g = single_row_grid({3, 2, 1, 0});
        CHECK(beta_stats(g).beta_star_h == 4);
    }
}

TEST_CASE("grid properties on random instances") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 80; ++iter) {
        RleString x = oracle::rand_rle(rng, 50, 4, 8);
        RleString y = oracle::rand_rle(rng, 50, 4, 8);
        DistanceFn d = DistanceFn::absdiff();
        BlockGrid g = build_block_grid(x, y, d);

        for (std::int64_t i = 1; i <= g.k(); ++i) {
            for (std::int64_t j = 1; j <= g.l(); ++j) {
                CHECK(g.beta_h(i, j) == oracle::naive_beta_h(g, i, j));
                CHECK(g.beta_v(i, j) == oracle::naive_beta_v(g, i, j));
                if (j < g.l())
                    CHECK(g.mu_v(i, j + 1) - g.mu_v(i, j) ==
                          Rational(y.run(j - 1).count) * g.cost(i, j));
                if (i < g.k())
                    CHECK(g.mu_h(i + 1, j) - g.mu_h(i, j) ==
                          Rational(x.run(i - 1).count) * g.cost(i, j));
            }
        }

        // beta_v strict descent
        BetaStats stats = beta_stats(g);
        CHECK(stats.beta_star_h <= g.k());
        CHECK(stats.beta_star_v <= g.l());
        for (std::int64_t i = 1; i <= g.k(); ++i) {
            std::int64_t j = 1, steps = 0;
            while (j != 0) {
                std::int64_t next = g.beta_v(i, j);
                if (next != 0) CHECK(g.cost(i, next) < g.cost(i, j));
                j = next;
                ++steps;
            }
            CHECK(steps <= stats.beta_star_v);
        }
    }
}

TEST_CASE("hamming grids have beta_star at most two") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        RleString x = oracle::rand_rle(rng, 30, 5, 5);
        RleString y = oracle::rand_rle(rng, 30, 5, 5);
        BlockGrid g = build_block_grid(x, y, DistanceFn::hamming());
        CHECK(beta_stats(g).beta_star <= 2);
    }
}

TEST_CASE("distinct-value bound on beta chains") {
    // with V distinct cost values a strictly descending chain has <= V+1 blocks
    std::mt19937_64 rng(13);
    Rational eps1(1, 2);
    DistanceFn rounded = round_distance_fn(DistanceFn::absdiff(), eps1);
    for (int iter = 0; iter < 30; ++iter) {
        RleString x = oracle::rand_rle(rng, 20, 4, 30);
        RleString y = oracle::rand_rle(rng, 20, 4, 30);
        BlockGrid g = build_block_grid(x, y, rounded);
        std::set<Rational> values;
        for (std::int64_t i = 1; i <= g.k(); ++i)
            for (std::int64_t j = 1; j <= g.l(); ++j)
                if (g.cost(i, j) != 0) values.insert(g.cost(i, j));
        CHECK(beta_stats(g).beta_star <= static_cast<std::int64_t>(values.size()) + 1);
    }
}
