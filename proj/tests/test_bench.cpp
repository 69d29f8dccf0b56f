#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rledtw/bench.hpp"

using namespace rledtw;

TEST_CASE("instance generation") {
    GenSpec spec;
    spec.k = 100;
    spec.l = 7;
    spec.uniform_lo = 1;
    spec.uniform_hi = 1000;
    spec.alphabet_size = 5;
    spec.seed = 321;

    auto [x, y] = generate_instance(spec);
    CHECK(x.run_count() == 100);
    CHECK(y.run_count() == 7);
    // run counts survive a decode/re-encode round trip (runs are maximal)
    CHECK(rle_encode(rle_decode(x)).run_count() == 100);

    SUBCASE("determinism") {
        auto [x2, y2] = generate_instance(spec);
        CHECK(rle_decode(x) == rle_decode(x2));
        CHECK(rle_decode(y) == rle_decode(y2));
    }
    SUBCASE("single run") {
        GenSpec one;
        one.k = 1;
        one.l = 1;
        one.alphabet_size = 1;
        auto [a, b] = generate_instance(one);
        CHECK(a.run_count() == 1);
        CHECK(b.run_count() == 1);
    }
    SUBCASE("tiny alphabet with many runs is rejected") {
        GenSpec bad;
        bad.k = 2;
        bad.alphabet_size = 1;
        CHECK_THROWS_AS(generate_instance(bad), std::invalid_argument);
    }
    SUBCASE("geometric lengths") {
        GenSpec geo = spec;
        geo.length_dist = GenSpec::LengthDist::Geometric;
        geo.geometric_p = 0.3;
        auto [a, b] = generate_instance(geo);
        CHECK(a.run_count() == 100);
        CHECK(a.total_length() >= 100);
        (void)b;
    }
}

TEST_CASE("ratio experiment") {
    std::vector<GenSpec> specs;
    for (std::uint64_t s = 0; s < 25; ++s) {
        GenSpec g;
        g.k = 6;
        g.l = 6;
        g.uniform_hi = 8;
        g.alphabet_size = 8;
        g.distance = DistanceFn::absdiff();
        g.seed = 1000 + s;
        specs.push_back(std::move(g));
    }
    ExperimentReport report = run_ratio_experiment(specs, {Rational(1, 4), Rational(1)});
    REQUIRE(report.rows.size() == 50);
    CHECK(report.max_ratio >= 1);
    for (std::size_t t = 1; t < report.rows.size(); ++t)
        CHECK(report.rows[t - 1].seed <= report.rows[t].seed);
    for (const ExperimentRow& row : report.rows) {
        CHECK(row.ratio >= 1);
        CHECK(row.ratio <= 1 + row.eps);
        if (row.exact_value == 0) CHECK(row.approx_value == 0);
    }

    SUBCASE("hamming rows report small beta_star") {
        for (GenSpec& g : specs) g.distance = DistanceFn::hamming();
        ExperimentReport ham = run_ratio_experiment(specs, {Rational(1, 2)});
        for (const ExperimentRow& row : ham.rows) CHECK(row.beta_star <= 2);
    }
    SUBCASE("poly mode") {
        ExperimentReport poly = run_ratio_experiment(specs, {Rational(1, 4)}, true);
        for (const ExperimentRow& row : poly.rows) CHECK(row.ratio <= Rational(5, 4));
    }
    SUBCASE("csv shape") {
        std::string csv = report_to_csv(report);
        CHECK(csv.find("seed,k,l,m,n,eps,exact,approx,ratio,vertices,edges,beta_star,"
                       "t_exact_ms,t_approx_ms") != std::string::npos);
        std::size_t lines = static_cast<std::size_t>(
            std::count(csv.begin(), csv.end(), '\n'));
        CHECK(lines == report.rows.size() + 2);  // comment + header + rows
    }
}

TEST_CASE("scaling experiment") {
    GenSpec base;
    base.uniform_lo = 1;
    base.uniform_hi = 1;
    base.alphabet_size = 6;
    base.distance = DistanceFn::absdiff();
    base.seed = 9;
    SUBCASE("degenerate single-cell instance") {
        ExperimentReport r = run_scaling_experiment({1}, Rational(1, 2), base);
        REQUIRE(r.rows.size() == 1);
        CHECK(r.rows[0].edges == 0);
    }
    SUBCASE("doubling run counts roughly quadruples the graph") {
        base.uniform_lo = 3;
        base.uniform_hi = 3;
        ExperimentReport r = run_scaling_experiment({25, 50}, Rational(1, 2), base);
        REQUIRE(r.rows.size() == 2);
        double growth = static_cast<double>(r.rows[1].edges) /
                        static_cast<double>(r.rows[0].edges);
        CHECK(growth > 2.5);
        CHECK(growth < 6.5);
        CHECK(r.edge_fit_c > 0.0);
        CHECK(r.header_note.find("measured_c=") != std::string::npos);
    }
}
