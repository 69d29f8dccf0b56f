#include "rledtw/dtw.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rledtw {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::ExactDp: return "exact-dp";
        case Mode::ApproxDirect: return "approx-direct";
        case Mode::ApproxPoly: return "approx-poly";
        case Mode::ApproxHamming: return "approx-hamming";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Two-row DP over (outer x inner). The per-run cost row is computed once
// per outer run and reused across its repetitions.
template <typename Cost, typename Eval>
Cost dp_value(const RleString& outer, const RleString& inner, Eval eval) {
    const auto nin = static_cast<std::size_t>(inner.total_length());
    std::vector<Letter> in = rle_decode(inner);
    std::vector<Cost> prev(nin), cur(nin), drow(nin);
    bool first_row = true;
    for (const Run& run : outer.runs()) {
        for (std::size_t j = 0; j < nin; ++j) drow[j] = eval(run.letter, in[j]);
        for (std::int64_t rep = 0; rep < run.count; ++rep) {
            if (first_row) {
                cur[0] = drow[0];
                for (std::size_t j = 1; j < nin; ++j) cur[j] = drow[j] + cur[j - 1];
                first_row = false;
            } else {
                cur[0] = drow[0] + prev[0];
                for (std::size_t j = 1; j < nin; ++j)
                    cur[j] = drow[j] + std::min({prev[j], prev[j - 1], cur[j - 1]});
            }
            std::swap(prev, cur);
        }
    }
    return prev[nin - 1];
}

}  // namespace

DtwResult exact_dtw_dp(const RleString& x, const RleString& y, const DistanceFn& d,
                       std::int64_t cell_cap) {
    const std::int64_t m = x.total_length(), n = y.total_length();
    if (m > cell_cap / n) throw std::invalid_argument("instance too large for exact DP");
    auto t0 = Clock::now();
    const RleString& outer = m >= n ? x : y;
    const RleString& inner = m >= n ? y : x;
    const bool outer_is_x = m >= n;
    DtwResult res;
    if (d.integral()) {
        long long v = dp_value<long long>(outer, inner, [&](Letter o, Letter i) {
            return outer_is_x ? d.eval_int(o, i) : d.eval_int(i, o);
        });
        res.value = rational_of(v);
    } else {
        res.value = dp_value<Rational>(
            outer, inner, [&](Letter o, Letter i) { return outer_is_x ? d(o, i) : d(i, o); });
    }
    res.mode = Mode::ExactDp;
    res.stats.elapsed_ms = ms_since(t0);
    return res;
}

Rational dtw_run_vs_string(Letter a0, std::int64_t m, const RleString& y, const DistanceFn& d) {
    if (m < 1) throw std::invalid_argument("run length must be positive");
    const std::int64_t n = y.total_length();
    Rational sum(0);
    Rational min_cost;
    bool have_min = false;
    for (const Run& run : y.runs()) {
        Rational c = d(a0, run.letter);
        sum += Rational(run.count) * c;
        if (!have_min || c < min_cost) {
            min_cost = c;
            have_min = true;
        }
    }
    if (m > n) sum += Rational(m - n) * min_cost;
    return sum;
}

namespace {

DtwResult approx_core(const RleString& x, const RleString& y, const DistanceFn& d,
                      const Rational& graph_eps, Mode mode, const Rational& report_eps) {
    auto t0 = Clock::now();
    BlockGrid grid = build_block_grid(x, y, d);
    GeomLadder ladder = build_ladder(graph_eps, std::max(grid.m(), grid.n()));
    ApproxGraph g = build_edges(grid, generate_snap_points(grid, ladder), ladder);
    BigInt sp = shortest_path_dag(g);
    DtwResult res;
    res.value = Rational(sp, grid.den());
    res.value.canonicalize();
    res.value += d(x.runs().back().letter, y.runs().back().letter);
    res.mode = mode;
    res.epsilon = report_eps;
    res.stats.vertices = static_cast<std::int64_t>(g.vertices.size());
    res.stats.edges = static_cast<std::int64_t>(g.edges.size());
    res.stats.beta_star = beta_stats(grid).beta_star;
    res.stats.elapsed_ms = ms_since(t0);
    return res;
}

}  // namespace

DtwResult approx_dtw(const RleString& x, const RleString& y, const DistanceFn& d,
                     const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    return approx_core(x, y, d, epsilon, Mode::ApproxDirect, epsilon);
}

DtwResult approx_dtw_poly(const RleString& x, const RleString& y, const DistanceFn& d,
                          const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (epsilon >= 1) throw std::invalid_argument("poly mode requires epsilon < 1");
    Rational eps1 = epsilon / 2 - epsilon * epsilon / 2;
    Rational eps2 = epsilon / 2;
    DistanceFn rounded = round_distance_fn(d, eps1);
    return approx_core(x, y, rounded, eps2, Mode::ApproxPoly, epsilon);
}

DtwResult approx_dtw_hamming(const RleString& x, const RleString& y, const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    return approx_core(x, y, DistanceFn::hamming(), epsilon, Mode::ApproxHamming, epsilon);
}

std::vector<PathComponent> decompose_full_path(const WarpPath& p, const BlockGrid& grid) {
    const auto& pts = p.points;
    if (pts.empty() || pts.front() != Point{1, 1} || pts.back() != Point{grid.m(), grid.n()})
        throw std::invalid_argument("not a warping path");
    for (std::size_t t = 1; t < pts.size(); ++t) {
        std::int64_t di = pts[t].i - pts[t - 1].i, dj = pts[t].j - pts[t - 1].j;
        if (di < 0 || dj < 0 || di > 1 || dj > 1 || (di == 0 && dj == 0))
            throw std::invalid_argument("not a warping path");
    }

    std::vector<PathComponent> comps;
    std::size_t r = 0;
    bool h = true;
    while (true) {
        std::size_t e = r;
        if (h) {
            auto [I, J] = block_of_point(grid, pts[r].i, pts[r].j);
            (void)J;
            const std::int64_t lim = grid.col_hi(I);
            while (e + 1 < pts.size() && pts[e + 1].i <= lim) ++e;
        } else {
            auto [I, J] = block_of_point(grid, pts[r].i, pts[r].j);
            (void)I;
            const std::int64_t lim = grid.row_hi(J);
            while (e + 1 < pts.size() && pts[e + 1].j <= lim) ++e;
        }
        comps.push_back({r, e, h});
        if (e + 1 == pts.size()) break;
        r = e + 1;
        h = !h;
    }
    return comps;
}

}  // namespace rledtw
