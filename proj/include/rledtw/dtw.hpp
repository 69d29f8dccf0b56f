#pragma once

#include <optional>
#include <vector>

#include "rledtw/block_grid.hpp"
#include "rledtw/metric.hpp"
#include "rledtw/rational.hpp"
#include "rledtw/rle.hpp"
#include "rledtw/snap_graph.hpp"

namespace rledtw {

enum class Mode { ExactDp, ApproxDirect, ApproxPoly, ApproxHamming };

const char* mode_name(Mode m);

struct DtwStats {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t beta_star = 0;
    double elapsed_ms = 0.0;
};

struct DtwResult {
    Rational value;
    Mode mode = Mode::ExactDp;
    std::optional<Rational> epsilon;
    DtwStats stats;
};

struct WarpPath {
    std::vector<Point> points;
};

// One component of a full-path decomposition: the inclusive index range
// [begin, end] into the path's point list, alternating h-to-v / v-to-h.
struct PathComponent {
    std::size_t begin;
    std::size_t end;
    bool h_to_v;
};

// Classic O(mn) dynamic program, two rolling rows over the shorter string.
// Throws std::invalid_argument("instance too large for exact DP") past the
// cell cap (default 10^8).
DtwResult exact_dtw_dp(const RleString& x, const RleString& y, const DistanceFn& d,
                       std::int64_t cell_cap = 100'000'000);

// DTW of a single-run string a0^m against y, in O(||y||) closed form.
Rational dtw_run_vs_string(Letter a0, std::int64_t m, const RleString& y, const DistanceFn& d);

// (1+eps)-approximation via the snap-point DAG; any eps > 0.
DtwResult approx_dtw(const RleString& x, const RleString& y, const DistanceFn& d,
                     const Rational& epsilon);

// Poly-bounded variant: rounds the distance up to powers of 1+eps1 with
// eps1 = eps/2 - eps^2/2, then runs approx_dtw with eps2 = eps/2. Requires
// 0 < eps < 1 and an integer-valued base distance.
DtwResult approx_dtw_poly(const RleString& x, const RleString& y, const DistanceFn& d,
                          const Rational& epsilon);

// Direct mode specialized to the Hamming distance (beta* <= 2 there, so
// the graph stays near-quadratic in the run counts for every eps).
DtwResult approx_dtw_hamming(const RleString& x, const RleString& y, const Rational& epsilon);

// Splits a full warping path into maximal alternating components: each
// h-to-v component stays within one x-run and runs from a lower-boundary
// point to a right-boundary point; v-to-h mirrors this within one y-run.
// Throws std::invalid_argument("not a warping path") on invalid input.
std::vector<PathComponent> decompose_full_path(const WarpPath& p, const BlockGrid& grid);

}  // namespace rledtw
