#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rledtw/dtw.hpp"
#include "rledtw/metric.hpp"
#include "rledtw/rle.hpp"

namespace rledtw {

// Recipe for one synthetic instance pair. All randomness is derived from
// the seed, so a spec generates the same pair every time.
struct GenSpec {
    std::int64_t k = 1;  // run count of x
    std::int64_t l = 1;  // run count of y

    enum class LengthDist { Uniform, Geometric };
    LengthDist length_dist = LengthDist::Uniform;
    std::int64_t uniform_lo = 1;
    std::int64_t uniform_hi = 10;
    double geometric_p = 0.5;

    std::int64_t alphabet_size = 4;
    DistanceFn distance = DistanceFn::absdiff();
    std::uint64_t seed = 0;
};

// Generates (x, y) with exactly k and l maximal runs: adjacent run letters
// are forced distinct. Throws std::invalid_argument when alphabet_size < 2
// but more than one run is requested.
std::pair<RleString, RleString> generate_instance(const GenSpec& spec);

struct ExperimentRow {
    std::uint64_t seed;
    std::int64_t k, l, m, n;
    Rational eps;
    Rational exact_value;
    Rational approx_value;
    Rational ratio;  // approx/exact; 1 when exact == 0
    std::int64_t vertices, edges, beta_star;
    double t_exact_ms, t_approx_ms;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;  // sorted by (seed, eps)
    Rational max_ratio{1};
    Rational mean_ratio{1};
    double edge_fit_c = 0.0;  // max measured |E| / (k*l*beta*log^2_{1+eps}(m+n))
    std::string header_note;
};

// Runs exact and approximate DTW on every (spec, eps) pair and checks the
// sandwich on each row; a violation aborts with the offending seed/eps in
// the exception message. use_poly switches the approximation entry point.
ExperimentReport run_ratio_experiment(const std::vector<GenSpec>& specs,
                                      const std::vector<Rational>& eps_list,
                                      bool use_poly = false);

// Measures graph sizes for k = l growing over k_list at fixed eps, and
// records the worst observed constant against the k*l*beta*log^2 bound.
// The exact oracle only runs on instances under the given cell cap.
ExperimentReport run_scaling_experiment(const std::vector<std::int64_t>& k_list,
                                        const Rational& eps, GenSpec base,
                                        std::int64_t exact_cell_cap = 25'000'000);

std::string report_to_csv(const ExperimentReport& report);

}  // namespace rledtw
