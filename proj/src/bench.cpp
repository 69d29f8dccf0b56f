#include "rledtw/bench.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rledtw {

namespace {

RleString gen_string(std::mt19937_64& rng, std::int64_t runs, const GenSpec& spec) {
    std::vector<Run> out;
    out.reserve(static_cast<std::size_t>(runs));
    Letter prev = -1;
    for (std::int64_t r = 0; r < runs; ++r) {
        Letter letter;
        if (prev < 0) {
            letter = static_cast<Letter>(
                std::uniform_int_distribution<std::int64_t>(0, spec.alphabet_size - 1)(rng));
        } else {
            // draw from the alphabet minus the previous letter
            auto pick =
                std::uniform_int_distribution<std::int64_t>(0, spec.alphabet_size - 2)(rng);
            letter = static_cast<Letter>(pick >= prev ? pick + 1 : pick);
        }
        std::int64_t len;
        if (spec.length_dist == GenSpec::LengthDist::Uniform) {
            len = std::uniform_int_distribution<std::int64_t>(spec.uniform_lo,
                                                              spec.uniform_hi)(rng);
        } else {
            len = 1 + std::geometric_distribution<std::int64_t>(spec.geometric_p)(rng);
        }
        out.push_back({letter, len});
        prev = letter;
    }
    return RleString::from_runs(out);
}

double log1p_eps(const Rational& eps, double v) {
    return std::log(v) / std::log1p(eps.get_d());
}

}  // namespace

std::pair<RleString, RleString> generate_instance(const GenSpec& spec) {
    if (spec.k < 1 || spec.l < 1) throw std::invalid_argument("run counts must be positive");
    if (spec.alphabet_size < 1) throw std::invalid_argument("alphabet must be nonempty");
    if (spec.alphabet_size < 2 && (spec.k > 1 || spec.l > 1))
        throw std::invalid_argument("alphabet of size 1 cannot produce multiple runs");
    if (spec.length_dist == GenSpec::LengthDist::Uniform &&
        (spec.uniform_lo < 1 || spec.uniform_hi < spec.uniform_lo))
        throw std::invalid_argument("bad uniform length range");
    std::mt19937_64 rng(spec.seed);
    RleString x = gen_string(rng, spec.k, spec);
    RleString y = gen_string(rng, spec.l, spec);
    return {std::move(x), std::move(y)};
}

ExperimentReport run_ratio_experiment(const std::vector<GenSpec>& specs,
                                      const std::vector<Rational>& eps_list, bool use_poly) {
    ExperimentReport report;
    report.header_note = use_poly ? "mode=approx-poly" : "mode=approx-direct";
    for (const GenSpec& spec : specs) {
        auto [x, y] = generate_instance(spec);
        DtwResult exact = exact_dtw_dp(x, y, spec.distance);
        for (const Rational& eps : eps_list) {
            DtwResult approx = use_poly ? approx_dtw_poly(x, y, spec.distance, eps)
                                        : approx_dtw(x, y, spec.distance, eps);
            ExperimentRow row;
            row.seed = spec.seed;
            row.k = x.run_count();
            row.l = y.run_count();
            row.m = x.total_length();
            row.n = y.total_length();
            row.eps = eps;
            row.exact_value = exact.value;
            row.approx_value = approx.value;
            bool ok;
            if (exact.value == 0) {
                ok = approx.value == 0;
                row.ratio = 1;
            } else {
                row.ratio = approx.value / exact.value;
                ok = row.ratio >= 1 && row.ratio <= 1 + eps;
            }
            if (!ok) {
                std::ostringstream msg;
                msg << "ratio violation: seed=" << spec.seed << " k=" << spec.k
                    << " l=" << spec.l << " eps=" << rational_to_string(eps)
                    << " exact=" << rational_to_string(exact.value)
                    << " approx=" << rational_to_string(approx.value);
                throw std::runtime_error(msg.str());
            }
            row.vertices = approx.stats.vertices;
            row.edges = approx.stats.edges;
            row.beta_star = approx.stats.beta_star;
            row.t_exact_ms = exact.stats.elapsed_ms;
            row.t_approx_ms = approx.stats.elapsed_ms;
            report.rows.push_back(std::move(row));
        }
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ExperimentRow& a, const ExperimentRow& b) {
                         if (a.seed != b.seed) return a.seed < b.seed;
                         return a.eps < b.eps;
                     });
    Rational sum(0);
    for (const ExperimentRow& row : report.rows) {
        report.max_ratio = std::max(report.max_ratio, row.ratio);
        sum += row.ratio;
    }
    if (!report.rows.empty())
        report.mean_ratio = sum / Rational(static_cast<long>(report.rows.size()));
    return report;
}

ExperimentReport run_scaling_experiment(const std::vector<std::int64_t>& k_list,
                                        const Rational& eps, GenSpec base,
                                        std::int64_t exact_cell_cap) {
    ExperimentReport report;
    for (std::int64_t k : k_list) {
        GenSpec spec = base;
        spec.k = k;
        spec.l = k;
        auto [x, y] = generate_instance(spec);
        ExperimentRow row{};
        row.seed = spec.seed;
        row.k = x.run_count();
        row.l = y.run_count();
        row.m = x.total_length();
        row.n = y.total_length();
        row.eps = eps;
        DtwResult approx = approx_dtw(x, y, spec.distance, eps);
        row.approx_value = approx.value;
        if (row.m <= exact_cell_cap / row.n) {
            DtwResult exact = exact_dtw_dp(x, y, spec.distance, exact_cell_cap);
            row.exact_value = exact.value;
            row.ratio = exact.value == 0 ? Rational(1) : approx.value / exact.value;
            row.t_exact_ms = exact.stats.elapsed_ms;
        } else {
            row.ratio = 0;  // exact oracle skipped
        }
        row.vertices = approx.stats.vertices;
        row.edges = approx.stats.edges;
        row.beta_star = approx.stats.beta_star;
        row.t_approx_ms = approx.stats.elapsed_ms;
        double logf = log1p_eps(eps, static_cast<double>(row.m + row.n));
        double bound = static_cast<double>(row.k) * static_cast<double>(row.l) *
                       static_cast<double>(row.beta_star) * logf * logf;
        if (bound > 0)
            report.edge_fit_c = std::max(report.edge_fit_c,
                                         static_cast<double>(row.edges) / bound);
        report.rows.push_back(std::move(row));
    }
    std::ostringstream note;
    note << "scaling eps=" << rational_to_string(eps) << " measured_c=" << report.edge_fit_c;
    report.header_note = note.str();
    for (const ExperimentRow& row : report.rows)
        report.max_ratio = std::max(report.max_ratio, row.ratio);
    return report;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    if (!report.header_note.empty()) out << "# " << report.header_note << "\n";
    out << "seed,k,l,m,n,eps,exact,approx,ratio,vertices,edges,beta_star,t_exact_ms,t_approx_ms\n";
    for (const ExperimentRow& row : report.rows) {
        out << row.seed << ',' << row.k << ',' << row.l << ',' << row.m << ',' << row.n << ','
            << rational_to_string(row.eps) << ',' << rational_to_string(row.exact_value) << ','
            << rational_to_string(row.approx_value) << ',' << rational_to_string(row.ratio)
            << ',' << row.vertices << ',' << row.edges << ',' << row.beta_star << ','
            << row.t_exact_ms << ',' << row.t_approx_ms << '\n';
    }
    return out.str();
}

}  // namespace rledtw
