#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

#include "rledtw/metric.hpp"
#include "rledtw/rle.hpp"

namespace rledtw {

// One CLI invocation, decoupled from flag parsing so it can be tested
// directly. command is one of exact/approx/gen/bench/dump.
struct JobSpec {
    std::string command = "exact";
    std::string x_path;  // "-" reads standard input
    std::string y_path;
    std::string input_format = "raw";        // raw | rle
    std::string distance_spec = "hamming";   // hamming | absdiff | matrix:<path>
    std::string mode = "auto";               // direct | poly | auto
    std::optional<std::string> epsilon;      // decimal or p/q
    std::optional<std::string> dump;         // grid | graph

    // gen / bench knobs
    std::uint64_t seed = 0;
    std::int64_t gen_k = 4, gen_l = 4;
    std::int64_t gen_len_lo = 1, gen_len_hi = 10;
    std::int64_t gen_alphabet = 4;
    std::string out_x, out_y;                // gen output paths
    std::string bench_kind = "ratio";        // ratio | scaling
    std::int64_t bench_count = 10;
    std::string k_list = "8,16,32";          // scaling sizes
};

// Structured failure with a stable machine-readable code; run_job turns it
// into an error JSON object and a distinct exit code.
struct JobError {
    std::string code;
    std::string message;
    int exit_code;
};

struct JobResult {
    int exit_code = 0;
    std::string output;  // JSON (or CSV for bench) on success, error JSON otherwise
};

// Loads and parses both inputs plus the distance function. Throws JobError.
std::tuple<RleString, RleString, DistanceFn> parse_inputs(const JobSpec& spec);

JobResult run_job(const JobSpec& spec);

}  // namespace rledtw
