#include "rledtw/job.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "rledtw/bench.hpp"
#include "rledtw/dtw.hpp"
#include "rledtw/snap_graph.hpp"

namespace rledtw {

namespace {

using nlohmann::json;

// exit codes: 2 usage, 3 io, 4 parse, 5 distance, 6 epsilon, 7 letter,
// 8 too-large, 9 internal, 10 ratio-violation
[[noreturn]] void fail(std::string code, std::string message, int exit_code) {
    throw JobError{std::move(code), std::move(message), exit_code};
}

std::string read_file(const std::string& path) {
    if (path.empty()) fail("usage", "missing input path", 2);
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail("io", "cannot read file: " + path, 3);
        buf << in.rdbuf();
    }
    return buf.str();
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

struct LetterMapper {
    // non-null only for matrix distances
    const std::unordered_map<std::string, Letter>* table = nullptr;

    Letter operator()(const std::string& token, const std::string& where) const {
        if (table) {
            auto it = table->find(token);
            if (it == table->end())
                fail("letter", where + ": letter not in distance matrix: " + token, 7);
            return it->second;
        }
        if (all_digits(token)) {
            errno = 0;
            long long v = std::strtoll(token.c_str(), nullptr, 10);
            if (errno != 0 || v > INT32_MAX)
                fail("parse", where + ": letter code out of range: " + token, 4);
            return static_cast<Letter>(v);
        }
        if (token.size() == 1) return static_cast<Letter>(static_cast<unsigned char>(token[0]));
        fail("parse", where + ": unparseable letter token: " + token, 4);
    }
};

RleString parse_string_file(const std::string& path, const std::string& format,
                            const LetterMapper& map) {
    std::string text = read_file(path);
    if (format == "raw") {
        std::vector<Letter> letters;
        for (char c : text) {
            if (c == '\n' || c == '\r') continue;
            letters.push_back(map(std::string(1, c), path));
        }
        if (letters.empty()) fail("parse", path + ": empty input", 4);
        return rle_encode(letters);
    }
    if (format != "rle") fail("usage", "unknown input format: " + format, 2);
    std::vector<Run> runs;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream fields(trimmed);
        std::string token, count_str, extra;
        if (!(fields >> token >> count_str) || (fields >> extra))
            fail("parse", path + ":" + std::to_string(lineno) + ": expected '<letter> <count>'",
                 4);
        if (!all_digits(count_str))
            fail("parse", path + ":" + std::to_string(lineno) + ": bad run count: " + count_str,
                 4);
        long long count = std::strtoll(count_str.c_str(), nullptr, 10);
        if (count < 1)
            fail("parse", path + ":" + std::to_string(lineno) + ": run count must be positive",
                 4);
        runs.push_back({map(token, path + ":" + std::to_string(lineno)), count});
    }
    if (runs.empty()) fail("parse", path + ": empty input", 4);
    return RleString::from_runs(runs);
}

struct DistanceSetup {
    DistanceFn fn = DistanceFn::hamming();
    std::unordered_map<std::string, Letter> letters;  // matrix only
    bool has_table = false;
};

DistanceSetup build_distance(const std::string& spec) {
    DistanceSetup out;
    if (spec == "hamming") {
        out.fn = DistanceFn::hamming();
        return out;
    }
    if (spec == "absdiff") {
        out.fn = DistanceFn::absdiff();
        return out;
    }
    if (spec.rfind("matrix:", 0) == 0) {
        std::string path = spec.substr(7);
        json doc;
        try {
            doc = json::parse(read_file(path));
        } catch (const json::exception& e) {
            fail("parse", path + ": " + e.what(), 4);
        }
        if (!doc.is_object() || !doc.contains("letters") || !doc.contains("matrix"))
            fail("distance", path + ": expected {\"letters\": [...], \"matrix\": [[...]]}", 5);
        std::vector<std::vector<long long>> table;
        try {
            table = doc["matrix"].get<std::vector<std::vector<long long>>>();
            Letter idx = 0;
            for (const auto& entry : doc["letters"])
                out.letters[entry.get<std::string>()] = idx++;
        } catch (const json::exception& e) {
            fail("distance", path + ": " + e.what(), 5);
        }
        if (out.letters.size() != table.size())
            fail("distance", path + ": letters/matrix size mismatch", 5);
        try {
            out.fn = DistanceFn::matrix(std::move(table));
        } catch (const std::invalid_argument& e) {
            fail("distance", path + ": " + std::string(e.what()), 5);
        }
        out.has_table = true;
        return out;
    }
    fail("distance", "unknown distance spec: " + spec, 5);
}

Rational parse_epsilon(const JobSpec& spec) {
    if (!spec.epsilon) fail("epsilon", "this command requires --epsilon", 6);
    Rational eps;
    try {
        eps = rational_from_decimal(*spec.epsilon);
    } catch (const std::exception& e) {
        fail("epsilon", "bad epsilon: " + std::string(e.what()), 6);
    }
    if (eps <= 0) fail("epsilon", "epsilon must be positive", 6);
    return eps;
}

json stats_json(const RleString& x, const RleString& y, const DtwStats& s) {
    return json{{"k", x.run_count()},   {"l", y.run_count()},
                {"m", x.total_length()}, {"n", y.total_length()},
                {"vertices", s.vertices}, {"edges", s.edges},
                {"beta_star", s.beta_star}, {"elapsed_ms", s.elapsed_ms}};
}

std::string result_json(const RleString& x, const RleString& y, const DtwResult& r) {
    json out{{"value", rational_to_string(r.value)},
             {"mode", mode_name(r.mode)},
             {"epsilon", r.epsilon ? json(rational_to_string(*r.epsilon)) : json(nullptr)},
             {"stats", stats_json(x, y, r.stats)}};
    return out.dump();
}

// auto mode: constant-bounded families (hamming, fixed matrix) go direct;
// absdiff grows with the alphabet, so it defaults to the poly split.
bool use_poly_mode(const JobSpec& spec, const DistanceFn& d) {
    if (spec.mode == "direct") return false;
    if (spec.mode == "poly") return true;
    if (spec.mode != "auto") fail("usage", "unknown mode: " + spec.mode, 2);
    return d.kind() == DistanceFn::Kind::AbsDiff;
}

std::string run_gen(const JobSpec& spec) {
    GenSpec gen;
    gen.k = spec.gen_k;
    gen.l = spec.gen_l;
    gen.uniform_lo = spec.gen_len_lo;
    gen.uniform_hi = spec.gen_len_hi;
    gen.alphabet_size = spec.gen_alphabet;
    gen.seed = spec.seed;
    std::pair<RleString, RleString> inst;
    try {
        inst = generate_instance(gen);
    } catch (const std::invalid_argument& e) {
        fail("usage", e.what(), 2);
    }
    if (spec.out_x.empty() || spec.out_y.empty())
        fail("usage", "gen requires --out-x and --out-y", 2);
    auto write_rle = [](const std::string& path, const RleString& s) {
        std::ofstream out(path);
        if (!out) fail("io", "cannot write file: " + path, 3);
        for (const Run& run : s.runs()) out << run.letter << ' ' << run.count << '\n';
    };
    write_rle(spec.out_x, inst.first);
    write_rle(spec.out_y, inst.second);
    json out{{"written", {{"x", spec.out_x}, {"y", spec.out_y}}},
             {"k", inst.first.run_count()},
             {"l", inst.second.run_count()},
             {"m", inst.first.total_length()},
             {"n", inst.second.total_length()}};
    return out.dump();
}

std::string run_bench(const JobSpec& spec) {
    DistanceSetup dist = build_distance(spec.distance_spec);
    Rational eps = parse_epsilon(spec);
    if (spec.bench_kind == "ratio") {
        std::vector<GenSpec> specs;
        for (std::int64_t t = 0; t < spec.bench_count; ++t) {
            GenSpec g;
            g.k = spec.gen_k;
            g.l = spec.gen_l;
            g.uniform_lo = spec.gen_len_lo;
            g.uniform_hi = spec.gen_len_hi;
            g.alphabet_size = spec.gen_alphabet;
            g.distance = dist.fn;
            g.seed = spec.seed + static_cast<std::uint64_t>(t);
            specs.push_back(std::move(g));
        }
        bool poly = use_poly_mode(spec, dist.fn) && eps < 1;
        try {
            return report_to_csv(run_ratio_experiment(specs, {eps}, poly));
        } catch (const std::runtime_error& e) {
            fail("ratio-violation", e.what(), 10);
        }
    }
    if (spec.bench_kind == "scaling") {
        std::vector<std::int64_t> ks;
        std::istringstream in(spec.k_list);
        std::string part;
        while (std::getline(in, part, ',')) {
            if (!all_digits(part)) fail("usage", "bad k list entry: " + part, 2);
            ks.push_back(std::strtoll(part.c_str(), nullptr, 10));
        }
        if (ks.empty()) fail("usage", "empty k list", 2);
        GenSpec base;
        base.uniform_lo = spec.gen_len_lo;
        base.uniform_hi = spec.gen_len_hi;
        base.alphabet_size = spec.gen_alphabet;
        base.distance = dist.fn;
        base.seed = spec.seed;
        return report_to_csv(run_scaling_experiment(ks, eps, base));
    }
    fail("usage", "unknown bench kind: " + spec.bench_kind, 2);
}

std::string run_dump(const JobSpec& spec, const RleString& x, const RleString& y,
                     const DistanceFn& d) {
    if (!spec.dump) fail("usage", "dump requires --dump grid|graph", 2);
    BlockGrid grid = build_block_grid(x, y, d);
    if (*spec.dump == "grid") {
        json costs = json::array(), beta_h = json::array(), beta_v = json::array();
        for (std::int64_t i = 1; i <= grid.k(); ++i) {
            json crow = json::array(), hrow = json::array(), vrow = json::array();
            for (std::int64_t j = 1; j <= grid.l(); ++j) {
                crow.push_back(rational_to_string(grid.cost(i, j)));
                hrow.push_back(grid.beta_h(i, j));
                vrow.push_back(grid.beta_v(i, j));
            }
            costs.push_back(std::move(crow));
            beta_h.push_back(std::move(hrow));
            beta_v.push_back(std::move(vrow));
        }
        BetaStats bs = beta_stats(grid);
        json out{{"k", grid.k()},         {"l", grid.l()},   {"m", grid.m()},
                 {"n", grid.n()},         {"costs", costs},  {"beta_h", beta_h},
                 {"beta_v", beta_v},      {"beta_star", bs.beta_star}};
        return out.dump();
    }
    if (*spec.dump == "graph") {
        Rational eps = parse_epsilon(spec);
        GeomLadder ladder = build_ladder(eps, std::max(grid.m(), grid.n()));
        ApproxGraph g = build_edges(grid, generate_snap_points(grid, ladder), ladder);
        json vertices = json::array();
        for (const Point& p : g.vertices) vertices.push_back(json::array({p.i, p.j}));
        json edges = json::array();
        for (const auto& e : g.edges)
            edges.push_back(json::array(
                {e.from, e.to, e.w.get_str(), static_cast<int>(e.kind) + 1}));
        json out{{"den", g.den.get_str()}, {"source", g.source},   {"sink", g.sink},
                 {"vertices", vertices},   {"edges", edges}};
        return out.dump();
    }
    fail("usage", "unknown dump target: " + *spec.dump, 2);
}

}  // namespace

std::tuple<RleString, RleString, DistanceFn> parse_inputs(const JobSpec& spec) {
    DistanceSetup dist = build_distance(spec.distance_spec);
    LetterMapper map;
    if (dist.has_table) map.table = &dist.letters;
    RleString x = parse_string_file(spec.x_path, spec.input_format, map);
    RleString y = parse_string_file(spec.y_path, spec.input_format, map);
    return {std::move(x), std::move(y), std::move(dist.fn)};
}

JobResult run_job(const JobSpec& spec) {
    try {
        if (spec.command == "gen") return {0, run_gen(spec)};
        if (spec.command == "bench") return {0, run_bench(spec)};

        auto [x, y, d] = parse_inputs(spec);
        if (spec.command == "dump") return {0, run_dump(spec, x, y, d)};
        if (spec.command == "exact") {
            try {
                return {0, result_json(x, y, exact_dtw_dp(x, y, d))};
            } catch (const std::invalid_argument& e) {
                fail("too-large", e.what(), 8);
            }
        }
        if (spec.command == "approx") {
            Rational eps = parse_epsilon(spec);
            if (use_poly_mode(spec, d)) {
                try {
                    return {0, result_json(x, y, approx_dtw_poly(x, y, d, eps))};
                } catch (const std::invalid_argument& e) {
                    fail("epsilon", e.what(), 6);
                }
            }
            return {0, result_json(x, y, approx_dtw(x, y, d, eps))};
        }
        fail("usage", "unknown command: " + spec.command, 2);
    } catch (const JobError& e) {
        json out{{"error", {{"code", e.code}, {"message", e.message}}}};
        return {e.exit_code, out.dump()};
    } catch (const std::exception& e) {
        json out{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        return {9, out.dump()};
    }
}

}  // namespace rledtw
