#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rledtw/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"DTW on run-length encoded strings: exact DP and (1+eps)-approximation"};
    app.require_subcommand(1);

    rledtw::JobSpec spec;
    std::string epsilon, dump;

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--x", spec.x_path, "first string file (- for stdin)")->required();
        cmd->add_option("--y", spec.y_path, "second string file")->required();
        cmd->add_option("--format", spec.input_format, "raw|rle")
            ->check(CLI::IsMember({"raw", "rle"}));
        cmd->add_option("--delta", spec.distance_spec, "hamming|absdiff|matrix:<path>");
    };

    CLI::App* exact = app.add_subcommand("exact", "exact DTW via the quadratic DP");
    add_input_flags(exact);

    CLI::App* approx = app.add_subcommand("approx", "(1+eps)-approximate DTW");
    add_input_flags(approx);
    approx->add_option("--epsilon", epsilon, "approximation parameter")->required();
    approx->add_option("--mode", spec.mode, "direct|poly|auto")
        ->check(CLI::IsMember({"direct", "poly", "auto"}));

    CLI::App* gen = app.add_subcommand("gen", "generate a random RLE instance pair");
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--k", spec.gen_k, "run count of x");
    gen->add_option("--l", spec.gen_l, "run count of y");
    gen->add_option("--len-lo", spec.gen_len_lo, "min run length");
    gen->add_option("--len-hi", spec.gen_len_hi, "max run length");
    gen->add_option("--alphabet", spec.gen_alphabet, "alphabet size");
    gen->add_option("--out-x", spec.out_x, "output path for x (rle format)")->required();
    gen->add_option("--out-y", spec.out_y, "output path for y (rle format)")->required();

    CLI::App* bench = app.add_subcommand("bench", "ratio / scaling experiments (CSV)");
    bench->add_option("--kind", spec.bench_kind, "ratio|scaling")
        ->check(CLI::IsMember({"ratio", "scaling"}));
    bench->add_option("--count", spec.bench_count, "instance count (ratio)");
    bench->add_option("--k", spec.gen_k, "run count of x");
    bench->add_option("--l", spec.gen_l, "run count of y");
    bench->add_option("--k-list", spec.k_list, "comma-separated k=l sizes (scaling)");
    bench->add_option("--len-lo", spec.gen_len_lo, "min run length");
    bench->add_option("--len-hi", spec.gen_len_hi, "max run length");
    bench->add_option("--alphabet", spec.gen_alphabet, "alphabet size");
    bench->add_option("--delta", spec.distance_spec, "hamming|absdiff|matrix:<path>");
    bench->add_option("--epsilon", epsilon, "approximation parameter")->required();
    bench->add_option("--mode", spec.mode, "direct|poly|auto");
    bench->add_option("--seed", spec.seed, "base random seed");

    CLI::App* dumpcmd = app.add_subcommand("dump", "diagnostic dumps as JSON");
    add_input_flags(dumpcmd);
    dumpcmd->add_option("--dump", dump, "grid|graph")
        ->required()
        ->check(CLI::IsMember({"grid", "graph"}));
    dumpcmd->add_option("--epsilon", epsilon, "approximation parameter (graph dump)");

    CLI11_PARSE(app, argc, argv);

    spec.command = app.get_subcommands().front()->get_name();
    if (!epsilon.empty()) spec.epsilon = epsilon;
    if (!dump.empty()) spec.dump = dump;

    rledtw::JobResult res = rledtw::run_job(spec);
    std::cout << res.output << std::endl;
    return res.exit_code;
}
