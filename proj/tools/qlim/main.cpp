#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "qlim/parallel.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qlim - quantum limits of interferometric position measurement"};
    app.require_subcommand(1);

    struct Args {
        std::string config;
        std::string out;
        std::uint64_t seed = 0;
        bool seed_set = false;
        unsigned threads = qlim::default_thread_count();
    };

    auto add_common = [](CLI::App* cmd, Args& a) {
        cmd->add_option("--config", a.config, "JSON config path")->required();
        cmd->add_option("--out", a.out, "output path")->required();
        cmd->add_option("--seed", a.seed, "seed override")->each([&a](const std::string&) {
            a.seed_set = true;
        });
        cmd->add_option("--threads", a.threads, "worker thread count");
    };

    Args args;
    CLI::App* budget = app.add_subcommand("budget", "noise budget CSV over the grid");
    CLI::App* optimize = app.add_subcommand("optimize", "per-frequency squeezing strategy CSV");
    CLI::App* fdt = app.add_subcommand("fdt", "fluctuation-dissipation verification report");
    CLI::App* gw_mc = app.add_subcommand("gw-mc", "Monte-Carlo gravitational distance noise");
    CLI::App* synth = app.add_subcommand("synth", "synthesize a surrogate time series");
    for (CLI::App* cmd : {budget, optimize, fdt, gw_mc, synth}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    const qlim::cli::LoadResult loaded = qlim::cli::load_config(args.config);
    if (!loaded.config) {
        std::cerr << qlim::cli::validation_report_json(loaded.errors) << "\n";
        return qlim::cli::kExitValidation;
    }

    qlim::cli::CliOptions opt;
    opt.out = args.out;
    if (args.seed_set) opt.seed = args.seed;
    opt.threads = args.threads;

    if (budget->parsed()) return qlim::cli::run_budget(*loaded.config, opt);
    if (optimize->parsed()) return qlim::cli::run_optimize(*loaded.config, opt);
    if (fdt->parsed()) return qlim::cli::run_fdt(*loaded.config, opt);
    if (gw_mc->parsed()) return qlim::cli::run_gw_mc(*loaded.config, opt);
    if (synth->parsed()) return qlim::cli::run_synth(*loaded.config, opt);
    return qlim::cli::kExitValidation;
}
