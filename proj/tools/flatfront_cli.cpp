#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flatfront/commands.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::string grid;
    double tol_rank = -1.0;
    bool strict_inflection = false;
    bool lax_inflection = false;
    unsigned seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--config", opts.config_path, "Scene config file (JSON)")
        ->required();
    sub->add_option("--out", opts.out_dir, "Output directory override");
    sub->add_option("--grid", opts.grid, "Grid override, NxM");
    sub->add_option("--tol-rank", opts.tol_rank, "Rank threshold override");
    sub->add_flag("--strict-inflection", opts.strict_inflection,
                  "Fail on inflection points of the MU directrix");
    sub->add_flag("--no-strict-inflection", opts.lax_inflection,
                  "Only warn on inflection points");
    sub->add_option("--seed", opts.seed, "Seed for randomized suites")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
}

flatfront::SceneConfig load(const CommonOpts& opts) {
    flatfront::SceneConfig cfg = flatfront::parse_config_file(opts.config_path);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (!opts.grid.empty()) {
        int nt = 0, nw = 0;
        if (std::sscanf(opts.grid.c_str(), "%dx%d", &nt, &nw) != 2 || nt < 2 ||
            nw < 2)
            throw flatfront::ConfigError("--grid must look like 256x64");
        cfg.grid.nt = nt;
        cfg.grid.nw = nw;
    }
    if (opts.tol_rank > 0.0) cfg.rank_tol = opts.tol_rank;
    if (opts.strict_inflection) cfg.strict_inflection = true;
    if (opts.lax_inflection) cfg.strict_inflection = false;
    if (opts.seed_set) cfg.seed = opts.seed;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat front construction and verification"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* build = app.add_subcommand("build", "Sample meshes and write a report");
    CLI::App* verify = app.add_subcommand("verify", "Run the verification checks");
    CLI::App* theorem =
        app.add_subcommand("theorem", "Singular-set non-compactness verdict (n >= 3)");
    CLI::App* mu = app.add_subcommand("mu", "Closure and singular-point count (n = 2)");
    for (CLI::App* sub : {build, verify, theorem, mu}) add_common(sub, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        const flatfront::SceneConfig cfg = load(opts);
        flatfront::CommandResult res;
        if (build->parsed())
            res = flatfront::cmd_build(cfg);
        else if (verify->parsed())
            res = flatfront::cmd_verify(cfg);
        else if (theorem->parsed())
            res = flatfront::cmd_theorem(cfg);
        else
            res = flatfront::cmd_mu(cfg);
        std::cout << flatfront::report_to_string(res.report);
        return res.exit_code;
    } catch (const flatfront::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const flatfront::FlatFrontError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
