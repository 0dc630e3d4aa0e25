#include <iostream>

#include "CLI11.hpp"
#include "fuzzylap/cli.hpp"

int main(int argc, char** argv) {
    fuzzylap::cli::RunOptions opts;
    std::string case_flag;
    std::size_t r_levels = 0, x_samples = 0;

    CLI::App app{"Solve a two-point fuzzy boundary value problem with the fuzzy Laplace transform"};
    app.add_option("problem", opts.problem_path, "problem file")->required();
    auto* case_opt = app.add_option("--case", case_flag, "differentiability case: 11, 22, 12, 21 or all (overrides the file)");
    auto* r_opt = app.add_option("--r-levels", r_levels, "number of membership levels in the output grid");
    auto* x_opt = app.add_option("--x-samples", x_samples, "number of x samples in the output grid");
    app.add_flag("--oracle", opts.oracle, "cross-check every branch against a finite-difference solve");
    app.add_option("--oracle-intervals", opts.oracle_intervals, "finite-difference intervals for --oracle");
    app.add_option("--out", opts.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fuzzylap::cli::kExitUsage;
    }
    if (case_opt->count() > 0) opts.case_override = case_flag;
    if (r_opt->count() > 0) opts.r_levels = r_levels;
    if (x_opt->count() > 0) opts.x_samples = x_samples;
    return fuzzylap::cli::run(opts, std::cout, std::cerr);
}
