// Command-line front end for the fuzzy relational equation library.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzzyrel/cli.hpp"

namespace cli = fuzzyrel::cli;

int main(int argc, char** argv) {
    CLI::App app{"Solve and approximate max-min / min-max fuzzy relational equations"};
    app.require_subcommand(1);

    cli::Options opt;
    std::string format = "text";
    std::string approximation = "greatest";
    std::string solution = "greatest";
    app.add_option("--tolerance", opt.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-enumeration", opt.max_enumeration, "cap on covering combinations");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--skip-minimal", opt.skip_minimal, "skip enumeration of minimal/maximal approximations");

    std::string path;
    auto* solve = app.add_subcommand("solve", "consistency, greatest/lowest and extremal solutions");
    auto* cheb = app.add_subcommand("chebyshev", "Chebyshev distance and extremal approximations");
    auto* learn = app.add_subcommand("learn", "learn a max-min weight matrix from training pairs");
    auto* rules = app.add_subcommand("rules", "learn rule parameters from stacked min-max systems");
    auto* check = app.add_subcommand("oracle-check", "compare analytical results with brute force");
    for (auto* sub : {solve, cheb, learn, rules, check}) sub->add_option("file", path, "input JSON file")->required();
    learn->add_option("--approximation", approximation, "Chebyshev approximation per output")
        ->check(CLI::IsMember({"greatest", "first-minimal"}));
    learn->add_option("--solution", solution, "solution taken per output")
        ->check(CLI::IsMember({"greatest", "first-minimal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::input_error;
    }

    opt.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::text;
    opt.approximation = approximation == "greatest" ? fuzzyrel::ApproximationChoice::greatest
                                                    : fuzzyrel::ApproximationChoice::first_minimal;
    opt.solution = solution == "greatest" ? fuzzyrel::SolutionChoice::greatest
                                          : fuzzyrel::SolutionChoice::first_minimal;

    if (*solve) return cli::cmd_solve(opt, path, std::cout, std::cerr);
    if (*cheb) return cli::cmd_chebyshev(opt, path, std::cout, std::cerr);
    if (*learn) return cli::cmd_learn(opt, path, std::cout, std::cerr);
    if (*rules) return cli::cmd_rules(opt, path, std::cout, std::cerr);
    return cli::cmd_oracle_check(opt, path, std::cout, std::cerr);
}
