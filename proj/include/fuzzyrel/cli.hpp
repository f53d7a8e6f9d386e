#pragma once

/**
 * @file cli.hpp
 * @brief Commands behind the `fuzzyrel` executable.
 *
 * Each command reads one JSON file, writes its report to `out` and
 * diagnostics to `err`, and returns the process exit code:
 * 0 success / consistent, 1 inconsistent (solve) or oracle disagreement,
 * 2 input error, 3 enumeration budget exceeded.
 */

#include <iosfwd>
#include <string>

#include "fuzzyrel/io.hpp"

namespace fuzzyrel::cli {

json solution_json(const SolutionSet& s);
json report_json(const ChebyshevReport& r);
json report_json(const DualChebyshevReport& r);
json learning_json(const LearningReport& r);
json rules_json(const RuleLearningResult& r);

int cmd_solve(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_chebyshev(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_learn(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_rules(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace fuzzyrel::cli
