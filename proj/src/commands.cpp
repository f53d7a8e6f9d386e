// Command implementations for the fuzzyrel executable.

#include "fuzzyrel/cli.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzyrel/oracle.hpp"

namespace fuzzyrel::cli {

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const OutOfUnitInterval& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const EnumerationBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const OracleBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget_exceeded;
    }
}

inline void text_list(std::ostream& out, const char* title, const std::vector<UnitVector>& vs) {
    out << title << " (" << vs.size() << "):\n";
    for (const auto& v : vs) out << "  " << format_vector(v) << "\n";
}

}  // namespace

json solution_json(const SolutionSet& s) {
    json j;
    j["kind"] = to_string(s.kind);
    j["consistent"] = s.consistent;
    j["greatest"] = s.greatest ? to_json(*s.greatest) : json(nullptr);
    j["lowest"] = s.lowest ? to_json(*s.lowest) : json(nullptr);
    j[s.kind == Composition::maxmin ? "minimal_solutions" : "maximal_solutions"] = to_json(s.extremal_opposite);
    return j;
}

int cmd_solve(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SystemProblem p = parse_problem(read_json_file(path));
        const SolutionSet s = solve(p, opt.tol(), opt.max_enumeration);
        if (opt.format == OutputFormat::json) {
            out << dump(solution_json(s));
        } else {
            out << "kind: " << to_string(s.kind) << "\n";
            out << (s.consistent ? "consistent" : "inconsistent") << "\n";
            const UnitVector cand = greatest_candidate(p, opt.tol());
            const bool mm = p.kind == Composition::maxmin;
            out << (mm ? "greatest solution: " : "lowest solution: ");
            out << (s.consistent ? format_vector(cand) : "none (candidate " + format_vector(cand) + ")") << "\n";
            if (s.consistent)
                text_list(out, mm ? "minimal solutions" : "maximal solutions", s.extremal_opposite);
        }
        return s.consistent ? ok : inconsistent;
    });
}

json report_json(const ChebyshevReport& r) {
    json j;
    j["kind"] = "maxmin";
    j["delta"] = to_json(r.delta);
    j["per_row"] = to_json(r.per_row);
    j["lower"] = to_json(r.lower);
    j["upper"] = to_json(r.upper);
    j["greatest_cheb"] = to_json(r.greatest_cheb);
    j["eta"] = to_json(r.eta);
    j["minimal_chebs"] = r.has_minimal ? to_json(r.minimal_chebs) : json(nullptr);
    j["minimal_approx_solutions"] = r.has_minimal ? to_json(r.minimal_approx_solutions) : json(nullptr);
    return j;
}

json report_json(const DualChebyshevReport& r) {
    json j;
    j["kind"] = "minmax";
    j["nabla"] = to_json(r.nabla);
    j["per_row"] = to_json(r.per_row);
    j["lower"] = to_json(r.lower);
    j["upper"] = to_json(r.upper);
    j["lowest_cheb"] = to_json(r.lowest_cheb);
    j["nu"] = to_json(r.nu);
    j["maximal_chebs"] = r.has_maximal ? to_json(r.maximal_chebs) : json(nullptr);
    j["maximal_approx_solutions"] = r.has_maximal ? to_json(r.maximal_approx_solutions) : json(nullptr);
    return j;
}

int cmd_chebyshev(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SystemProblem p = parse_problem(read_json_file(path));
        const bool with = !opt.skip_minimal;
        if (p.kind == Composition::maxmin) {
            const auto r = chebyshev_report(p.matrix, p.rhs, opt.tol(), opt.max_enumeration, with);
            if (opt.format == OutputFormat::json) {
                out << dump(report_json(r));
                return ok;
            }
            out << "Delta: " << format_number(r.delta) << "\n";
            if (r.delta <= opt.tolerance) out << "system is consistent\n";
            out << "per-row delta: " << format_vector(UnitVector(r.per_row)) << "\n";
            out << "lower(Delta): " << format_vector(r.lower) << "\n";
            out << "upper(Delta): " << format_vector(r.upper) << "\n";
            out << "greatest Chebyshev approximation: " << format_vector(r.greatest_cheb) << "\n";
            out << "greatest approximate solution: " << format_vector(r.eta) << "\n";
            if (r.has_minimal) {
                text_list(out, "minimal Chebyshev approximations", r.minimal_chebs);
                text_list(out, "minimal approximate solutions", r.minimal_approx_solutions);
            }
            return ok;
        }
        const auto r = dual_report(p.matrix, p.rhs, opt.tol(), opt.max_enumeration, with);
        if (opt.format == OutputFormat::json) {
            out << dump(report_json(r));
            return ok;
        }
        out << "nabla: " << format_number(r.nabla) << "\n";
        if (r.nabla <= opt.tolerance) out << "system is consistent\n";
        out << "per-row nabla: " << format_vector(UnitVector(r.per_row)) << "\n";
        out << "lower(nabla): " << format_vector(r.lower) << "\n";
        out << "upper(nabla): " << format_vector(r.upper) << "\n";
        out << "lowest Chebyshev approximation: " << format_vector(r.lowest_cheb) << "\n";
        out << "lowest approximate solution: " << format_vector(r.nu) << "\n";
        if (r.has_maximal) {
            text_list(out, "maximal Chebyshev approximations", r.maximal_chebs);
            text_list(out, "maximal approximate solutions", r.maximal_approx_solutions);
        }
        return ok;
    });
}

json learning_json(const LearningReport& r) {
    json j;
    j["L"] = to_json(r.L);
    j["rhs_per_output"] = to_json(r.rhs_per_output);
    j["per_output_delta"] = to_json(r.per_output_delta);
    j["mu"] = to_json(r.mu);
    j["targets"] = to_json(r.targets);
    j["weights"] = to_json(r.weights);
    j["achieved_error"] = to_json(r.achieved_error);
    j["residuals"] = to_json(r.residuals);
    return j;
}

int cmd_learn(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const TrainingSet t = parse_training(read_json_file(path));
        WeightPolicy policy;
        policy.fallback = {opt.approximation, opt.solution};
        const auto r = build_approximate_weights(t, policy, opt.tol(), opt.max_enumeration);
        if (opt.format == OutputFormat::json) {
            out << dump(learning_json(r));
            return ok;
        }
        out << "per-output Delta: " << format_vector(UnitVector(r.per_output_delta)) << "\n";
        out << "mu: " << format_number(r.mu) << "\n";
        out << "weights:\n" << format_matrix(r.weights, "  ");
        out << "achieved error: " << format_number(r.achieved_error) << "\n";
        out << "residuals: " << format_vector(UnitVector(r.residuals)) << "\n";
        return ok;
    });
}

json rules_json(const RuleLearningResult& r) {
    json j;
    j["stacked_rows"] = r.stacked.matrix.rows();
    j["stacked_cols"] = r.stacked.matrix.cols();
    j["stacked_rhs"] = to_json(r.stacked.rhs);
    j["nabla"] = to_json(r.nabla);
    j["consistent"] = r.consistent;
    j["lowest_solution"] = to_json(r.lowest_solution);
    j["maximal_solutions"] = to_json(r.maximal_solutions);
    j["lowest_cheb"] = to_json(r.lowest_cheb);
    j["maximal_chebs"] = to_json(r.maximal_chebs);
    json ivs = json::array();
    for (const auto& a : r.intervals) {
        json e;
        e["approximation"] = to_json(a.approximation);
        json list = json::array();
        for (const auto& iv : a.intervals) list.push_back({{"lower", to_json(iv.lower)}, {"upper", to_json(iv.upper)}});
        e["intervals"] = std::move(list);
        ivs.push_back(std::move(e));
    }
    j["intervals"] = std::move(ivs);
    return j;
}

int cmd_rules(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto instances = parse_rules(read_json_file(path));
        const auto r = learn_rule_parameters(instances, opt.tol(), opt.max_enumeration);
        if (opt.format == OutputFormat::json) {
            out << dump(rules_json(r));
            return ok;
        }
        out << "stacked system: " << r.stacked.matrix.rows() << " x " << r.stacked.matrix.cols() << "\n";
        out << "nabla: " << format_number(r.nabla) << "\n";
        out << (r.consistent ? "consistent" : "inconsistent") << "\n";
        for (const auto& a : r.intervals) {
            out << "approximation " << format_vector(a.approximation) << ":\n";
            for (const auto& iv : a.intervals)
                out << "  " << format_vector(iv.lower) << " <= X <= " << format_vector(iv.upper) << "\n";
        }
        return ok;
    });
}

/// Runs the brute-force validators against the analytical results for one problem file.
int cmd_oracle_check(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SystemProblem p = parse_problem(read_json_file(path));
        if (p.kind == Composition::minmax) p = p.switched();
        const Tolerance tol = opt.tol();
        const double analytic = chebyshev_delta(p.matrix, p.rhs).delta;
        const double scanned = oracle::oracle_delta(p.matrix, p.rhs, tol);
        const bool delta_ok = std::abs(analytic - scanned) <= tol.eps;

        const auto r = chebyshev_report(p.matrix, p.rhs, tol, opt.max_enumeration, false);
        const auto fast = minimal_solutions(IneqProblem{p.matrix, r.lower, r.eta}, tol, opt.max_enumeration);
        const auto grid = oracle::oracle_minimal_solutions(p.matrix, r.lower, r.eta, tol);
        const bool mins_ok = same_set(fast, grid, tol);

        if (opt.format == OutputFormat::json) {
            json j;
            j["delta_analytic"] = to_json(analytic);
            j["delta_oracle"] = to_json(scanned);
            j["delta_agree"] = delta_ok;
            j["minimal_solutions_solver"] = to_json(fast);
            j["minimal_solutions_oracle"] = to_json(grid);
            j["minimal_solutions_agree"] = mins_ok;
            out << dump(j);
        } else {
            out << "Delta analytic: " << format_number(analytic) << ", oracle: " << format_number(scanned)
                << (delta_ok ? " (agree)" : " (DISAGREE)") << "\n";
            out << "minimal approximate-inequality solutions: solver " << fast.size() << ", oracle " << grid.size()
                << (mins_ok ? " (agree)" : " (DISAGREE)") << "\n";
        }
        return delta_ok && mins_ok ? ok : disagreement;
    });
}

}  // namespace fuzzyrel::cli
