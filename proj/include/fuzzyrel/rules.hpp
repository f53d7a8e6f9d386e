#pragma once

/**
 * @file rules.hpp
 * @brief Rule-parameter learning for possibilistic rule bases.
 *
 * Each training datum i gives a min-max system Gamma_i X = Y_i in the unknown
 * rule parameters X.  The systems are stacked into one block system and
 * solved exactly when consistent; otherwise every extremal Chebyshev
 * approximation c of the stacked rhs yields a consistent system Gamma X = c
 * whose solution intervals are reported.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/lattice.hpp"
#include "fuzzyrel/minmax_dual.hpp"

namespace fuzzyrel {

struct RuleTrainingInstance {
    UnitMatrix gamma;
    UnitVector target;

    RuleTrainingInstance(UnitMatrix g, UnitVector y) : gamma(std::move(g)), target(std::move(y)) {
        detail::require(gamma.rows() == target.size(), "rule instance: gamma rows differ from target length");
    }
};

struct ParameterInterval {
    UnitVector lower;
    UnitVector upper;
};

/// Solution intervals of the consistent system Gamma X = approximation.
struct ApproximationIntervals {
    UnitVector approximation;
    std::vector<ParameterInterval> intervals;
};

struct RuleLearningResult {
    SystemProblem stacked;
    double nabla = 0.0;
    bool consistent = false;
    UnitVector lowest_solution;                  // lowest solution, or nu when inconsistent
    std::vector<UnitVector> maximal_solutions;   // maximal (approximate) solutions
    UnitVector lowest_cheb;                      // equals the rhs when consistent
    std::vector<UnitVector> maximal_chebs;
    std::vector<ApproximationIntervals> intervals;
};

inline SystemProblem stack_systems(const std::vector<RuleTrainingInstance>& instances) {
    detail::require(!instances.empty(), "stack_systems needs at least one instance");
    const std::size_t p = instances.front().gamma.cols();
    std::vector<double> data;
    std::vector<double> rhs;
    std::size_t rows = 0;
    for (const auto& inst : instances) {
        detail::require(inst.gamma.cols() == p, "rule instances have different column counts");
        const auto d = inst.gamma.data();
        data.insert(data.end(), d.begin(), d.end());
        const auto t = inst.target.values();
        rhs.insert(rhs.end(), t.begin(), t.end());
        rows += inst.gamma.rows();
    }
    return {UnitMatrix(rows, p, std::move(data)), UnitVector(std::move(rhs)), Composition::minmax};
}

namespace detail {

inline ApproximationIntervals intervals_for(const UnitMatrix& gamma, const UnitVector& c, Tolerance tol,
                                            std::size_t cap) {
    const auto sol = solve(SystemProblem{gamma, c, Composition::minmax}, tol, cap);
    require(sol.consistent && sol.lowest.has_value(), "extremal Chebyshev approximation is not consistent");
    ApproximationIntervals out{c, {}};
    for (const auto& high : sol.extremal_opposite) out.intervals.push_back({*sol.lowest, high});
    return out;
}

}  // namespace detail

inline RuleLearningResult learn_rule_parameters(const std::vector<RuleTrainingInstance>& instances,
                                                Tolerance tol = {},
                                                std::size_t cap = default_enumeration_cap) {
    SystemProblem stacked = stack_systems(instances);
    const UnitMatrix& g = stacked.matrix;
    const UnitVector& d = stacked.rhs;
    const auto report = dual_report(g, d, tol, cap, true);

    RuleLearningResult r{stacked, report.nabla, report.nabla <= tol.eps, report.nu, report.maximal_approx_solutions,
                         report.lowest_cheb, report.maximal_chebs, {}};
    if (r.consistent) {
        r.intervals.push_back(detail::intervals_for(g, d, tol, cap));
        return r;
    }
    r.intervals.push_back(detail::intervals_for(g, report.lowest_cheb, tol, cap));
    for (const auto& c : report.maximal_chebs) r.intervals.push_back(detail::intervals_for(g, c, tol, cap));
    return r;
}

}  // namespace fuzzyrel
