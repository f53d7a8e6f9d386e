#pragma once

/**
 * @file ineq_solver.hpp
 * @brief Extremal solutions of max-min and min-max relational inequalities.
 *
 * LOWER problem: minimal x with  threshold <= A (max-min) x  and  x <= bound.
 * UPPER problem: maximal x with  G (min-max) x <= threshold  and  x >= bound.
 *
 * A minimal solution of the LOWER problem only takes values in
 * {0} U {threshold_i}.  Each row i with a positive threshold must be covered by
 * a column j in
 *
 *     J_i = { j : a_ij >= threshold_i and bound_j >= threshold_i },
 *
 * and choosing one covering column per row and setting x_j to the largest
 * threshold assigned to it yields every minimal solution.  The UPPER problem
 * is solved by complementing into a LOWER problem.
 */

#include <cstddef>
#include <limits>
#include <vector>

#include "fuzzyrel/errors.hpp"
#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

enum class IneqDirection { lower, upper };

struct IneqProblem {
    UnitMatrix matrix;
    UnitVector threshold;
    UnitVector bound;
    IneqDirection direction = IneqDirection::lower;
};

namespace detail {

struct CoverRow {
    double threshold;
    std::vector<std::size_t> columns;
};

inline bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
    // both sorted ascending
    std::size_t k = 0;
    for (std::size_t j : small) {
        while (k < big.size() && big[k] < j) ++k;
        if (k == big.size() || big[k] != j) return false;
    }
    return true;
}

/// Drops rows whose covering requirement is implied by another row's.
inline std::vector<CoverRow> drop_implied_rows(std::vector<CoverRow> rows, Tolerance tol) {
    std::vector<bool> dropped(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = 0; k < rows.size() && !dropped[i]; ++k) {
            if (k == i || dropped[k]) continue;
            // row k forces some x_j >= t_k with j in J_k; if J_k is inside J_i and t_k >= t_i,
            // row i is then satisfied too.
            if (tol.le(rows[i].threshold, rows[k].threshold) && is_subset(rows[k].columns, rows[i].columns)) {
                const bool same = rows[k].columns.size() == rows[i].columns.size() &&
                                  tol.eq(rows[i].threshold, rows[k].threshold);
                if (!same || k < i) dropped[i] = true;
            }
        }
    }
    std::vector<CoverRow> kept;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!dropped[i]) kept.push_back(std::move(rows[i]));
    return kept;
}

inline void enumerate_covers(const std::vector<CoverRow>& rows, std::size_t row, std::vector<double>& x,
                             Tolerance tol, std::vector<UnitVector>& out) {
    if (row == rows.size()) {
        out.emplace_back(x);
        return;
    }
    const CoverRow& r = rows[row];
    for (std::size_t j : r.columns) {
        if (tol.le(r.threshold, x[j])) {
            // already covered by an earlier choice; branching would only add dominated candidates
            enumerate_covers(rows, row + 1, x, tol, out);
            return;
        }
    }
    for (std::size_t j : r.columns) {
        const double saved = x[j];
        x[j] = r.threshold;
        enumerate_covers(rows, row + 1, x, tol, out);
        x[j] = saved;
    }
}

inline std::vector<UnitVector> lower_minimal_solutions(const UnitMatrix& a, const UnitVector& threshold,
                                                       const UnitVector& bound, Tolerance tol, std::size_t cap) {
    require(a.rows() == threshold.size(), "inequality threshold length differs from matrix rows");
    require(a.cols() == bound.size(), "inequality bound length differs from matrix columns");

    std::vector<CoverRow> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double t = threshold[i];
        if (t <= tol.eps) continue;
        CoverRow r{t, {}};
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (tol.le(t, a(i, j)) && tol.le(t, bound[j])) r.columns.push_back(j);
        if (r.columns.empty()) return {};
        rows.push_back(std::move(r));
    }
    rows = drop_implied_rows(std::move(rows), tol);

    long double combinations = 1.0L;
    for (const auto& r : rows) combinations *= static_cast<long double>(r.columns.size());
    if (combinations > static_cast<long double>(cap)) {
        constexpr auto max_count = std::numeric_limits<std::size_t>::max();
        const auto required = combinations >= static_cast<long double>(max_count)
                                  ? max_count
                                  : static_cast<std::size_t>(combinations);
        throw EnumerationBudgetExceeded(required, cap);
    }

    std::vector<double> x(a.cols(), 0.0);
    std::vector<UnitVector> candidates;
    enumerate_covers(rows, 0, x, tol, candidates);

    std::vector<UnitVector> feasible;
    for (auto& c : candidates)
        if (leq(c, bound, tol)) feasible.push_back(std::move(c));
    return minimal_elements(std::move(feasible), tol);
}

}  // namespace detail

/// Complete, canonically ordered list of minimal solutions of a LOWER problem.
inline std::vector<UnitVector> minimal_solutions(const IneqProblem& p, Tolerance tol = {},
                                                 std::size_t cap = default_enumeration_cap) {
    detail::require(p.direction == IneqDirection::lower, "minimal_solutions expects a LOWER problem");
    return detail::lower_minimal_solutions(p.matrix, p.threshold, p.bound, tol, cap);
}

/// Complete, canonically ordered list of maximal solutions of an UPPER problem.
inline std::vector<UnitVector> maximal_solutions(const IneqProblem& p, Tolerance tol = {},
                                                 std::size_t cap = default_enumeration_cap) {
    detail::require(p.direction == IneqDirection::upper, "maximal_solutions expects an UPPER problem");
    auto mins = detail::lower_minimal_solutions(complement(p.matrix), complement(p.threshold),
                                                complement(p.bound), tol, cap);
    return canonical(complement(mins), tol);
}

}  // namespace fuzzyrel
