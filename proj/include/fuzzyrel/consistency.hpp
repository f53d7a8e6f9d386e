#pragma once

/**
 * @file consistency.hpp
 * @brief Consistency test, greatest/lowest solution and solution-set
 *        description for max-min and min-max systems.
 *
 * For a max-min system A x = b the potential greatest solution is
 * e = A^t (min-Godel) b, and the system is consistent iff A e = b, i.e. iff b
 * is a fixed point of F(c) = A (max-min) (A^t (min-Godel) c).  The min-max
 * system G x = d is handled by complementing into the max-min system
 * (G°, d°) and complementing the answers back.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzyrel/ineq_solver.hpp"
#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

struct SystemProblem {
    UnitMatrix matrix;
    UnitVector rhs;
    Composition kind = Composition::maxmin;

    SystemProblem(UnitMatrix m, UnitVector r, Composition k = Composition::maxmin)
        : matrix(std::move(m)), rhs(std::move(r)), kind(k) {
        detail::require(matrix.rows() == rhs.size(), "system matrix rows differ from right-hand side length");
    }

    /// The same problem with matrix and rhs complemented and the composition switched.
    SystemProblem switched() const {
        return {complement(matrix), complement(rhs),
                kind == Composition::maxmin ? Composition::minmax : Composition::maxmin};
    }
};

struct SolutionSet {
    Composition kind = Composition::maxmin;
    bool consistent = false;
    std::optional<UnitVector> greatest;  // max-min systems
    std::optional<UnitVector> lowest;    // min-max systems
    /// Minimal solutions (max-min) or maximal solutions (min-max), canonically ordered.
    std::vector<UnitVector> extremal_opposite;
};

/// e = A^t (min-Godel) c: the greatest x with A x <= c.
inline UnitVector residuated_greatest(const UnitMatrix& a, const UnitVector& c, Tolerance tol = {}) {
    return godel_min_prod(a.transpose(), c, tol);
}

/// r = G^t (max-eps) c: the lowest x with G x >= c.
inline UnitVector residuated_lowest(const UnitMatrix& g, const UnitVector& c, Tolerance tol = {}) {
    return eps_max_prod(g.transpose(), c, tol);
}

/// Potential greatest (max-min) or lowest (min-max) solution; says nothing about consistency.
inline UnitVector greatest_candidate(const SystemProblem& p, Tolerance tol = {}) {
    if (p.kind == Composition::maxmin) return residuated_greatest(p.matrix, p.rhs, tol);
    return complement(residuated_greatest(complement(p.matrix), complement(p.rhs), tol));
}

inline UnitVector apply_F(const UnitMatrix& a, const UnitVector& c, Tolerance tol = {}) {
    detail::require(a.rows() == c.size(), "apply_F: matrix rows differ from vector length");
    return maxmin_prod(a, residuated_greatest(a, c, tol));
}

/// U(c) = G (min-max) (G^t (max-eps) c), evaluated directly.
inline UnitVector apply_U(const UnitMatrix& g, const UnitVector& c, Tolerance tol = {}) {
    detail::require(g.rows() == c.size(), "apply_U: matrix rows differ from vector length");
    return minmax_prod(g, residuated_lowest(g, c, tol));
}

inline bool is_consistent(const SystemProblem& p, Tolerance tol = {}) {
    if (p.kind == Composition::maxmin) return approx_equal(apply_F(p.matrix, p.rhs, tol), p.rhs, tol);
    const auto s = p.switched();
    return approx_equal(apply_F(s.matrix, s.rhs, tol), s.rhs, tol);
}

namespace detail {

inline SolutionSet solve_maxmin(const UnitMatrix& a, const UnitVector& b, Tolerance tol, std::size_t cap) {
    SolutionSet out;
    out.kind = Composition::maxmin;
    UnitVector e = residuated_greatest(a, b, tol);
    if (!approx_equal(maxmin_prod(a, e), b, tol)) return out;
    out.consistent = true;
    // v <= e solves A v = b iff b <= A v
    out.extremal_opposite = minimal_solutions(IneqProblem{a, b, e, IneqDirection::lower}, tol, cap);
    out.greatest = std::move(e);
    return out;
}

}  // namespace detail

/// Consistency verdict plus the greatest (lowest) solution and every minimal (maximal) one.
inline SolutionSet solve(const SystemProblem& p, Tolerance tol = {}, std::size_t cap = default_enumeration_cap) {
    if (p.kind == Composition::maxmin) return detail::solve_maxmin(p.matrix, p.rhs, tol, cap);

    const auto s = p.switched();
    SolutionSet primal = detail::solve_maxmin(s.matrix, s.rhs, tol, cap);
    SolutionSet out;
    out.kind = Composition::minmax;
    out.consistent = primal.consistent;
    if (primal.greatest) out.lowest = complement(*primal.greatest);
    out.extremal_opposite = canonical(complement(primal.extremal_opposite), tol);
    return out;
}

/// True iff x solves the system within tolerance.
inline bool is_solution(const SystemProblem& p, const UnitVector& x, Tolerance tol = {}) {
    const UnitVector image = p.kind == Composition::maxmin ? maxmin_prod(p.matrix, x) : minmax_prod(p.matrix, x);
    return approx_equal(image, p.rhs, tol);
}

}  // namespace fuzzyrel
