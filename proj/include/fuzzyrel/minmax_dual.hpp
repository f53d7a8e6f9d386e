#pragma once

/**
 * @file minmax_dual.hpp
 * @brief Chebyshev tools for min-max systems G x = d.
 *
 * Every result is the complement image of the max-min pipeline run on
 * (G°, d°): nabla(G, d) = Delta(G°, d°), the lowest Chebyshev approximation is
 * F(upper)°, nu = eta°, the maximal approximations are the complements of the
 * minimal ones.  The closed-form nabla with sigma_eps is kept as an
 * independent cross-check.
 */

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fuzzyrel/chebyshev.hpp"
#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

/// sigma_eps(u, v, w) = min((w - u)^+ / 2, (w - v)^+)
constexpr double sigma_eps(double u, double v, double w) noexcept {
    return std::min(positive_part(w - u) / 2.0, positive_part(w - v));
}

/// nabla via the complemented max-min problem.
inline ChebyshevDistance dual_chebyshev_nabla(const UnitMatrix& g, const UnitVector& d) {
    detail::require(g.rows() == d.size(), "dual_chebyshev_nabla: matrix rows differ from right-hand side length");
    return chebyshev_delta(complement(g), complement(d));
}

/// nabla_i = min_j max[(g_ij - d_i)^+, max_k sigma_eps(d_i, g_kj, d_k)], evaluated directly.
inline ChebyshevDistance dual_chebyshev_nabla_direct(const UnitMatrix& g, const UnitVector& d) {
    detail::require(g.rows() == d.size(), "dual_chebyshev_nabla: matrix rows differ from right-hand side length");
    ChebyshevDistance out;
    out.per_row.resize(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        double best = 1.0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            double worst = positive_part(g(i, j) - d[i]);
            for (std::size_t k = 0; k < g.rows(); ++k) worst = std::max(worst, sigma_eps(d[i], g(k, j), d[k]));
            best = std::min(best, worst);
        }
        out.per_row[i] = best;
        out.delta = std::max(out.delta, best);
    }
    return out;
}

struct DualChebyshevReport {
    double nabla = 0.0;
    std::vector<double> per_row;
    UnitVector lower;       // (d - nabla)^+
    UnitVector upper;       // min(d + nabla, 1)
    UnitVector lowest_cheb; // U(lower)
    UnitVector nu;          // lowest approximate solution
    bool has_maximal = false;
    std::vector<UnitVector> maximal_chebs;
    std::vector<UnitVector> maximal_approx_solutions;
};

inline DualChebyshevReport dual_report(const ChebyshevReport& primal, Tolerance tol = {}) {
    DualChebyshevReport r{primal.delta,
                          primal.per_row,
                          complement(primal.upper),
                          complement(primal.lower),
                          complement(primal.greatest_cheb),
                          complement(primal.eta),
                          false, {}, {}};
    r.has_maximal = primal.has_minimal;
    r.maximal_chebs = canonical(complement(primal.minimal_chebs), tol);
    r.maximal_approx_solutions = canonical(complement(primal.minimal_approx_solutions), tol);
    return r;
}

inline DualChebyshevReport dual_report(const UnitMatrix& g, const UnitVector& d, Tolerance tol = {},
                                       std::size_t cap = default_enumeration_cap, bool with_maximal = true) {
    detail::require(g.rows() == d.size(), "dual_report: matrix rows differ from right-hand side length");
    return dual_report(chebyshev_report(complement(g), complement(d), tol, cap, with_maximal), tol);
}

/// ||d - G x|| = nabla  iff  G x <= upper(nabla) and x >= nu.
inline bool is_dual_approx_solution(const UnitMatrix& g, const UnitVector& d, const DualChebyshevReport& report,
                                    const UnitVector& x, Tolerance tol = {}) {
    detail::require(g.rows() == d.size() && g.cols() == x.size(), "is_dual_approx_solution: shapes differ");
    return leq(minmax_prod(g, x), report.upper, tol) && leq(report.nu, x, tol);
}

/// c is a Chebyshev approximation of d iff U(c) = c and U(lower) <= c <= c' for some maximal c'.
inline bool is_dual_cheb_approximation(const UnitMatrix& g, const UnitVector& d, const DualChebyshevReport& report,
                                       const UnitVector& c, Tolerance tol = {}) {
    detail::require(g.rows() == c.size() && d.size() == c.size(), "is_dual_cheb_approximation: shapes differ");
    if (!report.has_maximal)
        throw std::invalid_argument("is_dual_cheb_approximation needs maximal Chebyshev approximations");
    if (!approx_equal(apply_U(g, c, tol), c, tol)) return false;
    if (!leq(report.lowest_cheb, c, tol)) return false;
    return std::any_of(report.maximal_chebs.begin(), report.maximal_chebs.end(),
                       [&](const UnitVector& high) { return leq(c, high, tol); });
}

}  // namespace fuzzyrel
