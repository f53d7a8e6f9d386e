#pragma once

/**
 * @file chebyshev.hpp
 * @brief Chebyshev distance of the right-hand side of a max-min system and
 *        the extremal Chebyshev approximations / approximate solutions.
 *
 * For A x = b let C be the set of right-hand sides c making A x = c
 * consistent.  The Chebyshev distance is Delta = min_{c in C} ||b - c||_inf and
 * has the closed form
 *
 *     delta_i = min_j max[ (b_i - a_ij)^+ , max_k sigma_G(b_i, a_kj, b_k) ]
 *     Delta   = max_i delta_i
 *     sigma_G(x, y, z) = min( (x - z)^+ / 2 , (y - z)^+ ).
 *
 * With the shifted vectors lower(d)_i = (b_i - d)^+ and upper(d)_i = min(b_i + d, 1):
 *
 *   - F(upper(Delta)) is the greatest Chebyshev approximation,
 *   - eta = A^t (min-Godel) F(upper(Delta)) is the greatest approximate solution,
 *   - x is an approximate solution  iff  lower(Delta) <= A x  and  x <= eta,
 *   - the minimal Chebyshev approximations are the minimal elements of
 *     { A v : v minimal solution of lower(Delta) <= A x, v <= eta }.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/errors.hpp"
#include "fuzzyrel/ineq_solver.hpp"
#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

constexpr double sigma_G(double x, double y, double z) noexcept {
    return std::min(positive_part(x - z) / 2.0, positive_part(y - z));
}

struct ChebyshevDistance {
    double delta = 0.0;
    std::vector<double> per_row;
};

inline ChebyshevDistance chebyshev_delta(const UnitMatrix& a, const UnitVector& b) {
    detail::require(a.rows() == b.size(), "chebyshev_delta: matrix rows differ from right-hand side length");
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    ChebyshevDistance out;
    out.per_row.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            double worst = positive_part(b[i] - a(i, j));
            for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, sigma_G(b[i], a(k, j), b[k]));
            best = std::min(best, worst);
        }
        out.per_row[i] = best;
        out.delta = std::max(out.delta, best);
    }
    return out;
}

struct ShiftedBounds {
    UnitVector lower;
    UnitVector upper;
    double delta;
};

inline ShiftedBounds shifted_bounds(const UnitVector& b, double delta) {
    std::vector<double> lo(b.size()), hi(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        lo[i] = positive_part(b[i] - delta);
        hi[i] = std::min(b[i] + delta, 1.0);
    }
    return {UnitVector(std::move(lo)), UnitVector(std::move(hi)), delta};
}

/// lower(delta) <= F(upper(delta)); Delta is the least delta where this holds.
inline bool threshold_condition(const UnitMatrix& a, const UnitVector& b, double delta, Tolerance tol = {}) {
    const auto sb = shifted_bounds(b, delta);
    return leq(sb.lower, apply_F(a, sb.upper, tol), tol);
}

inline UnitVector greatest_cheb_approx(const UnitMatrix& a, const UnitVector& b, double delta, Tolerance tol = {}) {
    return apply_F(a, shifted_bounds(b, delta).upper, tol);
}

inline UnitVector greatest_approx_solution(const UnitMatrix& a, const UnitVector& b, double delta,
                                           Tolerance tol = {}) {
    return residuated_greatest(a, greatest_cheb_approx(a, b, delta, tol), tol);
}

struct MinimalChebyshev {
    std::vector<UnitVector> chebs;      // minimal Chebyshev approximations
    std::vector<UnitVector> solutions;  // minimal approximate solutions mapping onto them
};

inline MinimalChebyshev minimal_cheb_approximations(const UnitMatrix& a, const UnitVector& b, double delta,
                                                    Tolerance tol = {},
                                                    std::size_t cap = default_enumeration_cap) {
    const auto sb = shifted_bounds(b, delta);
    const UnitVector eta = greatest_approx_solution(a, b, delta, tol);
    auto vs = minimal_solutions(IneqProblem{a, sb.lower, eta, IneqDirection::lower}, tol, cap);

    MinimalChebyshev out;
    if (delta <= tol.eps) {
        out.chebs = {b};
        out.solutions = std::move(vs);
        return out;
    }
    std::vector<UnitVector> images;
    images.reserve(vs.size());
    for (const auto& v : vs) images.push_back(maxmin_prod(a, v));
    out.chebs = minimal_elements(images, tol);
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (contains(out.chebs, images[k], tol)) out.solutions.push_back(vs[k]);
    return out;
}

struct ChebyshevReport {
    double delta = 0.0;
    std::vector<double> per_row;
    UnitVector lower;          // (b - Delta)^+
    UnitVector upper;          // min(b + Delta, 1)
    UnitVector greatest_cheb;  // F(upper)
    UnitVector eta;            // greatest approximate solution
    bool has_minimal = false;
    std::vector<UnitVector> minimal_chebs;
    std::vector<UnitVector> minimal_approx_solutions;
};

inline ChebyshevReport chebyshev_report(const UnitMatrix& a, const UnitVector& b, Tolerance tol = {},
                                        std::size_t cap = default_enumeration_cap, bool with_minimal = true) {
    auto dist = chebyshev_delta(a, b);
    auto sb = shifted_bounds(b, dist.delta);
    UnitVector greatest = apply_F(a, sb.upper, tol);
    UnitVector eta = residuated_greatest(a, greatest, tol);
    ChebyshevReport r{dist.delta, std::move(dist.per_row), std::move(sb.lower), std::move(sb.upper),
                      std::move(greatest), std::move(eta), false, {}, {}};
    if (with_minimal) {
        auto mins = minimal_cheb_approximations(a, b, r.delta, tol, cap);
        r.has_minimal = true;
        r.minimal_chebs = std::move(mins.chebs);
        r.minimal_approx_solutions = std::move(mins.solutions);
    }
    return r;
}

/// Membership in the approximate solution set: lower(Delta) <= A x and x <= eta.
inline bool is_approx_solution(const UnitMatrix& a, const UnitVector& b, const ChebyshevReport& report,
                               const UnitVector& x, Tolerance tol = {}) {
    detail::require(a.rows() == b.size() && a.cols() == x.size(), "is_approx_solution: shapes differ");
    return leq(report.lower, maxmin_prod(a, x), tol) && leq(x, report.eta, tol);
}

/**
 * Data for the subset characterization of approximate solutions:
 *   H_j  = { i : a_ij < b_i - Delta },   I_T = intersection of H_j over j in T,
 *   xi_T = max_{i in I_T} (b_i - Delta)^+   (0 on the empty set).
 * Index subsets are bit masks over the columns.
 */
class SubsetCharData {
public:
    static constexpr std::size_t default_cap = 16;

    SubsetCharData(const UnitMatrix& a, const UnitVector& b, double delta, Tolerance tol = {},
                   std::size_t cap = default_cap)
        : rows_(a.rows()), cols_(a.cols()), lower_(shifted_bounds(b, delta).lower) {
        if (cols_ > cap || cols_ >= 64) throw SubsetCapExceeded(cols_, cap);
        h_.assign(cols_, std::vector<bool>(rows_, false));
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) h_[j][i] = a(i, j) < b[i] - delta - tol.eps;
    }

    std::size_t columns() const noexcept { return cols_; }
    std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << cols_) - 1; }
    const std::vector<std::vector<bool>>& H() const noexcept { return h_; }

    std::vector<std::size_t> I(std::uint64_t mask) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < rows_; ++i) {
            bool in_all = true;
            for (std::size_t j = 0; j < cols_ && in_all; ++j)
                if (mask >> j & 1U) in_all = h_[j][i];
            if (in_all) out.push_back(i);
        }
        return out;
    }

    double xi(std::uint64_t mask) const {
        double v = 0.0;
        for (std::size_t i : I(mask)) v = std::max(v, lower_[i]);
        return v;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    UnitVector lower_;
    std::vector<std::vector<bool>> h_;
};

/// Membership via: for all T, xi_T <= max_{j not in T} x_j, and x <= eta.
inline bool is_approx_solution_subset_char(const UnitMatrix& a, const UnitVector& b, const ChebyshevReport& report,
                                           const UnitVector& x, Tolerance tol = {},
                                           std::size_t subset_cap = SubsetCharData::default_cap) {
    detail::require(a.rows() == b.size() && a.cols() == x.size(), "is_approx_solution_subset_char: shapes differ");
    const SubsetCharData data(a, b, report.delta, tol, subset_cap);
    if (!leq(x, report.eta, tol)) return false;
    const std::uint64_t full = data.full_mask();
    for (std::uint64_t t = 0; t <= full; ++t) {
        double outside = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!(t >> j & 1U)) outside = std::max(outside, x[j]);
        if (!tol.le(data.xi(t), outside)) return false;
    }
    return true;
}

/// c is a Chebyshev approximation iff F(c) = c and c' <= c <= F(upper(Delta)) for some minimal c'.
inline bool is_cheb_approximation(const UnitMatrix& a, const UnitVector& b, const ChebyshevReport& report,
                                  const UnitVector& c, Tolerance tol = {}) {
    detail::require(a.rows() == c.size() && b.size() == c.size(), "is_cheb_approximation: shapes differ");
    if (!report.has_minimal) throw std::invalid_argument("is_cheb_approximation needs minimal Chebyshev approximations");
    if (!approx_equal(apply_F(a, c, tol), c, tol)) return false;
    if (!leq(c, report.greatest_cheb, tol)) return false;
    return std::any_of(report.minimal_chebs.begin(), report.minimal_chebs.end(),
                       [&](const UnitVector& low) { return leq(low, c, tol); });
}

}  // namespace fuzzyrel
