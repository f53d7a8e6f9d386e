#pragma once

// Brute-force validators. They share nothing with the analytical code paths
// beyond the value types, so agreement between the two is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fuzzyrel/errors.hpp"
#include "fuzzyrel/lattice.hpp"
#include "fuzzyrel/learning.hpp"

namespace fuzzyrel::oracle {

struct OracleBudget {
    std::size_t max_grid_points = 1'000'000;
    std::size_t max_samples = 1'000;
    std::uint64_t seed = 20130901;
};

namespace naive {

inline std::vector<double> maxmin(const UnitMatrix& a, const std::vector<double>& x) {
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] = std::max(out[i], std::min(a(i, j), x[j]));
    return out;
}

// greatest x with A x <= c, straight from the definition of the Godel residuum
inline std::vector<double> residuum(const UnitMatrix& a, const std::vector<double>& c, double eps) {
    std::vector<double> x(a.cols(), 1.0);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, j) > c[i] + eps) x[j] = std::min(x[j], c[i]);
    return x;
}

inline bool threshold_holds(const UnitMatrix& a, const UnitVector& b, double delta, double eps) {
    std::vector<double> lo(b.size()), hi(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        lo[i] = std::max(b[i] - delta, 0.0);
        hi[i] = std::min(b[i] + delta, 1.0);
    }
    const auto image = maxmin(a, residuum(a, hi, eps));
    for (std::size_t i = 0; i < b.size(); ++i)
        if (lo[i] > image[i] + eps) return false;
    return true;
}

}  // namespace naive

/// Smallest delta in {0} U {(b_i - a_ij)^+} U {sigma_G(b_i, a_kj, b_k)} meeting the threshold condition.
inline double oracle_delta(const UnitMatrix& a, const UnitVector& b, Tolerance tol = {}, OracleBudget budget = {}) {
    detail::require(a.rows() == b.size(), "oracle_delta: matrix rows differ from right-hand side length");
    const std::size_t n = a.rows(), m = a.cols();
    if (1 + n * m + n * n * m > budget.max_grid_points)
        throw OracleBudgetExceeded("oracle_delta: candidate set exceeds the grid budget");
    std::vector<double> cand{0.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            cand.push_back(std::max(b[i] - a(i, j), 0.0));
            for (std::size_t k = 0; k < n; ++k)
                cand.push_back(std::min(std::max(b[i] - b[k], 0.0) / 2.0, std::max(a(k, j) - b[k], 0.0)));
        }
    std::sort(cand.begin(), cand.end());
    for (double d : cand)
        if (naive::threshold_holds(a, b, d, tol.eps)) return d;
    return 1.0;
}

/// Smallest multiple of `step` meeting the threshold condition; formula-free sanity layer.
inline double oracle_delta_grid(const UnitMatrix& a, const UnitVector& b, double step = 1e-3, Tolerance tol = {}) {
    detail::require(a.rows() == b.size(), "oracle_delta_grid: matrix rows differ from right-hand side length");
    const auto steps = static_cast<std::size_t>(std::ceil(1.0 / step));
    for (std::size_t s = 0; s <= steps; ++s) {
        const double d = std::min(1.0, static_cast<double>(s) * step);
        if (naive::threshold_holds(a, b, d, tol.eps)) return d;
    }
    return 1.0;
}

/// Minimal x on the grid ({0} U thresholds)^m with threshold <= A x and x <= bound.
inline std::vector<UnitVector> oracle_minimal_solutions(const UnitMatrix& a, const UnitVector& threshold,
                                                        const UnitVector& bound, Tolerance tol = {},
                                                        OracleBudget budget = {}) {
    detail::require(a.rows() == threshold.size() && a.cols() == bound.size(),
                    "oracle_minimal_solutions: shapes differ");
    std::vector<double> levels{0.0};
    for (double t : threshold) levels.push_back(t);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end(), [&](double x, double y) { return tol.eq(x, y); }),
                 levels.end());

    const std::size_t m = a.cols();
    long double total = 1.0L;
    for (std::size_t j = 0; j < m; ++j) total *= static_cast<long double>(levels.size());
    if (total > static_cast<long double>(budget.max_grid_points))
        throw OracleBudgetExceeded("oracle_minimal_solutions: grid exceeds the budget");

    std::vector<UnitVector> feasible;
    std::vector<std::size_t> idx(m, 0);
    std::vector<double> x(m);
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
            x[j] = levels[idx[j]];
            ok = x[j] <= bound[j] + tol.eps;
        }
        if (ok) {
            const auto image = naive::maxmin(a, x);
            for (std::size_t i = 0; i < a.rows() && ok; ++i) ok = threshold[i] <= image[i] + tol.eps;
        }
        if (ok) feasible.emplace_back(x);

        std::size_t j = 0;
        while (j < m && ++idx[j] == levels.size()) idx[j++] = 0;
        if (j == m) break;
    }

    std::vector<UnitVector> out;
    for (const auto& v : feasible) {
        bool dominated = false;
        for (const auto& u : feasible) {
            bool le = true, strict = false;
            for (std::size_t j = 0; j < m; ++j) {
                if (u[j] > v[j] + tol.eps) le = false;
                if (u[j] < v[j] - tol.eps) strict = true;
            }
            if (le && strict) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(v);
    }
    return canonical(std::move(out), tol);
}

/// True iff E(w_star) = mu and no sampled W on the k/20 grid has E(W) < mu.
inline bool oracle_mu_check(const TrainingSet& t, double mu, const UnitMatrix& w_star, OracleBudget budget = {},
                            Tolerance tol = {}) {
    auto error = [&](const UnitMatrix& w) {
        double e = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t k = 0; k < w.rows(); ++k) {
                double v = 0.0;
                for (std::size_t j = 0; j < w.cols(); ++j) v = std::max(v, std::min(w(k, j), t.inputs[i][j]));
                e = std::max(e, std::abs(t.outputs[i][k] - v));
            }
        }
        return e;
    };
    if (std::abs(error(w_star) - mu) > tol.eps) return false;

    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<int> grid(0, 20);
    const std::size_t rows = t.output_dim(), cols = t.input_dim();
    for (std::size_t s = 0; s < budget.max_samples; ++s) {
        std::vector<double> data(rows * cols);
        for (double& v : data) v = grid(rng) / 20.0;
        if (error(UnitMatrix(rows, cols, std::move(data))) < mu - tol.eps) return false;
    }
    return true;
}

}  // namespace fuzzyrel::oracle
