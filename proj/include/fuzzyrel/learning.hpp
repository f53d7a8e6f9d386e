#pragma once

/**
 * @file learning.hpp
 * @brief Learning a max-min weight matrix W from training pairs (x_i, y_i)
 *        under the L-infinity error E(W) = max_i ||y_i - W x_i||.
 *
 * The rows of L are the inputs; output coordinate k gives the system
 * L u = b_k with (b_k)_i = (y_i)_k, and row k of W is u_k transposed.  Then
 * E(W) = max_k ||b_k - L u_k||, so the least attainable error is
 * mu = max_k Delta(L, b_k), reached by taking each u_k as a solution of
 * L u = c_k for a Chebyshev approximation c_k of b_k.
 */

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fuzzyrel/chebyshev.hpp"
#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

struct TrainingSet {
    std::vector<UnitVector> inputs;
    std::vector<UnitVector> outputs;

    TrainingSet(std::vector<UnitVector> in, std::vector<UnitVector> out)
        : inputs(std::move(in)), outputs(std::move(out)) {
        detail::require(!inputs.empty(), "training set needs at least one pair");
        detail::require(inputs.size() == outputs.size(), "training set has unequal input and output counts");
        for (const auto& x : inputs) detail::require(x.size() == inputs.front().size(), "ragged training inputs");
        for (const auto& y : outputs) detail::require(y.size() == outputs.front().size(), "ragged training outputs");
    }

    std::size_t size() const noexcept { return inputs.size(); }
    std::size_t input_dim() const noexcept { return inputs.front().size(); }
    std::size_t output_dim() const noexcept { return outputs.front().size(); }
};

struct LearningSystems {
    UnitMatrix L;
    std::vector<UnitVector> rhs_per_output;
};

inline LearningSystems build_systems(const TrainingSet& t) {
    std::vector<UnitVector> rhs;
    rhs.reserve(t.output_dim());
    for (std::size_t k = 0; k < t.output_dim(); ++k) {
        std::vector<double> col(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) col[i] = t.outputs[i][k];
        rhs.emplace_back(std::move(col));
    }
    return {UnitMatrix::from_row_vectors(t.inputs), std::move(rhs)};
}

/// Row k of W transposed, for every k.
inline std::vector<UnitVector> weight_rows(const UnitMatrix& w) {
    std::vector<UnitVector> rows;
    rows.reserve(w.rows());
    for (std::size_t k = 0; k < w.rows(); ++k) rows.push_back(w.row(k));
    return rows;
}

/// Per-pair residuals ||y_i - W x_i||.
inline std::vector<double> pair_residuals(const TrainingSet& t, const UnitMatrix& w) {
    detail::require(w.rows() == t.output_dim() && w.cols() == t.input_dim(),
                    "weight matrix shape differs from training data");
    std::vector<double> out;
    out.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(linf_dist(t.outputs[i], maxmin_prod(w, t.inputs[i])));
    return out;
}

/// E(W) = max_i ||y_i - W x_i||.
inline double learning_error(const TrainingSet& t, const UnitMatrix& w) {
    const auto r = pair_residuals(t, w);
    return *std::max_element(r.begin(), r.end());
}

/// The same error computed per output system: max_k ||b_k - L u_k||.
inline double learning_error_by_systems(const TrainingSet& t, const UnitMatrix& w) {
    detail::require(w.rows() == t.output_dim() && w.cols() == t.input_dim(),
                    "weight matrix shape differs from training data");
    const auto sys = build_systems(t);
    double e = 0.0;
    for (std::size_t k = 0; k < w.rows(); ++k)
        e = std::max(e, linf_dist(sys.rhs_per_output[k], maxmin_prod(sys.L, w.row(k))));
    return e;
}

struct LearningError {
    double mu = 0.0;
    std::vector<double> per_output_delta;
};

inline LearningError minimal_learning_error(const TrainingSet& t) {
    const auto sys = build_systems(t);
    LearningError out;
    for (const auto& b : sys.rhs_per_output) {
        const double d = chebyshev_delta(sys.L, b).delta;
        out.per_output_delta.push_back(d);
        out.mu = std::max(out.mu, d);
    }
    return out;
}

/// Which Chebyshev approximation of b_k a row targets, and which solution of L u = c_k it takes.
enum class ApproximationChoice { greatest, first_minimal };
enum class SolutionChoice { greatest, first_minimal };

struct RowPolicy {
    ApproximationChoice approximation = ApproximationChoice::greatest;
    SolutionChoice solution = SolutionChoice::greatest;
};

struct WeightPolicy {
    RowPolicy fallback;
    std::vector<RowPolicy> rows;  // overrides for the first rows.size() outputs

    const RowPolicy& for_row(std::size_t k) const { return k < rows.size() ? rows[k] : fallback; }
};

struct LearningReport {
    UnitMatrix L;
    std::vector<UnitVector> rhs_per_output;
    std::vector<double> per_output_delta;
    double mu = 0.0;
    std::vector<UnitVector> targets;  // the Chebyshev approximation used for each output
    UnitMatrix weights;
    double achieved_error = 0.0;
    std::vector<double> residuals;    // per training pair
};

inline LearningReport build_approximate_weights(const TrainingSet& t, const WeightPolicy& policy = {},
                                                Tolerance tol = {},
                                                std::size_t cap = default_enumeration_cap) {
    auto sys = build_systems(t);
    std::vector<double> deltas;
    std::vector<UnitVector> targets;
    std::vector<UnitVector> rows;
    double mu = 0.0;
    for (std::size_t k = 0; k < sys.rhs_per_output.size(); ++k) {
        const UnitVector& b = sys.rhs_per_output[k];
        const RowPolicy& rp = policy.for_row(k);
        const auto dist = chebyshev_delta(sys.L, b);
        deltas.push_back(dist.delta);
        mu = std::max(mu, dist.delta);

        UnitVector target = b;
        if (dist.delta > tol.eps) {
            if (rp.approximation == ApproximationChoice::greatest)
                target = greatest_cheb_approx(sys.L, b, dist.delta, tol);
            else
                target = minimal_cheb_approximations(sys.L, b, dist.delta, tol, cap).chebs.front();
        }
        if (rp.solution == SolutionChoice::greatest) {
            rows.push_back(residuated_greatest(sys.L, target, tol));
        } else {
            const auto sol = solve(SystemProblem{sys.L, target}, tol, cap);
            rows.push_back(sol.extremal_opposite.front());
        }
        targets.push_back(std::move(target));
    }
    UnitMatrix w = UnitMatrix::from_row_vectors(rows);
    auto residuals = pair_residuals(t, w);
    const double achieved = *std::max_element(residuals.begin(), residuals.end());
    return {std::move(sys.L), std::move(sys.rhs_per_output), std::move(deltas), mu,
            std::move(targets), std::move(w), achieved, std::move(residuals)};
}

}  // namespace fuzzyrel
