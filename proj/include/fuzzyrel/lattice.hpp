#pragma once

/**
 * @file lattice.hpp
 * @brief Unit-interval vectors and matrices with the four compositions used
 *        by fuzzy relational equations.
 *
 *   max-min   (A (.) x)_i = max_j min(a_ij, x_j)
 *   min-max   (G (.) x)_i = min_j max(g_ij, x_j)
 *   min-Godel (M (.) c)_i = min_j (m_ij ->G c_j)
 *   max-eps   (M (.) c)_i = max_j (m_ij eps c_j)
 *
 * Complementing every operand (t -> 1 - t) swaps max-min with min-max and
 * min-Godel with max-eps.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzyrel/errors.hpp"

namespace fuzzyrel {

/// Absolute slack used by every order comparison: x <= y is read as x <= y + eps.
struct Tolerance {
    double eps = 1e-9;

    constexpr bool le(double x, double y) const noexcept { return x <= y + eps; }
    constexpr bool lt(double x, double y) const noexcept { return x < y - eps; }
    constexpr bool eq(double x, double y) const noexcept { return le(x, y) && le(y, x); }
};

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

namespace detail {

inline double checked_unit(double v, double eps) {
    if (std::isnan(v)) throw OutOfUnitInterval("NaN is not a unit-interval value");
    if (v < -eps || v > 1.0 + eps)
        throw OutOfUnitInterval("value " + std::to_string(v) + " lies outside [0,1]");
    return std::clamp(v, 0.0, 1.0);
}

inline void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

}  // namespace detail

/// Checked scalar in [0,1].
class UnitScalar {
public:
    constexpr UnitScalar() = default;
    UnitScalar(double v, Tolerance tol = {}) : value_(detail::checked_unit(v, tol.eps)) {}

    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// Column vector with entries in [0,1]; immutable once built.
class UnitVector {
public:
    UnitVector(std::initializer_list<double> values) : UnitVector(std::vector<double>(values)) {}

    explicit UnitVector(std::vector<double> values, Tolerance tol = {}) : values_(std::move(values)) {
        detail::require(!values_.empty(), "a unit vector needs at least one entry");
        for (double& v : values_) v = detail::checked_unit(v, tol.eps);
    }

    static UnitVector filled(std::size_t n, double value) {
        return UnitVector(std::vector<double>(n, value));
    }
    static UnitVector zeros(std::size_t n) { return filled(n, 0.0); }
    static UnitVector ones(std::size_t n) { return filled(n, 1.0); }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    const std::vector<double>& to_vector() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

/// Dense row-major matrix with entries in [0,1].
class UnitMatrix {
public:
    UnitMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        std::vector<std::vector<double>> nested;
        nested.reserve(rows.size());
        for (const auto& r : rows) nested.emplace_back(r);
        *this = from_rows(nested);
    }

    UnitMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major, Tolerance tol = {})
        : rows_(rows), cols_(cols), data_(std::move(row_major)) {
        detail::require(rows_ >= 1 && cols_ >= 1, "a unit matrix needs at least one row and column");
        detail::require(data_.size() == rows_ * cols_, "entry count does not match rows * cols");
        for (double& v : data_) v = detail::checked_unit(v, tol.eps);
    }

    static UnitMatrix from_rows(const std::vector<std::vector<double>>& rows, Tolerance tol = {}) {
        detail::require(!rows.empty(), "a unit matrix needs at least one row");
        const std::size_t cols = rows.front().size();
        std::vector<double> data;
        data.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            detail::require(r.size() == cols, "ragged matrix rows");
            data.insert(data.end(), r.begin(), r.end());
        }
        return UnitMatrix(rows.size(), cols, std::move(data), tol);
    }

    /// Matrix whose i-th row is the transpose of `rows[i]`.
    static UnitMatrix from_row_vectors(std::span<const UnitVector> rows) {
        detail::require(!rows.empty(), "a unit matrix needs at least one row");
        const std::size_t cols = rows.front().size();
        std::vector<double> data;
        data.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            detail::require(r.size() == cols, "ragged matrix rows");
            data.insert(data.end(), r.begin(), r.end());
        }
        return UnitMatrix(rows.size(), cols, std::move(data));
    }

    static UnitMatrix filled(std::size_t rows, std::size_t cols, double value) {
        return UnitMatrix(rows, cols, std::vector<double>(rows * cols, value));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::span<const double> data() const noexcept { return data_; }

    UnitVector row(std::size_t i) const {
        return UnitVector(std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }

    std::vector<std::vector<double>> to_rows() const {
        std::vector<std::vector<double>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i).to_vector();
        return out;
    }

    UnitMatrix transpose() const {
        std::vector<double> t(data_.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = (*this)(i, j);
        return UnitMatrix(cols_, rows_, std::move(t));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

enum class Composition { maxmin, minmax };

inline const char* to_string(Composition kind) noexcept {
    return kind == Composition::maxmin ? "maxmin" : "minmax";
}

// ---------------------------------------------------------------------------
// Scalar operators

constexpr double positive_part(double x) noexcept { return x > 0.0 ? x : 0.0; }

/// Godel implication: 1 if x <= y, else y.
constexpr double godel_implies(double x, double y, Tolerance tol = {}) noexcept {
    return tol.le(x, y) ? 1.0 : y;
}

/// Complement dual of the Godel implication: y if x < y, else 0.
constexpr double eps_product(double x, double y, Tolerance tol = {}) noexcept {
    return tol.le(y, x) ? 0.0 : y;
}

// ---------------------------------------------------------------------------
// Compositions

inline UnitVector maxmin_prod(const UnitMatrix& a, const UnitVector& x) {
    detail::require(a.cols() == x.size(), "maxmin_prod: matrix columns differ from vector length");
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc = std::max(acc, std::min(a(i, j), x[j]));
        out[i] = acc;
    }
    return UnitVector(std::move(out));
}

inline UnitVector minmax_prod(const UnitMatrix& g, const UnitVector& x) {
    detail::require(g.cols() == x.size(), "minmax_prod: matrix columns differ from vector length");
    std::vector<double> out(g.rows(), 1.0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        double acc = 1.0;
        for (std::size_t j = 0; j < g.cols(); ++j) acc = std::min(acc, std::max(g(i, j), x[j]));
        out[i] = acc;
    }
    return UnitVector(std::move(out));
}

inline UnitVector godel_min_prod(const UnitMatrix& m, const UnitVector& c, Tolerance tol = {}) {
    detail::require(m.cols() == c.size(), "godel_min_prod: matrix columns differ from vector length");
    std::vector<double> out(m.rows(), 1.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 1.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = std::min(acc, godel_implies(m(i, j), c[j], tol));
        out[i] = acc;
    }
    return UnitVector(std::move(out));
}

inline UnitVector eps_max_prod(const UnitMatrix& m, const UnitVector& c, Tolerance tol = {}) {
    detail::require(m.cols() == c.size(), "eps_max_prod: matrix columns differ from vector length");
    std::vector<double> out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = std::max(acc, eps_product(m(i, j), c[j], tol));
        out[i] = acc;
    }
    return UnitVector(std::move(out));
}

inline UnitVector complement(const UnitVector& v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](double t) { return 1.0 - t; });
    return UnitVector(std::move(out));
}

inline UnitMatrix complement(const UnitMatrix& a) {
    std::vector<double> out(a.data().size());
    std::transform(a.data().begin(), a.data().end(), out.begin(), [](double t) { return 1.0 - t; });
    return UnitMatrix(a.rows(), a.cols(), std::move(out));
}

inline std::vector<UnitVector> complement(const std::vector<UnitVector>& vs) {
    std::vector<UnitVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(complement(v));
    return out;
}

// ---------------------------------------------------------------------------
// Order and distance

/// Chebyshev (L-infinity) distance.
inline double linf_dist(const UnitVector& a, const UnitVector& b) {
    detail::require(a.size() == b.size(), "linf_dist: lengths differ");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline bool leq(const UnitVector& a, const UnitVector& b, Tolerance tol = {}) {
    detail::require(a.size() == b.size(), "leq: lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!tol.le(a[i], b[i])) return false;
    return true;
}

inline bool approx_equal(const UnitVector& a, const UnitVector& b, Tolerance tol = {}) {
    return a.size() == b.size() && leq(a, b, tol) && leq(b, a, tol);
}

inline bool approx_equal(const UnitMatrix& a, const UnitMatrix& b, Tolerance tol = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        if (!tol.eq(a.data()[k], b.data()[k])) return false;
    return true;
}

inline bool lex_less(const UnitVector& a, const UnitVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Removes near-duplicates and sorts lexicographically.
inline std::vector<UnitVector> canonical(std::vector<UnitVector> vs, Tolerance tol = {}) {
    std::sort(vs.begin(), vs.end(), lex_less);
    std::vector<UnitVector> out;
    for (auto& v : vs) {
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const UnitVector& u) { return approx_equal(u, v, tol); });
        if (!seen) out.push_back(std::move(v));
    }
    return out;
}

/// Minimal elements under the componentwise order, canonically ordered.
inline std::vector<UnitVector> minimal_elements(std::vector<UnitVector> vs, Tolerance tol = {}) {
    vs = canonical(std::move(vs), tol);
    std::vector<UnitVector> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < vs.size() && !dominated; ++k)
            dominated = k != i && leq(vs[k], vs[i], tol) && !approx_equal(vs[k], vs[i], tol);
        if (!dominated) out.push_back(vs[i]);
    }
    return out;
}

inline std::vector<UnitVector> maximal_elements(std::vector<UnitVector> vs, Tolerance tol = {}) {
    vs = canonical(std::move(vs), tol);
    std::vector<UnitVector> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < vs.size() && !dominated; ++k)
            dominated = k != i && leq(vs[i], vs[k], tol) && !approx_equal(vs[k], vs[i], tol);
        if (!dominated) out.push_back(vs[i]);
    }
    return out;
}

inline bool contains(const std::vector<UnitVector>& set, const UnitVector& v, Tolerance tol = {}) {
    return std::any_of(set.begin(), set.end(), [&](const UnitVector& u) { return approx_equal(u, v, tol); });
}

/// Equality of finite vector sets, ignoring order.
inline bool same_set(const std::vector<UnitVector>& a, const std::vector<UnitVector>& b, Tolerance tol = {}) {
    return std::all_of(a.begin(), a.end(), [&](const UnitVector& v) { return contains(b, v, tol); }) &&
           std::all_of(b.begin(), b.end(), [&](const UnitVector& v) { return contains(a, v, tol); });
}

}  // namespace fuzzyrel
