#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuzzyrel/fuzzyrel.hpp"
#include "fuzzyrel/io.hpp"

namespace testing_support {

using fuzzyrel::UnitMatrix;
using fuzzyrel::UnitVector;

// Entries drawn from {k/20 : 0 <= k <= 20}.
class GridRng {
public:
    explicit GridRng(std::uint64_t seed) : rng_(seed) {}

    double value() { return std::uniform_int_distribution<int>(0, 20)(rng_) / 20.0; }
    std::size_t dim(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    UnitVector vector(std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v) x = value();
        return UnitVector(std::move(v));
    }

    UnitMatrix matrix(std::size_t n, std::size_t m) {
        std::vector<double> v(n * m);
        for (double& x : v) x = value();
        return UnitMatrix(n, m, std::move(v));
    }

    // uniform grid point in the box [lo, hi]
    UnitVector between(const UnitVector& lo, const UnitVector& hi) {
        std::vector<double> v(lo.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const int a = static_cast<int>(std::ceil(lo[i] * 20 - 1e-9));
            const int b = static_cast<int>(std::floor(hi[i] * 20 + 1e-9));
            v[i] = a > b ? lo[i] : std::uniform_int_distribution<int>(a, b)(rng_) / 20.0;
        }
        return UnitVector(std::move(v));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::string show(const UnitVector& v) { return fuzzyrel::cli::format_vector(v); }

inline std::string show(const std::vector<UnitVector>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + show(vs[i]);
    return s + "}";
}

inline ::testing::AssertionResult VecEq(const UnitVector& actual, const UnitVector& expected, double eps = 1e-9) {
    if (fuzzyrel::approx_equal(actual, expected, fuzzyrel::Tolerance{eps})) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << show(actual) << " != " << show(expected);
}

inline ::testing::AssertionResult SetEq(const std::vector<UnitVector>& actual, const std::vector<UnitVector>& expected,
                                        double eps = 1e-9) {
    if (fuzzyrel::same_set(actual, expected, fuzzyrel::Tolerance{eps})) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << show(actual) << " != " << show(expected);
}

}  // namespace testing_support
