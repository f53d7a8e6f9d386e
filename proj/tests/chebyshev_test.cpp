#include "support.hpp"

using namespace fuzzyrel;
using testing_support::SetEq;
using testing_support::VecEq;

namespace {
const UnitMatrix kA{{0.03, 0.38, 0.26}, {0.98, 0.10, 0.03}, {0.77, 0.15, 0.85}};
const UnitVector kB{0.54, 0.13, 0.87};
}  // namespace

TEST(Sigma, Values) {
    EXPECT_NEAR(sigma_G(0.56, 0.87, 0.36), 0.10, 1e-12);
    EXPECT_NEAR(sigma_G(0.54, 0.98, 0.13), 0.205, 1e-12);
    EXPECT_EQ(sigma_G(0.2, 0.9, 0.5), 0.0);
    EXPECT_EQ(sigma_G(0.9, 0.3, 0.5), 0.0);
}

TEST(Delta, PerRowAndMax) {
    const auto d = chebyshev_delta(kA, kB);
    EXPECT_NEAR(d.delta, 0.16, 1e-9);
    ASSERT_EQ(d.per_row.size(), 3U);
    EXPECT_NEAR(d.per_row[0], 0.16, 1e-9);
    EXPECT_NEAR(d.per_row[1], 0.0, 1e-9);
    EXPECT_NEAR(d.per_row[2], 0.02, 1e-9);
}

TEST(Delta, ZeroOnConsistentSystem) {
    const UnitMatrix a{{0.06, 0.87, 0.95}, {0.75, 0.13, 0.88}, {0.82, 0.06, 0.19}};
    EXPECT_EQ(chebyshev_delta(a, {0.4, 0.7, 0.7}).delta, 0.0);
}

TEST(Delta, SingleEntry) {
    EXPECT_NEAR(chebyshev_delta(UnitMatrix{{0.2}}, {0.8}).delta, 0.6, 1e-12);
    EXPECT_EQ(chebyshev_delta(UnitMatrix{{0.9}}, {0.8}).delta, 0.0);
}

TEST(Delta, ThresholdConditionIsSharp) {
    EXPECT_TRUE(threshold_condition(kA, kB, 0.16));
    EXPECT_FALSE(threshold_condition(kA, kB, 0.16 - 1e-8));
}

TEST(Report, ExtremalApproximations) {
    const auto r = chebyshev_report(kA, kB);
    EXPECT_TRUE(VecEq(r.lower, {0.38, 0, 0.71}));
    EXPECT_TRUE(VecEq(r.upper, {0.70, 0.29, 1.00}));
    EXPECT_TRUE(VecEq(r.greatest_cheb, {0.38, 0.29, 0.85}));
    EXPECT_TRUE(VecEq(r.eta, {0.29, 1, 1}));
    ASSERT_TRUE(r.has_minimal);
    EXPECT_TRUE(SetEq(r.minimal_chebs, {{0.38, 0.10, 0.71}}));
    EXPECT_TRUE(SetEq(r.minimal_approx_solutions, {{0, 0.38, 0.71}}));
    EXPECT_NEAR(linf_dist(kB, r.greatest_cheb), r.delta, 1e-9);
    EXPECT_NEAR(linf_dist(kB, r.minimal_chebs[0]), r.delta, 1e-9);
}

TEST(Report, SkipMinimal) {
    const auto r = chebyshev_report(kA, kB, {}, default_enumeration_cap, false);
    EXPECT_FALSE(r.has_minimal);
    EXPECT_THROW(is_cheb_approximation(kA, kB, r, r.greatest_cheb), std::invalid_argument);
}

TEST(Membership, ApproximateSolutions) {
    const auto r = chebyshev_report(kA, kB);
    EXPECT_TRUE(is_approx_solution(kA, kB, r, {0.29, 1, 1}));
    EXPECT_TRUE(is_approx_solution(kA, kB, r, {0, 0.38, 0.71}));
    EXPECT_TRUE(is_approx_solution(kA, kB, r, {0.1, 0.5, 0.8}));
    EXPECT_FALSE(is_approx_solution(kA, kB, r, {0.71, 0.38, 0}));  // above eta
    EXPECT_FALSE(is_approx_solution(kA, kB, r, {0, 0.3, 0.71}));   // image too low
    for (const UnitVector x : {UnitVector{0.29, 1, 1}, UnitVector{0.71, 0.38, 0}, UnitVector{0, 0.3, 0.71}})
        EXPECT_EQ(is_approx_solution(kA, kB, r, x), is_approx_solution_subset_char(kA, kB, r, x));
}

TEST(Membership, SubsetSetsForExample) {
    const SubsetCharData data(kA, kB, 0.16);
    // H_j = { i : a_ij < b_i - Delta }
    EXPECT_EQ(data.H()[0], (std::vector<bool>{true, false, false}));
    EXPECT_EQ(data.H()[1], (std::vector<bool>{false, false, true}));
    EXPECT_EQ(data.H()[2], (std::vector<bool>{true, false, false}));
    EXPECT_NEAR(data.xi(0b101), 0.38, 1e-9);
    EXPECT_NEAR(data.xi(0b010), 0.71, 1e-9);
    EXPECT_EQ(data.xi(0b011), 0.0);
}

TEST(Membership, SubsetCapEnforced) {
    const auto wide = UnitMatrix::filled(2, 20, 0.5);
    EXPECT_THROW(SubsetCharData(wide, {0.1, 0.2}, 0.0), SubsetCapExceeded);
}

TEST(Membership, ChebyshevApproximations) {
    const auto r = chebyshev_report(kA, kB);
    EXPECT_TRUE(is_cheb_approximation(kA, kB, r, {0.38, 0.29, 0.85}));
    EXPECT_TRUE(is_cheb_approximation(kA, kB, r, {0.38, 0.10, 0.71}));
    EXPECT_FALSE(is_cheb_approximation(kA, kB, r, kB));
    const UnitVector mid = maxmin_prod(kA, {0.1, 0.38, 0.8});
    EXPECT_TRUE(is_cheb_approximation(kA, kB, r, mid));
}
