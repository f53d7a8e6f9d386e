#include "support.hpp"

using namespace fuzzyrel;
using testing_support::SetEq;
using testing_support::VecEq;

namespace {
const UnitMatrix kGamma{{0.1, 1, 1, 1, 1, 1},   {1, 1, 1, 1, 1, 1},   {0.1, 1, 1, 0.8, 1, 1},
                        {1, 1, 1, 0.8, 1, 1},   {0.1, 1, 1, 1, 1, 0.3}, {1, 1, 1, 1, 1, 0.3},
                        {0.1, 1, 1, 0.8, 1, 0.3}, {1, 1, 1, 0.8, 1, 0.3}};
const UnitVector kY{0.3, 1, 0.3, 0.8, 0.3, 0.7, 0.3, 0.7};
const UnitVector kYPrime{0.3, 1, 0.3, 0.8, 0.7, 0.7, 0.3, 0.7};
}  // namespace

TEST(SigmaEps, Values) {
    EXPECT_NEAR(sigma_eps(0.3, 0.1, 0.7), 0.2, 1e-12);
    EXPECT_EQ(sigma_eps(0.7, 0.1, 0.3), 0.0);
    EXPECT_NEAR(sigma_eps(0.1, 0.5, 0.9), 0.4, 1e-12);
}

TEST(Nabla, ConsistentSystem) {
    EXPECT_EQ(dual_chebyshev_nabla(kGamma, kY).delta, 0.0);
    const auto s = solve({kGamma, kY, Composition::minmax});
    ASSERT_TRUE(s.consistent);
    EXPECT_TRUE(VecEq(*s.lowest, {0.3, 0, 0, 0, 0, 0.7}));
    EXPECT_TRUE(SetEq(s.extremal_opposite, {{0.3, 1, 1, 0.8, 1, 0.7}}));
}

TEST(Nabla, InconsistentSystem) {
    const auto d = dual_chebyshev_nabla(kGamma, kYPrime);
    EXPECT_NEAR(d.delta, 0.2, 1e-9);
    const auto direct = dual_chebyshev_nabla_direct(kGamma, kYPrime);
    EXPECT_NEAR(direct.delta, d.delta, 1e-9);
    for (std::size_t i = 0; i < d.per_row.size(); ++i) EXPECT_NEAR(direct.per_row[i], d.per_row[i], 1e-9);
}

TEST(DualReport, ExtremalApproximations) {
    const auto r = dual_report(kGamma, kYPrime);
    EXPECT_NEAR(r.nabla, 0.2, 1e-9);
    EXPECT_TRUE(VecEq(r.lowest_cheb, {0.5, 1, 0.5, 0.8, 0.5, 0.5, 0.5, 0.5}));
    EXPECT_TRUE(VecEq(apply_U(kGamma, r.lower), r.lowest_cheb));
    ASSERT_TRUE(r.has_maximal);
    EXPECT_TRUE(SetEq(r.maximal_chebs, {{0.5, 1, 0.5, 1, 0.5, 0.9, 0.5, 0.9}}));
    EXPECT_TRUE(SetEq(r.maximal_approx_solutions, {{0.5, 1, 1, 1, 1, 0.9}}));
    EXPECT_TRUE(VecEq(r.nu, {0.5, 0, 0, 0, 0, 0.5}));
}

TEST(DualReport, Membership) {
    const auto r = dual_report(kGamma, kYPrime);
    const UnitVector top{0.5, 1, 1, 1, 1, 0.9};
    EXPECT_TRUE(is_dual_approx_solution(kGamma, kYPrime, r, top));
    EXPECT_NEAR(linf_dist(minmax_prod(kGamma, top), kYPrime), 0.2, 1e-9);
    EXPECT_TRUE(is_dual_approx_solution(kGamma, kYPrime, r, r.nu));
    EXPECT_FALSE(is_dual_approx_solution(kGamma, kYPrime, r, {0.4, 0, 0, 0, 0, 0.5}));
    EXPECT_TRUE(is_dual_cheb_approximation(kGamma, kYPrime, r, r.lowest_cheb));
    EXPECT_TRUE(is_dual_cheb_approximation(kGamma, kYPrime, r, r.maximal_chebs[0]));
    EXPECT_FALSE(is_dual_cheb_approximation(kGamma, kYPrime, r, kYPrime));
}

TEST(DualReport, MirrorsPrimalReport) {
    const UnitMatrix a{{0.03, 0.38, 0.26}, {0.98, 0.10, 0.03}, {0.77, 0.15, 0.85}};
    const UnitVector b{0.54, 0.13, 0.87};
    const auto primal = chebyshev_report(a, b);
    const auto dual = dual_report(complement(a), complement(b));
    EXPECT_NEAR(dual.nabla, primal.delta, 1e-12);
    EXPECT_TRUE(VecEq(dual.lowest_cheb, complement(primal.greatest_cheb)));
    EXPECT_TRUE(VecEq(dual.nu, complement(primal.eta)));
    EXPECT_TRUE(SetEq(dual.maximal_chebs, complement(primal.minimal_chebs)));
}
