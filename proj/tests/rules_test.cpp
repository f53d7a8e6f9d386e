#include "support.hpp"

using namespace fuzzyrel;
using testing_support::SetEq;
using testing_support::VecEq;

namespace {

std::vector<RuleTrainingInstance> two_blocks() {
    return {{UnitMatrix{{0.4, 1, 1, 1}, {1, 1, 1, 1}, {0.4, 1, 1, 0.8}, {1, 1, 1, 0.8}}, {0.3, 1, 0.3, 0.8}},
            {UnitMatrix{{1, 1, 1, 1}, {1, 0.7, 1, 1}, {1, 1, 1, 0.1}, {1, 0.7, 1, 0.1}}, {1, 0.8, 0.3, 0.3}}};
}

RuleTrainingInstance premises(const UnitVector& y) {
    return {UnitMatrix{{0.1, 1, 1, 1, 1, 1},   {1, 1, 1, 1, 1, 1},     {0.1, 1, 1, 0.8, 1, 1},
                       {1, 1, 1, 0.8, 1, 1},   {0.1, 1, 1, 1, 1, 0.3}, {1, 1, 1, 1, 1, 0.3},
                       {0.1, 1, 1, 0.8, 1, 0.3}, {1, 1, 1, 0.8, 1, 0.3}},
            y};
}

}  // namespace

TEST(Stacking, ConcatenatesBlocks) {
    const auto s = stack_systems(two_blocks());
    EXPECT_EQ(s.kind, Composition::minmax);
    EXPECT_EQ(s.matrix.rows(), 8U);
    EXPECT_EQ(s.matrix.cols(), 4U);
    EXPECT_TRUE(VecEq(s.rhs, {0.3, 1, 0.3, 0.8, 1, 0.8, 0.3, 0.3}));
    EXPECT_TRUE(VecEq(s.matrix.row(5), {1, 0.7, 1, 1}));
}

TEST(Stacking, SingleAndRepeated) {
    const auto one = two_blocks()[0];
    const auto s1 = stack_systems({one});
    EXPECT_TRUE(approx_equal(s1.matrix, one.gamma));
    const auto s3 = stack_systems({one, one, one});
    EXPECT_EQ(s3.rhs.size(), 12U);
    EXPECT_TRUE(VecEq(s3.rhs, {0.3, 1, 0.3, 0.8, 0.3, 1, 0.3, 0.8, 0.3, 1, 0.3, 0.8}));
}

TEST(Stacking, RejectsRaggedAndEmpty) {
    EXPECT_THROW(stack_systems({}), DimensionMismatch);
    std::vector<RuleTrainingInstance> bad{two_blocks()[0], {UnitMatrix{{0.1, 0.2}}, {0.1}}};
    EXPECT_THROW(stack_systems(bad), DimensionMismatch);
    EXPECT_THROW(RuleTrainingInstance(UnitMatrix{{0.1, 0.2}}, {0.1, 0.2}), DimensionMismatch);
}

TEST(RuleLearning, ConsistentPremises) {
    const auto r = learn_rule_parameters({premises({0.3, 1, 0.3, 0.8, 0.3, 0.7, 0.3, 0.7})});
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.nabla, 0.0);
    ASSERT_EQ(r.intervals.size(), 1U);
    ASSERT_EQ(r.intervals[0].intervals.size(), 1U);
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].lower, {0.3, 0, 0, 0, 0, 0.7}));
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].upper, {0.3, 1, 1, 0.8, 1, 0.7}));
}

TEST(RuleLearning, InconsistentPremises) {
    const auto r = learn_rule_parameters({premises({0.3, 1, 0.3, 0.8, 0.7, 0.7, 0.3, 0.7})});
    EXPECT_FALSE(r.consistent);
    EXPECT_NEAR(r.nabla, 0.2, 1e-9);
    ASSERT_EQ(r.intervals.size(), 2U);
    EXPECT_TRUE(VecEq(r.intervals[0].approximation, {0.5, 1, 0.5, 0.8, 0.5, 0.5, 0.5, 0.5}));
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].lower, {0.5, 0, 0, 0, 0, 0.5}));
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].upper, {0.5, 1, 1, 0.8, 1, 0.5}));
    EXPECT_TRUE(VecEq(r.intervals[1].approximation, {0.5, 1, 0.5, 1, 0.5, 0.9, 0.5, 0.9}));
    EXPECT_TRUE(VecEq(r.intervals[1].intervals[0].lower, {0.5, 0, 0, 1, 0, 0.9}));
    EXPECT_TRUE(VecEq(r.intervals[1].intervals[0].upper, {0.5, 1, 1, 1, 1, 0.9}));
    EXPECT_TRUE(SetEq(r.maximal_solutions, {{0.5, 1, 1, 1, 1, 0.9}}));
}

TEST(RuleLearning, StackedBlocks) {
    const auto r = learn_rule_parameters(two_blocks());
    EXPECT_NEAR(r.nabla, 0.1, 1e-9);
    EXPECT_TRUE(VecEq(r.lowest_cheb, {0.4, 1, 0.4, 0.8, 1, 0.7, 0.2, 0.2}));
    EXPECT_TRUE(SetEq(r.maximal_chebs, {{0.4, 1, 0.4, 0.8, 1, 0.9, 0.4, 0.4}}));
    ASSERT_EQ(r.intervals.size(), 2U);
    // r_1 is only constrained by max(0.7, r_1) = 0.7, so the lowest solution has r_1 = 0
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].lower, {0, 0, 0, 0.2}));
    EXPECT_TRUE(VecEq(r.intervals[0].intervals[0].upper, {0.4, 0.7, 1, 0.2}));
    EXPECT_TRUE(VecEq(r.intervals[1].intervals[0].lower, {0, 0.9, 0, 0.4}));
    EXPECT_TRUE(VecEq(r.intervals[1].intervals[0].upper, {0.4, 0.9, 1, 0.4}));
}

TEST(RuleLearning, EveryReportedBoundIsAtDistanceNabla) {
    for (const auto& instances : {two_blocks(), std::vector<RuleTrainingInstance>{premises(
                                                    {0.3, 1, 0.3, 0.8, 0.7, 0.7, 0.3, 0.7})}}) {
        const auto r = learn_rule_parameters(instances);
        for (const auto& a : r.intervals) {
            for (const auto& iv : a.intervals) {
                EXPECT_TRUE(leq(iv.lower, iv.upper));
                for (const auto* x : {&iv.lower, &iv.upper}) {
                    EXPECT_TRUE(VecEq(minmax_prod(r.stacked.matrix, *x), a.approximation));
                    EXPECT_NEAR(linf_dist(minmax_prod(r.stacked.matrix, *x), r.stacked.rhs), r.nabla, 1e-9);
                }
            }
        }
    }
}

TEST(RuleLearning, StackingIntersectsConsistentBlocks) {
    testing_support::GridRng rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t p = rng.dim(1, 3);
        const auto x = rng.vector(p);
        const auto g1 = rng.matrix(rng.dim(1, 3), p);
        const auto g2 = rng.matrix(rng.dim(1, 3), p);
        const RuleTrainingInstance i1{g1, minmax_prod(g1, x)}, i2{g2, minmax_prod(g2, x)};
        const auto r = learn_rule_parameters({i1, i2});
        ASSERT_TRUE(r.consistent);
        // grid check: y solves the stack iff it solves both blocks
        const auto& iv = r.intervals[0].intervals;
        for (int s = 0; s < 20; ++s) {
            const auto y = rng.vector(p);
            const bool both = is_solution({g1, i1.target, Composition::minmax}, y) &&
                              is_solution({g2, i2.target, Composition::minmax}, y);
            const bool in_some = std::any_of(iv.begin(), iv.end(), [&](const ParameterInterval& v) {
                return leq(v.lower, y) && leq(y, v.upper);
            });
            EXPECT_EQ(both, in_some);
        }
    }
}

TEST(RuleLearning, LowestSolutionOfLowestApproximationIsBelowAnyOtherSolution) {
    const auto s = stack_systems(two_blocks());
    const UnitVector y_low{0.4, 1, 0.4, 0.8, 1, 0.7, 0.2, 0.2};
    // both vectors solve Gamma X = y_low; only the componentwise smaller one can be the lowest solution
    EXPECT_TRUE(is_solution({s.matrix, y_low, Composition::minmax}, {0, 0, 0, 0.2}));
    EXPECT_TRUE(is_solution({s.matrix, y_low, Composition::minmax}, {0, 0.7, 0, 0.2}));
    for (double r1 = 0.0; r1 <= 0.7 + 1e-12; r1 += 0.05)
        EXPECT_TRUE(is_solution({s.matrix, y_low, Composition::minmax}, {0, r1, 0, 0.2})) << r1;
    const auto sol = solve({s.matrix, y_low, Composition::minmax});
    EXPECT_TRUE(VecEq(*sol.lowest, {0, 0, 0, 0.2}));
}
