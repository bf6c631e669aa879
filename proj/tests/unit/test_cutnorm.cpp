#include <canonram/cutnorm.hpp>
#include <canonram/errors.hpp>
#include <canonram/graph.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"

using namespace canonram;

TEST(WeightedGraph, SetAndSymmetry) {
    WeightedGraph f(4);
    f.set(3, 1, 0.25);
    EXPECT_EQ(f.at(1, 3), 0.25);
    EXPECT_EQ(f.at(3, 1), 0.25);
    EXPECT_EQ(f.at(2, 2), 0.0);
    EXPECT_THROW(f.set(2, 2, 1.0), std::invalid_argument);
    EXPECT_THROW(f.set(1, 2, std::nan("")), std::invalid_argument);
    EXPECT_TRUE(f.within(0, 1));
    EXPECT_FALSE(f.is_indicator());
    EXPECT_TRUE(WeightedGraph::indicator(OrderedGraph::complete(4)).is_indicator());
    EXPECT_EQ((f - f).max_abs(), 0.0);
    EXPECT_EQ((f + f).at(1, 3), 0.5);
    EXPECT_EQ(f.scaled(-4).at(3, 1), -1.0);
}

TEST(PatternGraph, Builders) {
    EXPECT_EQ(PatternGraph::complete(4).edge_count(), 6u);
    EXPECT_TRUE(PatternGraph::complete(4).is_complete());
    EXPECT_EQ(PatternGraph::cycle(5).edge_count(), 5u);
    EXPECT_FALSE(PatternGraph::cycle(5).is_complete());
}

TEST(EvalE, Fixtures) {
    const auto one = WeightedGraph::constant(3, 1.0);
    EXPECT_EQ(eval_e(one, VertexSet::range(3), VertexSet::range(3)), 6.0);
    EXPECT_EQ(eval_e(one, VertexSet{1}, VertexSet{1}), 0.0);
    EXPECT_EQ(eval_e(one, VertexSet{1}, VertexSet{2, 3}), 2.0);
    WeightedGraph f(3);
    f.set(1, 2, -0.5);
    f.set(2, 3, 2.0);
    // Ordered pairs 12, 13, 22, 23.
    EXPECT_EQ(eval_e(f, VertexSet{1, 2}, VertexSet{2, 3}), -0.5 + 0.0 + 0.0 + 2.0);
    EXPECT_EQ(eval_e(WeightedGraph::indicator(OrderedGraph::complete(3)), VertexSet{1, 2}, VertexSet{2, 3}), 3.0);
}

TEST(CutnormExact, AllOnes) {
    EXPECT_NEAR(cutnorm_exact(WeightedGraph::constant(10, 1.0)), 0.9, 1e-15);
    EXPECT_EQ(cutnorm_exact(WeightedGraph(6)), 0.0);
    const auto ind = WeightedGraph::indicator(gnp_generate(9, 0.5, 1).graph);
    EXPECT_EQ(cutnorm_exact(ind - ind), 0.0);
    EXPECT_EQ(cutnorm_heuristic(WeightedGraph(6), 2, 0), 0.0);
}

TEST(CutnormExact, MatchesBruteForce) {
    auto rng = oracle::rng_for(20);
    for (int t = 0; t < 40; ++t) {
        const Vertex n = 2 + static_cast<Vertex>(uniform_below(rng, 6));
        const auto f = oracle::dyadic_weights(n, rng);
        EXPECT_NEAR(cutnorm_exact(f), oracle::cutnorm(f), 1e-12) << "trial " << t;
    }
}

TEST(CutnormExact, SeminormProperties) {
    auto rng = oracle::rng_for(21);
    for (int t = 0; t < 20; ++t) {
        const auto f = oracle::random_weights(9, rng, -1, 1);
        const auto g = oracle::random_weights(9, rng, -1, 1);
        const double nf = cutnorm_exact(f);
        EXPECT_GE(nf, 0.0);
        EXPECT_NEAR(cutnorm_exact(f.scaled(-2.5)), 2.5 * nf, 1e-12);
        EXPECT_LE(cutnorm_exact(f + g), nf + cutnorm_exact(g) + 1e-12);
        EXPECT_LE(nf, f.max_abs() + 1e-12);
    }
}

TEST(CutnormExact, Guard) {
    EXPECT_THROW(cutnorm_exact(WeightedGraph(kCutnormExactMaxN + 1)), TooLarge);
}

TEST(CutnormHeuristic, LowerBoundOnExact) {
    auto rng = oracle::rng_for(22);
    for (int t = 0; t < 15; ++t) {
        const auto f = oracle::random_weights(12, rng, -1, 1);
        const double h = cutnorm_heuristic(f, 8, t);
        EXPECT_LE(h, cutnorm_exact(f) + 1e-12);
        EXPECT_GT(h, 0.0);
        EXPECT_EQ(h, cutnorm_heuristic(f, 8, t));
    }
    EXPECT_NEAR(cutnorm_heuristic(WeightedGraph::constant(10, 1.0), 3, 1), 0.9, 1e-15);
}

TEST(HomDensity, Fixtures) {
    EXPECT_NEAR(hom_density(WeightedGraph::constant(5, 1.0), PatternGraph::complete(3)), 0.48, 1e-15);
    EXPECT_NEAR(hom_density(WeightedGraph::constant(4, 1.0), PatternGraph::complete(3)), 0.375, 1e-15);
    EXPECT_EQ(hom_density(WeightedGraph(5), PatternGraph::complete(3)), 0.0);
}

TEST(HomDensity, MatchesOdometer) {
    auto rng = oracle::rng_for(23);
    const PatternGraph shapes[] = {PatternGraph::complete(3), PatternGraph::cycle(4),
                                   PatternGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})};
    for (int t = 0; t < 10; ++t) {
        const auto f = oracle::random_weights(7, rng, -1, 2);
        for (const auto& h : shapes) EXPECT_NEAR(hom_density(f, h), oracle::hom_density(f, h), 1e-12);
    }
}

TEST(HomDensity, ScalesWithEdgeCount) {
    auto rng = oracle::rng_for(24);
    const auto f = oracle::random_weights(8, rng);
    const auto h = PatternGraph::cycle(5);
    EXPECT_NEAR(hom_density(f.scaled(0.5), h), std::pow(0.5, 5) * hom_density(f, h), 1e-14);
}

TEST(HomDensity, IndicatorAgreesWithCliqueCount) {
    auto rng = oracle::rng_for(25);
    for (int t = 0; t < 5; ++t) {
        const auto g = oracle::random_graph(12, 0.6, rng);
        for (unsigned ell : {3u, 4u}) {
            const double expected = static_cast<double>(count_cliques(g, ell)) / std::pow(12.0, ell);
            EXPECT_NEAR(hom_density(WeightedGraph::indicator(g), PatternGraph::complete(ell)), expected, 1e-15);
            EXPECT_NEAR(oracle::hom_density(WeightedGraph::indicator(g), PatternGraph::complete(ell)), expected,
                        1e-15);
        }
    }
}

TEST(HomDensity, Guards) {
    EXPECT_THROW(hom_density(WeightedGraph(4), PatternGraph::complete(9)), TooLarge);
    WeightedGraph f(3);
    f.set(1, 2, 2e6);
    EXPECT_THROW(hom_density(f, PatternGraph::complete(3)), RangeViolation);
}

TEST(CountingLemma, FullAgainstEmpty) {
    const auto res = counting_lemma_check(WeightedGraph::constant(10, 1.0), WeightedGraph(10), PatternGraph::complete(3));
    EXPECT_NEAR(res.lhs, 0.72, 1e-15);
    EXPECT_NEAR(res.rhs, 5.4, 1e-14);
    EXPECT_TRUE(res.holds);
}

TEST(CountingLemma, EqualArguments) {
    auto rng = oracle::rng_for(29);
    const auto f = oracle::random_weights(7, rng);
    const auto res = counting_lemma_check(f, f, PatternGraph::complete(3));
    EXPECT_EQ(res.lhs, 0.0);
    EXPECT_EQ(res.rhs, 0.0);
    EXPECT_TRUE(res.holds);
}

TEST(CountingLemma, HoldsOnRandomPairs) {
    auto rng = oracle::rng_for(26);
    for (int t = 0; t < 20; ++t) {
        const auto f = oracle::random_weights(9, rng);
        const auto g = oracle::random_weights(9, rng);
        EXPECT_TRUE(counting_lemma_check(f, g, PatternGraph::cycle(4)).holds);
        EXPECT_TRUE(counting_lemma_check(f, g, PatternGraph::complete(4)).holds);
    }
    EXPECT_THROW(counting_lemma_check(WeightedGraph::constant(3, 2.0), WeightedGraph(3), PatternGraph::complete(3)),
                 RangeViolation);
}

TEST(SampleGraph, DeterministicAndExtremes) {
    EXPECT_TRUE(sample_graph_from_weights(WeightedGraph::constant(6, 1.0), 1).is_complete());
    EXPECT_EQ(sample_graph_from_weights(WeightedGraph(6), 1).edge_count(), 0u);
    auto rng = oracle::rng_for(27);
    const auto d = oracle::random_weights(20, rng);
    EXPECT_EQ(sample_graph_from_weights(d, 4), sample_graph_from_weights(d, 4));
    EXPECT_THROW(sample_graph_from_weights(WeightedGraph::constant(3, 1.5), 0), RangeViolation);
}

TEST(WeightedDegree, SkipsSelf) {
    const auto f = WeightedGraph::constant(5, 0.5);
    EXPECT_EQ(weighted_degree(f, 1, VertexSet::range(5)), 2.0);
    EXPECT_EQ(weighted_degree(f, 1, VertexSet{1}), 0.0);
}

TEST(DegreeLemma, SmallPerturbation) {
    auto rng = oracle::rng_for(28);
    const auto f = oracle::dyadic_weights(12, rng, 16, 240);
    auto noise = oracle::dyadic_weights(12, rng, -2, 2);
    const auto g = f + noise;
    const double eps = cutnorm_exact(f - g) + 1e-9;
    const auto res = degree_lemma_check(f, g, VertexSet::range(12), eps);
    EXPECT_TRUE(res.holds);
    EXPECT_NEAR(res.measured, eps - 1e-9, 1e-15);
    EXPECT_NEAR(res.bound, std::cbrt(eps) * 12, 1e-12);
}

TEST(DegreeLemma, EqualFunctionals) {
    auto rng = oracle::rng_for(30);
    const auto f = oracle::random_weights(10, rng);
    EXPECT_EQ(degree_lemma_check(f, f, VertexSet::range(10), 0.001).violations, 0u);
    const auto ind = WeightedGraph::indicator(OrderedGraph::complete(10));
    EXPECT_EQ(degree_lemma_check(ind, WeightedGraph::constant(10, 1.0), VertexSet::range(10), 0.001).violations, 0u);
}

TEST(DegreeLemma, HypothesesChecked) {
    const auto f = WeightedGraph::constant(8, 1.0);
    const WeightedGraph g(8);
    EXPECT_THROW(degree_lemma_check(f, g, VertexSet::range(8), 0.01), HypothesisViolated);
    EXPECT_THROW(degree_lemma_check(f, f, VertexSet{1, 2}, 0.1), HypothesisViolated);
}

TEST(TwoDensity, Values) {
    EXPECT_EQ(two_density(PatternGraph::complete(4)), Rational(5, 2));
    EXPECT_EQ(two_density(PatternGraph::complete(3)), Rational(2, 1));
    EXPECT_EQ(two_density(PatternGraph::cycle(5)), Rational(4, 3));
    EXPECT_EQ(two_density(PatternGraph::cycle(4)), Rational(3, 2));
    for (unsigned ell = 3; ell <= 8; ++ell) EXPECT_EQ(two_density(PatternGraph::complete(ell)), Rational(ell + 1, 2));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_LT(Rational(4, 3), Rational(3, 2));
    EXPECT_THROW(two_density(PatternGraph::complete(2)), TooFewVertices);
}

TEST(StrictlyBalanced, Fixtures) {
    for (unsigned ell = 3; ell <= 8; ++ell) EXPECT_TRUE(is_strictly_balanced(PatternGraph::complete(ell)));
    EXPECT_TRUE(is_strictly_balanced(PatternGraph::cycle(5)));
    const PatternGraph k4_pendant(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    EXPECT_FALSE(is_strictly_balanced(k4_pendant));
    EXPECT_THROW(is_strictly_balanced(PatternGraph::complete(9)), TooLarge);
}
