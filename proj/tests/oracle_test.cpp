#include <gtest/gtest.h>

#include <cmath>

#include "polyrep/error.hpp"
#include "polyrep/oracle.hpp"

namespace polyrep {
namespace {

TEST(BetaMeanCheck, Fixtures) {
    const OracleReport even = beta_mean_check({8, 8}, 0.5, 1'000'000, 1);
    EXPECT_EQ(even.analytic, 0.5);
    EXPECT_TRUE(even.pass);
    EXPECT_EQ(even.samples, 1'000'000u);
    EXPECT_DOUBLE_EQ(even.tolerance, 3 * even.standard_error);

    const OracleReport uniform = beta_mean_check({0, 0}, 0.5, 200'000, 2);
    EXPECT_EQ(uniform.analytic, 0.5);
    EXPECT_TRUE(uniform.pass);
    // Var of U(0,1) is 1/12.
    EXPECT_NEAR(uniform.standard_error, std::sqrt(1.0 / 12 / 200'000), 1e-5);

    const OracleReport skewed = beta_mean_check({2, 0}, 0.5, 200'000, 3);
    EXPECT_EQ(skewed.analytic, 0.75);
    EXPECT_TRUE(skewed.pass);
}

TEST(BetaMeanCheck, PassFlagMatchesThreeSigmaBand) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const OracleReport r = beta_mean_check({3, 1}, 0.3, 100'000, seed);
        EXPECT_EQ(r.pass, std::abs(r.analytic - r.empirical) <= 3 * r.standard_error);
    }
}

TEST(BetaMeanCheck, Reproducible) {
    const OracleReport a = beta_mean_check({50, 10}, 0.3, 100'000, 99);
    const OracleReport b = beta_mean_check({50, 10}, 0.3, 100'000, 99);
    EXPECT_EQ(a.empirical, b.empirical);
    EXPECT_EQ(a.standard_error, b.standard_error);
    const OracleReport c = beta_mean_check({50, 10}, 0.3, 100'000, 100);
    EXPECT_NE(a.empirical, c.empirical);
}

TEST(BetaMeanCheck, Errors) {
    EXPECT_THROW(beta_mean_check({0, 3}, 0.0, 100'000, 1), DegenerateDistribution);
    EXPECT_THROW(beta_mean_check({3, 0}, 1.0, 100'000, 1), DegenerateDistribution);
    EXPECT_NO_THROW(beta_mean_check({1, 0}, 0.0, 100'000, 1));
    EXPECT_THROW(beta_mean_check({1, 1}, 0.5, 10, 1), ConstraintViolation);
}

TEST(BetaSampler, MomentsMatch) {
    // Shapes below and above 1 exercise both gamma branches.
    for (const auto& [alpha, beta] : {std::pair{2.0, 5.0}, {0.6, 0.4}, {52.0, 11.4}}) {
        BetaSampler sampler(alpha, beta, 5);
        const int n = 400'000;
        double sum = 0, sum_sq = 0;
        for (int i = 0; i < n; ++i) {
            const double x = sampler();
            ASSERT_GT(x, 0.0);
            ASSERT_LT(x, 1.0);
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / n;
        const double var = sum_sq / n - mean * mean;
        const double t = alpha + beta;
        const double expected_var = alpha * beta / (t * t * (t + 1));
        EXPECT_NEAR(mean, alpha / t, 4 * std::sqrt(expected_var / n));
        EXPECT_NEAR(var, expected_var, 0.02 * expected_var);
    }
}

TEST(ConsensusEvidenceCheck, Examples) {
    const OracleReport worked = consensus_evidence_check(make_opinion("A", "x", 0.8, 0, 0.2, 0.5),
                                                         make_opinion("B", "x", 0, 0.8, 0.2, 0.5));
    EXPECT_TRUE(worked.pass);
    EXPECT_LE(worked.empirical, 1e-9);

    const OracleReport vacuous = consensus_evidence_check(make_opinion("A", "x", 0, 0, 1, 0.5),
                                                          make_opinion("B", "x", 0, 0, 1, 0.5));
    EXPECT_TRUE(vacuous.pass);
    EXPECT_EQ(vacuous.empirical, 0.0);

    EXPECT_THROW(consensus_evidence_check(make_opinion("A", "x", 1, 0, 0, 0.5),
                                          make_opinion("B", "x", 0, 0, 1, 0.5)),
                 DogmaticOpinion);
    EXPECT_THROW(consensus_evidence_check(make_opinion("A", "x", 0, 0, 1, 0.4),
                                          make_opinion("B", "x", 0, 0, 1, 0.5)),
                 ConstraintViolation);
}

TEST(ConsensusEvidenceCheck, RandomSweepAllPass) {
    const OracleReport sweep = consensus_evidence_sweep(10'000, 7);
    EXPECT_TRUE(sweep.pass);
    EXPECT_EQ(sweep.samples, 10'000u);
    EXPECT_LE(sweep.empirical, 1e-9);
}

TEST(OracleSuite, ReproducibleAndPassing) {
    const auto first = run_oracle_suite(42, 100'000);
    const auto second = run_oracle_suite(42, 100'000);
    EXPECT_EQ(format_reports(first), format_reports(second));
    EXPECT_EQ(first.size(), 11u);
    for (const auto& r : first) EXPECT_TRUE(r.pass) << r.quantity;
    const std::string table = format_reports(first);
    EXPECT_EQ(table.rfind("quantity\tanalytic", 0), 0u);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 12);
}

}  // namespace
}  // namespace polyrep
