#pragma once
// Independent correctness oracles.
//
// beta_mean_check compares the probability expectation of an evidence-derived
// opinion with the empirical mean of samples from Beta(r + 2a, s + 2(1-a)).
// consensus_evidence_check compares the consensus operator with plain
// evidence addition followed by the evidence-to-opinion mapping.
//
// Sampling is reproducible across platforms: uniforms come from std::mt19937_64
// (fully specified by the standard) and the Beta variates are built from gamma
// variates drawn with the Marsaglia-Tsang squeeze method, whose normals come
// from the Marsaglia polar method. No implementation-defined std::*_distribution
// is involved.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyrep/opinion.hpp"

namespace polyrep {

inline constexpr std::uint64_t kMinOracleSamples = 100'000;

struct OracleReport {
    std::string quantity;
    double analytic = 0.0;
    double empirical = 0.0;
    std::uint64_t samples = 0;
    double standard_error = 0.0;
    // Acceptance band for |analytic - empirical|: 3 standard errors for
    // sampling checks, the fixed comparison tolerance for exact checks.
    double tolerance = 0.0;
    bool pass = false;
};

class BetaSampler {
public:
    BetaSampler(double alpha, double beta, std::uint64_t seed);
    double operator()();

private:
    double uniform();       // in (0, 1)
    double normal();
    double gamma(double shape);

    double alpha_;
    double beta_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// Throws DegenerateDistribution when a shape parameter is 0, and
// ConstraintViolation when samples < kMinOracleSamples.
OracleReport beta_mean_check(const EvidenceCount& ev, double base_rate, std::uint64_t samples,
                             std::uint64_t seed);

// Reports the largest componentwise (b, d, u) gap between the two routes as
// `empirical` against an analytic gap of 0, passing within 1e-9.
// Throws DogmaticOpinion for dogmatic inputs and ConstraintViolation when the
// base rates differ.
OracleReport consensus_evidence_check(const Opinion& a, const Opinion& b);

// Runs 10^4 seeded random pairs through consensus_evidence_check and folds
// them into one report whose `empirical` is the worst gap.
OracleReport consensus_evidence_sweep(std::uint64_t pairs, std::uint64_t seed);

// Beta fixtures {(0,0),(2,0),(8,8),(50,10)} x a in {0.3, 0.5}, the worked
// consensus examples and a random consensus sweep.
std::vector<OracleReport> run_oracle_suite(std::uint64_t seed, std::uint64_t samples);

// Line-oriented table, one header line and one line per report.
std::string format_reports(const std::vector<OracleReport>& reports);

}  // namespace polyrep
