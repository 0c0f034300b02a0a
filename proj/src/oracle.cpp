#include "polyrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyrep/error.hpp"
#include "polyrep/format.hpp"
#include "polyrep/fusion.hpp"

namespace polyrep {

namespace {

constexpr double kConsensusTolerance = 1e-9;

// SplitMix64 finalizer, used to derive independent per-check seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double max_gap(const Opinion& x, const Opinion& y) {
    return std::max({std::abs(x.belief() - y.belief()), std::abs(x.disbelief() - y.disbelief()),
                     std::abs(x.uncertainty() - y.uncertainty())});
}

}  // namespace

BetaSampler::BetaSampler(double alpha, double beta, std::uint64_t seed)
    : alpha_(alpha), beta_(beta), engine_(seed) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        std::ostringstream msg;
        msg << "Beta(" << alpha << ", " << beta << ") has a vanishing shape parameter";
        throw DegenerateDistribution(msg.str());
    }
}

double BetaSampler::uniform() {
    // 53 random bits, shifted off zero.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double BetaSampler::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double x, y, s;
    do {
        x = 2.0 * uniform() - 1.0;
        y = 2.0 * uniform() - 1.0;
        s = x * x + y * y;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = y * f;
    has_spare_ = true;
    return x * f;
}

double BetaSampler::gamma(double shape) {
    if (shape < 1.0) {
        // G(k) = G(k+1) * U^(1/k)
        return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double BetaSampler::operator()() {
    const double x = gamma(alpha_);
    const double y = gamma(beta_);
    return x / (x + y);
}

OracleReport beta_mean_check(const EvidenceCount& ev, double base_rate, std::uint64_t samples,
                             std::uint64_t seed) {
    if (samples < kMinOracleSamples) {
        throw ConstraintViolation("beta oracle needs at least " + std::to_string(kMinOracleSamples) +
                                  " samples");
    }
    const Opinion op = from_evidence("oracle", "beta", ev, base_rate);
    const double alpha = ev.positive + 2.0 * base_rate;
    const double beta = ev.negative + 2.0 * (1.0 - base_rate);
    BetaSampler sampler(alpha, beta, seed);

    // Welford running mean and variance.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t n = 1; n <= samples; ++n) {
        const double x = sampler();
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    const double variance = m2 / static_cast<double>(samples - 1);

    OracleReport report;
    report.quantity = "E[r=" + shortest(ev.positive) + ",s=" + shortest(ev.negative) +
                      ",a=" + shortest(base_rate) + "]";
    report.analytic = expectation(op);
    report.empirical = mean;
    report.samples = samples;
    report.standard_error = std::sqrt(variance / static_cast<double>(samples));
    report.tolerance = 3.0 * report.standard_error;
    report.pass = std::abs(report.analytic - report.empirical) <= report.tolerance;
    return report;
}

OracleReport consensus_evidence_check(const Opinion& a, const Opinion& b) {
    if (a.base_rate() != b.base_rate()) {
        throw ConstraintViolation("consensus evidence check needs equal base rates");
    }
    const Opinion fused = consensus(a, b);
    const Opinion added =
        from_evidence("evidence", a.proposition(), to_evidence(a) + to_evidence(b), a.base_rate());

    OracleReport report;
    report.quantity = "consensus~evidence";
    report.analytic = 0.0;
    report.empirical = max_gap(fused, added);
    report.samples = 1;
    report.tolerance = kConsensusTolerance;
    report.pass = report.empirical <= report.tolerance;
    return report;
}

OracleReport consensus_evidence_sweep(std::uint64_t pairs, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    const auto uniform = [&] { return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53; };
    // Uniform point on the (b, d, u) simplex.
    const auto random_opinion = [&](const std::string& owner, double base_rate) {
        const double x = -std::log(uniform());
        const double y = -std::log(uniform());
        const double z = -std::log(uniform());
        const double sum = x + y + z;
        return Opinion::make(owner, "sweep", x / sum, y / sum, z / sum, base_rate);
    };

    OracleReport report;
    report.quantity = "consensus~evidence[random]";
    report.samples = pairs;
    report.tolerance = kConsensusTolerance;
    report.pass = true;
    for (std::uint64_t i = 0; i < pairs; ++i) {
        const double base_rate = uniform();
        const Opinion a = random_opinion("A", base_rate);
        const Opinion b = random_opinion("B", base_rate);
        const OracleReport one = consensus_evidence_check(a, b);
        report.empirical = std::max(report.empirical, one.empirical);
        report.pass = report.pass && one.pass;
    }
    return report;
}

std::vector<OracleReport> run_oracle_suite(std::uint64_t seed, std::uint64_t samples) {
    std::vector<OracleReport> reports;
    std::uint64_t stream = 0;
    for (const auto& [r, s] : {std::pair{0.0, 0.0}, {2.0, 0.0}, {8.0, 8.0}, {50.0, 10.0}}) {
        for (const double a : {0.3, 0.5}) {
            reports.push_back(beta_mean_check({r, s}, a, samples, mix(seed ^ mix(++stream))));
        }
    }

    const auto named = [](OracleReport report, std::string name) {
        report.quantity = std::move(name);
        return report;
    };
    reports.push_back(named(consensus_evidence_check(make_opinion("A", "x", 0.8, 0.0, 0.2, 0.5),
                                                     make_opinion("B", "x", 0.0, 0.8, 0.2, 0.5)),
                            "consensus~evidence[worked]"));
    reports.push_back(named(consensus_evidence_check(make_opinion("A", "x", 0.0, 0.0, 1.0, 0.5),
                                                     make_opinion("B", "x", 0.0, 0.0, 1.0, 0.5)),
                            "consensus~evidence[vacuous]"));
    reports.push_back(consensus_evidence_sweep(10'000, mix(seed ^ mix(++stream))));
    return reports;
}

std::string format_reports(const std::vector<OracleReport>& reports) {
    std::ostringstream out;
    const auto sci = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return std::string(buf);
    };
    out << "quantity\tanalytic\tempirical\tgap\tsamples\tstd_error\ttolerance\tstatus\n";
    for (const auto& r : reports) {
        out << r.quantity << '\t' << fixed6(r.analytic) << '\t' << fixed6(r.empirical) << '\t'
            << sci(std::abs(r.analytic - r.empirical)) << '\t' << r.samples << '\t'
            << sci(r.standard_error) << '\t' << sci(r.tolerance) << '\t'
            << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

}  // namespace polyrep
