#pragma once
// Binomial opinions about a single proposition and their correspondence with
// positive/negative evidence counts.

#include <string>
#include <utility>

namespace polyrep {

// Tolerance accepted on the b+d+u=1 constraint and the [0,1] bounds before a
// value is rejected. Inputs inside the tolerance are renormalized.
inline constexpr double kInputTolerance = 1e-9;

// Positive (r) and negative (s) evidence. Reals so that extractors may weight
// observations.
struct EvidenceCount {
    double positive = 0.0;
    double negative = 0.0;

    // Throws ConstraintViolation when either count is negative or not finite.
    static EvidenceCount make(double positive, double negative);

    EvidenceCount operator+(const EvidenceCount& other) const {
        return {positive + other.positive, negative + other.negative};
    }
};

enum class Provenance {
    FirstHand,    // produced directly by the owning observer
    Recommended,  // derived through a recommendation chain
};

// An observer's opinion (b, d, u, a) about a proposition. Owner and proposition
// are carried for bookkeeping only and never enter the arithmetic.
class Opinion {
public:
    // Vacuous opinion (0, 0, 1, 0.5) with empty owner and proposition.
    Opinion() = default;

    // Validates and renormalizes. Throws ConstraintViolation.
    static Opinion make(std::string owner, std::string proposition, double belief, double disbelief,
                        double uncertainty, double base_rate,
                        Provenance provenance = Provenance::FirstHand);

    const std::string& owner() const noexcept { return owner_; }
    const std::string& proposition() const noexcept { return proposition_; }
    double belief() const noexcept { return belief_; }
    double disbelief() const noexcept { return disbelief_; }
    double uncertainty() const noexcept { return uncertainty_; }
    double base_rate() const noexcept { return base_rate_; }
    Provenance provenance() const noexcept { return provenance_; }

    bool is_dogmatic() const noexcept { return uncertainty_ == 0.0; }
    bool is_vacuous() const noexcept { return uncertainty_ == 1.0; }

    // Same numbers, different labels.
    Opinion relabeled(std::string owner, std::string proposition) const;

private:
    friend Opinion from_evidence(std::string, std::string, const EvidenceCount&, double);

    std::string owner_;
    std::string proposition_;
    double belief_ = 0.0;
    double disbelief_ = 0.0;
    double uncertainty_ = 1.0;
    double base_rate_ = 0.5;
    Provenance provenance_ = Provenance::FirstHand;
};

inline Opinion make_opinion(std::string owner, std::string proposition, double b, double d,
                            double u, double a) {
    return Opinion::make(std::move(owner), std::move(proposition), b, d, u, a);
}

// b = r/(r+s+2), d = s/(r+s+2), u = 2/(r+s+2).
// The uncertainty is stored as the complement 1-(b+d) so that b+d+u evaluates
// to exactly 1.0 in double arithmetic; it agrees with 2/(r+s+2) to a few ulps.
Opinion from_evidence(std::string owner, std::string proposition, const EvidenceCount& ev,
                      double base_rate);

// Inverse mapping r = 2b/u, s = 2d/u. Throws DogmaticOpinion when u = 0.
// Accuracy degrades as u approaches 0 since both counts grow without bound.
EvidenceCount to_evidence(const Opinion& op);

// Probability expectation E = b + a*u.
double expectation(const Opinion& op) noexcept;

}  // namespace polyrep
