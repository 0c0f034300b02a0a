#include "polyrep/opinion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyrep/error.hpp"

namespace polyrep {

namespace {

double checked_unit(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw ConstraintViolation(std::string(name) + " is not finite");
    }
    if (value < -kInputTolerance || value > 1.0 + kInputTolerance) {
        std::ostringstream msg;
        msg << name << " = " << value << " lies outside [0,1]";
        throw ConstraintViolation(msg.str());
    }
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace

Opinion Opinion::make(std::string owner, std::string proposition, double belief, double disbelief,
                      double uncertainty, double base_rate, Provenance provenance) {
    double b = checked_unit(belief, "belief");
    double d = checked_unit(disbelief, "disbelief");
    double u = checked_unit(uncertainty, "uncertainty");
    const double a = checked_unit(base_rate, "base rate");

    const double sum = b + d + u;
    if (std::abs(sum - 1.0) > kInputTolerance) {
        std::ostringstream msg;
        msg << "belief + disbelief + uncertainty = " << sum << ", expected 1";
        throw ConstraintViolation(msg.str());
    }
    if (sum != 1.0) {
        b /= sum;
        d /= sum;
        u /= sum;
    }

    Opinion op;
    op.owner_ = std::move(owner);
    op.proposition_ = std::move(proposition);
    op.belief_ = b;
    op.disbelief_ = d;
    op.uncertainty_ = u;
    op.base_rate_ = a;
    op.provenance_ = provenance;
    return op;
}

Opinion Opinion::relabeled(std::string owner, std::string proposition) const {
    Opinion op = *this;
    op.owner_ = std::move(owner);
    op.proposition_ = std::move(proposition);
    return op;
}

EvidenceCount EvidenceCount::make(double positive, double negative) {
    if (!std::isfinite(positive) || !std::isfinite(negative)) {
        throw ConstraintViolation("evidence counts must be finite");
    }
    if (positive < 0.0 || negative < 0.0) {
        std::ostringstream msg;
        msg << "evidence counts must be non-negative (r = " << positive << ", s = " << negative
            << ")";
        throw ConstraintViolation(msg.str());
    }
    return {positive, negative};
}

Opinion from_evidence(std::string owner, std::string proposition, const EvidenceCount& ev,
                      double base_rate) {
    const EvidenceCount checked = EvidenceCount::make(ev.positive, ev.negative);
    const double total = checked.positive + checked.negative + 2.0;

    Opinion op;
    op.owner_ = std::move(owner);
    op.proposition_ = std::move(proposition);
    op.belief_ = checked.positive / total;
    op.disbelief_ = checked.negative / total;
    // 1 - (b+d) makes (b+d)+u round to exactly 1.0.
    op.uncertainty_ = std::max(0.0, 1.0 - (op.belief_ + op.disbelief_));
    op.base_rate_ = checked_unit(base_rate, "base rate");
    return op;
}

EvidenceCount to_evidence(const Opinion& op) {
    if (op.uncertainty() <= 0.0) {
        throw DogmaticOpinion("opinion of '" + op.owner() +
                              "' has zero uncertainty; its evidence is unbounded");
    }
    return {2.0 * op.belief() / op.uncertainty(), 2.0 * op.disbelief() / op.uncertainty()};
}

double expectation(const Opinion& op) noexcept {
    return op.belief() + op.base_rate() * op.uncertainty();
}

}  // namespace polyrep
