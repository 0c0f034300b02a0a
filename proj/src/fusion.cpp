#include "polyrep/fusion.hpp"

#include "polyrep/error.hpp"

namespace polyrep {

namespace {

bool is_composite(const std::string& owner) {
    return owner.find_first_of(",;") != std::string::npos;
}

std::string group(const std::string& owner) {
    return is_composite(owner) ? "(" + owner + ")" : owner;
}

Provenance merged(const Opinion& a, const Opinion& b) {
    return a.provenance() == Provenance::Recommended || b.provenance() == Provenance::Recommended
               ? Provenance::Recommended
               : Provenance::FirstHand;
}

}  // namespace

Opinion consensus(const Opinion& a, const Opinion& b) {
    if (a.proposition() != b.proposition()) {
        throw FusionError(FusionErrorKind::PropositionMismatch,
                          "consensus over different propositions '" + a.proposition() +
                              "' and '" + b.proposition() + "'");
    }
    const double ua = a.uncertainty();
    const double ub = b.uncertainty();
    const double kappa = ua + ub - ua * ub;
    if (kappa == 0.0) {
        throw FusionError(FusionErrorKind::BothDogmatic,
                          "consensus undefined: both opinions are dogmatic "
                          "(kappa = uA + uB - uA*uB = 0)");
    }

    const double belief = (a.belief() * ub + b.belief() * ua) / kappa;
    const double disbelief = (a.disbelief() * ub + b.disbelief() * ua) / kappa;
    const double uncertainty = ua * ub / kappa;

    double base_rate;
    if (ua == 1.0 && ub == 1.0) {
        base_rate = (a.base_rate() + b.base_rate()) / 2.0;
    } else {
        // Nonzero: uA + uB - 2uAuB = uA(1-uB) + uB(1-uA) vanishes only when
        // both are 0 (excluded above) or both are 1.
        const double denom = ua + ub - 2.0 * ua * ub;
        base_rate =
            (b.base_rate() * ua + a.base_rate() * ub - (a.base_rate() + b.base_rate()) * ua * ub) /
            denom;
    }

    return Opinion::make(group(a.owner()) + "," + group(b.owner()), a.proposition(), belief,
                         disbelief, uncertainty, base_rate, merged(a, b));
}

Opinion recommend(const Opinion& trust, const Opinion& rec) {
    if (trust.proposition() != rec.owner()) {
        throw FusionError(FusionErrorKind::RecommenderMismatch,
                          "trust opinion concerns '" + trust.proposition() +
                              "' but the recommendation comes from '" + rec.owner() + "'");
    }
    const double bt = trust.belief();
    const double belief = bt * rec.belief();
    const double disbelief = bt * rec.disbelief();
    const double uncertainty = trust.disbelief() + trust.uncertainty() + bt * rec.uncertainty();

    return Opinion::make(group(trust.owner()) + ";" + group(rec.owner()), rec.proposition(), belief,
                         disbelief, uncertainty, rec.base_rate(), Provenance::Recommended);
}

Opinion as_trust_in(const Opinion& op, const std::string& recommender) {
    return op.relabeled(op.owner(), recommender);
}

}  // namespace polyrep
