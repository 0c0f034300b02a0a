#pragma once
// Consensus between independent opinions and recommendation (discounting)
// through a trusted recommender.

#include <string>

#include "polyrep/opinion.hpp"

namespace polyrep {

// Fuses the opinions of two independent observers about the same proposition.
//
//   kappa  = uA + uB - uA*uB
//   b      = (bA*uB + bB*uA) / kappa
//   d      = (dA*uB + dB*uA) / kappa
//   u      = uA*uB / kappa
//   a      = (aB*uA + aA*uB - (aA+aB)*uA*uB) / (uA + uB - 2*uA*uB)
//
// with a = (aA+aB)/2 when uA = uB = 1. The result owner is "A,B".
// Throws FusionError{BothDogmatic} when kappa = 0 and
// FusionError{PropositionMismatch} when the propositions differ.
Opinion consensus(const Opinion& a, const Opinion& b);

// A's opinion about the proposition derived from A's trust in B (trust, whose
// proposition names B) and B's recommended opinion (rec, owned by B).
//
//   b = bT*bR,  d = bT*dR,  u = dT + uT + bT*uR,  a = aR
//
// The result owner is "A;B" and its provenance is Recommended.
// Throws FusionError{RecommenderMismatch} when trust.proposition() differs
// from rec.owner().
Opinion recommend(const Opinion& trust, const Opinion& rec);

// Reads an opinion as its owner's trust in `recommender`.
Opinion as_trust_in(const Opinion& op, const std::string& recommender);

}  // namespace polyrep
