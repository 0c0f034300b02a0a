#pragma once
// Frames of discernment and belief-mass assignments over their powerset.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyrep/opinion.hpp"

namespace polyrep {

inline constexpr std::size_t kMaxFrameStates = 16;

// Subset of a frame's states; bit i stands for states()[i].
using StateSet = std::uint32_t;

class Frame {
public:
    // Throws InvalidFrame on an empty list, duplicate or empty identifiers, or
    // more than kMaxFrameStates states.
    static Frame make(std::string proposition, std::vector<std::string> states);

    // Binary frame {need, not-need} over a proposition.
    static Frame binary(std::string proposition);

    const std::string& proposition() const noexcept { return proposition_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    std::size_t size() const noexcept { return states_.size(); }
    StateSet full_set() const noexcept { return (StateSet{1} << states_.size()) - 1; }

    // Throws UnknownState.
    std::size_t index_of(const std::string& state) const;
    StateSet subset(const std::vector<std::string>& states) const;

    // Uniform a-priori probability 1/|states|.
    double default_base_rate() const noexcept { return 1.0 / static_cast<double>(size()); }

private:
    Frame() = default;
    std::string proposition_;
    std::vector<std::string> states_;
};

// Sparse belief-mass assignment: only nonzero subsets are stored, the empty set
// never is, and the stored masses sum to 1.
class MassAssignment {
public:
    const Frame& frame() const noexcept { return frame_; }
    const std::map<StateSet, double>& masses() const noexcept { return masses_; }
    double mass(StateSet subset) const;

private:
    friend MassAssignment assign_mass(const Frame&,
                                      const std::vector<std::pair<std::vector<std::string>, double>>&);
    explicit MassAssignment(Frame frame) : frame_(std::move(frame)) {}
    Frame frame_;
    std::map<StateSet, double> masses_;
};

// Subsets not listed get mass 0. Throws ConstraintViolation on negative mass,
// positive mass on the empty set, a repeated subset, or a total that deviates
// from 1 by more than 1e-9 (smaller drift is renormalized). Throws UnknownState
// when a subset names a state outside the frame.
MassAssignment assign_mass(const Frame& frame,
                           const std::vector<std::pair<std::vector<std::string>, double>>& masses);

// Coarsens the assignment into a binary opinion about one state: belief sums
// the subsets contained in {state}, disbelief the subsets disjoint from it,
// and the remainder is uncertainty. Base rate is 1/|states|. The opinion's
// proposition is "<frame proposition>/<state>".
Opinion focus_opinion(const MassAssignment& ma, const std::string& state, const std::string& owner);

}  // namespace polyrep
