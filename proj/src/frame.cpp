#include "polyrep/frame.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "polyrep/error.hpp"

namespace polyrep {

Frame Frame::make(std::string proposition, std::vector<std::string> states) {
    if (states.empty()) {
        throw InvalidFrame("frame over '" + proposition + "' has no states");
    }
    if (states.size() > kMaxFrameStates) {
        std::ostringstream msg;
        msg << "frame over '" << proposition << "' has " << states.size() << " states (max "
            << kMaxFrameStates << ")";
        throw InvalidFrame(msg.str());
    }
    std::set<std::string> seen;
    for (const auto& s : states) {
        if (s.empty()) {
            throw InvalidFrame("frame over '" + proposition + "' has an empty state identifier");
        }
        if (!seen.insert(s).second) {
            throw InvalidFrame("frame over '" + proposition + "' repeats state '" + s + "'");
        }
    }
    Frame f;
    f.proposition_ = std::move(proposition);
    f.states_ = std::move(states);
    return f;
}

Frame Frame::binary(std::string proposition) {
    return make(std::move(proposition), {"need", "not-need"});
}

std::size_t Frame::index_of(const std::string& state) const {
    auto it = std::find(states_.begin(), states_.end(), state);
    if (it == states_.end()) {
        throw UnknownState("state '" + state + "' is not in the frame over '" + proposition_ + "'");
    }
    return static_cast<std::size_t>(it - states_.begin());
}

StateSet Frame::subset(const std::vector<std::string>& states) const {
    StateSet set = 0;
    for (const auto& s : states) set |= StateSet{1} << index_of(s);
    return set;
}

double MassAssignment::mass(StateSet subset) const {
    auto it = masses_.find(subset);
    return it == masses_.end() ? 0.0 : it->second;
}

MassAssignment assign_mass(const Frame& frame,
                           const std::vector<std::pair<std::vector<std::string>, double>>& masses) {
    MassAssignment ma(frame);
    std::set<StateSet> listed;
    double total = 0.0;
    for (const auto& [states, m] : masses) {
        const StateSet set = frame.subset(states);
        if (!std::isfinite(m) || m < 0.0) {
            throw ConstraintViolation("belief mass must be a non-negative number");
        }
        if (!listed.insert(set).second) {
            throw ConstraintViolation("subset listed twice in mass assignment");
        }
        if (set == 0) {
            if (m > 0.0) throw ConstraintViolation("the empty set must carry zero mass");
            continue;
        }
        total += m;
        if (m > 0.0) ma.masses_.emplace(set, m);
    }
    if (std::abs(total - 1.0) > kInputTolerance) {
        std::ostringstream msg;
        msg << "belief masses sum to " << total << ", expected 1";
        throw ConstraintViolation(msg.str());
    }
    if (total != 1.0) {
        for (auto& [set, m] : ma.masses_) m /= total;
    }
    return ma;
}

Opinion focus_opinion(const MassAssignment& ma, const std::string& state, const std::string& owner) {
    const Frame& frame = ma.frame();
    const StateSet target = StateSet{1} << frame.index_of(state);
    double belief = 0.0;
    double disbelief = 0.0;
    for (const auto& [set, m] : ma.masses()) {
        if ((set & ~target) == 0) {
            belief += m;
        } else if ((set & target) == 0) {
            disbelief += m;
        }
    }
    const double uncertainty = std::max(0.0, 1.0 - (belief + disbelief));
    return Opinion::make(owner, frame.proposition() + "/" + state, belief, disbelief, uncertainty,
                         frame.default_base_rate());
}

}  // namespace polyrep
