#pragma once
// Hand-rolled generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "polyrep/opinion.hpp"

namespace polyrep::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    // Uniform on the (b, d, u) simplex with u >= min_u.
    Opinion opinion(const std::string& owner, const std::string& proposition, double base_rate,
                    double min_u = 0.0) {
        for (;;) {
            const double x = -std::log1p(-uniform());
            const double y = -std::log1p(-uniform());
            const double z = -std::log1p(-uniform());
            const double sum = x + y + z;
            if (sum <= 0.0) continue;
            const double b = x / sum;
            const double d = y / sum;
            const double u = 1.0 - (b + d);
            if (u < min_u || u < 0.0) continue;
            return Opinion::make(owner, proposition, b, d, u, base_rate);
        }
    }

    Opinion opinion(const std::string& owner, const std::string& proposition) {
        return opinion(owner, proposition, uniform());
    }

    // Mixes in corner cases: dogmatic, vacuous, and zero-belief opinions.
    Opinion any_opinion(const std::string& owner, const std::string& proposition) {
        const double a = uniform();
        switch (integer(0, 9)) {
            case 0: {
                const double b = uniform();
                return Opinion::make(owner, proposition, b, 1.0 - b, 0.0, a);
            }
            case 1:
                return Opinion::make(owner, proposition, 0.0, 0.0, 1.0, a);
            case 2: {
                const double d = uniform();
                return Opinion::make(owner, proposition, 0.0, d, 1.0 - d, a);
            }
            default:
                return opinion(owner, proposition, a);
        }
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline double bdu_gap(const Opinion& x, const Opinion& y) {
    return std::max({std::abs(x.belief() - y.belief()), std::abs(x.disbelief() - y.disbelief()),
                     std::abs(x.uncertainty() - y.uncertainty())});
}

}  // namespace polyrep::testing
