#include "polyrep/format.hpp"

#include <charconv>

namespace polyrep {

std::string fixed6(double value) {
    if (value == 0.0) value = 0.0;  // no "-0.000000"
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
    std::string out(buf, ptr);
    if (out == "-0.000000") out = "0.000000";
    return out;
}

std::string shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace polyrep
