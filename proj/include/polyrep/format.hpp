#pragma once

#include <string>

namespace polyrep {

// Fixed notation with 6 decimals. Rounding is correct with respect to the
// exact binary value; exact ties round half to even.
std::string fixed6(double value);

// Shortest representation that parses back to the same double.
std::string shortest(double value);

}  // namespace polyrep
