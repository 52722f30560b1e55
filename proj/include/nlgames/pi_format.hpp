#pragma once

#include <string>

namespace nlgames {

// Angles print as rational multiples of pi when within 1e-9 of p*pi/q for
// some q <= 200 ("pi/8", "21pi/100", "0"), else as decimals with 6 digits.
std::string format_angle(double radians);

// Parses "0", "pi/4", "7pi/8", "3*pi/4", "-pi/3", "0.785398", ...
// Throws std::invalid_argument naming the offending token.
double parse_angle(const std::string& text);

}  // namespace nlgames
