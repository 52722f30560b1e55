#include "nlgames/pi_format.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace nlgames {

namespace {
constexpr double kPi = std::numbers::pi;

double parse_number(const std::string& token, const std::string& whole) {
  try {
    size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid angle token '" + whole + "'");
  }
}
}  // namespace

std::string format_angle(double radians) {
  for (long q = 1; q <= 200; ++q) {
    const long p = std::lround(radians * q / kPi);
    if (std::abs(radians - static_cast<double>(p) * kPi / q) <= 1e-9) {
      if (p == 0) return "0";
      const long g = std::gcd(std::abs(p), q);
      const long pr = p / g, qr = q / g;
      std::string out;
      if (pr < 0) out += '-';
      if (std::abs(pr) != 1) out += std::to_string(std::abs(pr));
      out += "pi";
      if (qr != 1) out += "/" + std::to_string(qr);
      return out;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", radians);
  return buf;
}

double parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw std::invalid_argument("empty angle token");

  double sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') sign = -1;
    s = s.substr(1);
    if (s.empty()) throw std::invalid_argument("invalid angle token '" + text + "'");
  }

  const size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return sign * parse_number(s, text);

  std::string coef = s.substr(0, pi_pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  const double numerator = coef.empty() ? 1.0 : parse_number(coef, text);

  std::string rest = s.substr(pi_pos + 2);
  double denominator = 1;
  if (!rest.empty()) {
    if (rest[0] != '/' || rest.size() < 2)
      throw std::invalid_argument("invalid angle token '" + text + "'");
    denominator = parse_number(rest.substr(1), text);
    if (denominator == 0) throw std::invalid_argument("zero denominator in angle '" + text + "'");
  }
  return sign * numerator * kPi / denominator;
}

}  // namespace nlgames
