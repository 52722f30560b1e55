#include "nlgames/classical.hpp"

#include <bit>
#include <stdexcept>

namespace nlgames {

namespace {

// Per-strategy win templates: the 16-bit mask of all (x,y,a,b) points the
// strategy actually plays.  A strategy's win count on a game is then one
// AND + popcount.
std::array<uint16_t, 16> make_strategy_masks() {
  std::array<uint16_t, 16> masks{};
  for (JointStrategy s : all_strategies()) {
    uint16_t m = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const Outcome o = s.outputs({x, y});
        m |= uint16_t{1} << bit_index(x, y, o.a, o.b);
      }
    masks[strategy_index(s)] = m;
  }
  return masks;
}

const std::array<uint16_t, 16>& strategy_masks() {
  static const auto masks = make_strategy_masks();
  return masks;
}

}  // namespace

const std::array<JointStrategy, 16>& all_strategies() {
  static const std::array<JointStrategy, 16> strategies = [] {
    std::array<JointStrategy, 16> out{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        out[4 * a + b] = {static_cast<PlayerRule>(a), static_cast<PlayerRule>(b)};
    return out;
  }();
  return strategies;
}

std::string to_string(Quarters q) {
  switch (q.wins) {
    case 0: return "0";
    case 1: return "0.25";
    case 2: return "0.5";
    case 3: return "0.75";
    case 4: return "1";
  }
  throw std::invalid_argument("quarters out of range");
}

Quarters evaluate_strategy(GameTable g, JointStrategy s) {
  return Quarters{std::popcount(static_cast<uint16_t>(g.mask & strategy_masks()[strategy_index(s)]))};
}

Quarters classical_max_value(GameTable g) {
  int best = 0;
  for (uint16_t m : strategy_masks()) {
    const int wins = std::popcount(static_cast<uint16_t>(g.mask & m));
    if (wins > best) best = wins;
  }
  return Quarters{best};
}

ClassicalResult classical_max(GameTable g) {
  ClassicalResult result;
  result.max_probability = classical_max_value(g);
  for (JointStrategy s : all_strategies())
    if (evaluate_strategy(g, s) == result.max_probability) result.maximizers.push_back(s);
  return result;
}

std::vector<JointStrategy> strategies_winning_both(GameTable g, Input in1, Input in2) {
  if (in1 == in2) throw std::invalid_argument("strategies_winning_both requires two distinct inputs");
  std::vector<JointStrategy> out;
  for (JointStrategy s : all_strategies()) {
    const Outcome o1 = s.outputs(in1);
    const Outcome o2 = s.outputs(in2);
    if (wins(g, in1.x, in1.y, o1.a, o1.b) && wins(g, in2.x, in2.y, o2.a, o2.b))
      out.push_back(s);
  }
  return out;
}

namespace {

std::string rule_text(PlayerRule r, char var) {
  switch (r) {
    case PlayerRule::ConstZero: return "0";
    case PlayerRule::ConstOne: return "1";
    case PlayerRule::Identity: return std::string(1, var);
    case PlayerRule::Negation: return std::string("!") + var;
  }
  throw std::invalid_argument("bad player rule");
}

PlayerRule parse_rule(const std::string& text, char var) {
  if (text == "0") return PlayerRule::ConstZero;
  if (text == "1") return PlayerRule::ConstOne;
  if (text == std::string(1, var)) return PlayerRule::Identity;
  if (text == std::string("!") + var) return PlayerRule::Negation;
  throw std::invalid_argument("invalid rule '" + text + "' (want 0, 1, " + var + " or !" + var + ")");
}

}  // namespace

std::string to_string(JointStrategy s) {
  return "a=" + rule_text(s.alice, 'x') + ", b=" + rule_text(s.bob, 'y');
}

JointStrategy parse_strategy(const std::string& text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact += ch;
  const size_t comma = compact.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("strategy '" + text + "' must look like \"a=0, b=y\"");
  const std::string lhs = compact.substr(0, comma);
  const std::string rhs = compact.substr(comma + 1);
  if (lhs.rfind("a=", 0) != 0 || rhs.rfind("b=", 0) != 0)
    throw std::invalid_argument("strategy '" + text + "' must look like \"a=0, b=y\"");
  return {parse_rule(lhs.substr(2), 'x'), parse_rule(rhs.substr(2), 'y')};
}

}  // namespace nlgames
