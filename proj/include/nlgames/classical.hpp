#pragma once

#include <array>
#include <string>
#include <vector>

#include "nlgames/game.hpp"

namespace nlgames {

// A deterministic player maps their input bit to an output bit.  There are
// exactly four such rules.  The enum order encodes the rule's output pair
// (output on 0, output on 1) as the two bits of its value, which is also
// the row order of the 16-strategy success table (Alice varying slower).
enum class PlayerRule : uint8_t {
  ConstZero = 0,  // outputs (0,0)
  Identity = 1,   // outputs (0,1): the input bit itself
  Negation = 2,   // outputs (1,0): the complement of the input bit
  ConstOne = 3,   // outputs (1,1)
};

constexpr int apply_rule(PlayerRule r, int input) {
  const int v = static_cast<int>(r);
  return input == 0 ? (v >> 1) : (v & 1);
}

constexpr bool is_constant(PlayerRule r) {
  return r == PlayerRule::ConstZero || r == PlayerRule::ConstOne;
}

struct JointStrategy {
  PlayerRule alice = PlayerRule::ConstZero;  // consumes x, produces a
  PlayerRule bob = PlayerRule::ConstZero;    // consumes y, produces b

  Outcome outputs(Input in) const {
    return {apply_rule(alice, in.x), apply_rule(bob, in.y)};
  }

  friend constexpr bool operator==(JointStrategy, JointStrategy) = default;
};

// Row index in the 16-strategy table (0..15), Alice's rule varying slower.
constexpr int strategy_index(JointStrategy s) {
  return 4 * static_cast<int>(s.alice) + static_cast<int>(s.bob);
}

// All 16 joint strategies in table row order.
const std::array<JointStrategy, 16>& all_strategies();

enum class StrategyGroup {
  Constant,             // both rules constant
  InputDependent,       // both rules input-dependent
  MixedAliceDependent,  // Alice dependent, Bob constant
  MixedBobDependent,    // Alice constant, Bob dependent
};

constexpr StrategyGroup group_of(JointStrategy s) {
  const bool ac = is_constant(s.alice);
  const bool bc = is_constant(s.bob);
  if (ac && bc) return StrategyGroup::Constant;
  if (!ac && !bc) return StrategyGroup::InputDependent;
  return ac ? StrategyGroup::MixedBobDependent : StrategyGroup::MixedAliceDependent;
}

// Success chances live on an exact lattice: with four equally likely
// inputs every strategy wins k of 4, so probabilities are quarters.
// Keeping the integer avoids any floating-point tolerance questions.
struct Quarters {
  int wins = 0;  // 0..4

  double value() const { return wins / 4.0; }

  friend constexpr bool operator==(Quarters, Quarters) = default;
  friend constexpr auto operator<=>(Quarters, Quarters) = default;
};

std::string to_string(Quarters q);  // "0", "0.25", "0.5", "0.75", "1"

// Fraction of the four inputs the strategy wins.
Quarters evaluate_strategy(GameTable g, JointStrategy s);

struct ClassicalResult {
  Quarters max_probability;
  std::vector<JointStrategy> maximizers;  // complete, in table row order
};

// Exact classical optimum over the 16 deterministic joint strategies.
ClassicalResult classical_max(GameTable g);

// Just the optimum value; the scan's hot path.
Quarters classical_max_value(GameTable g);

// All joint strategies whose outputs win on both given (distinct) inputs.
// For a complement input pair with winner counts m and n this has exactly
// m*n elements.
std::vector<JointStrategy> strategies_winning_both(GameTable g, Input in1, Input in2);

// Text form "a=0|1|x|!x, b=0|1|y|!y".
std::string to_string(JointStrategy s);
JointStrategy parse_strategy(const std::string& text);  // throws std::invalid_argument

}  // namespace nlgames
