#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nlgames {

// A two-party game with binary inputs (x to Alice, y to Bob) and binary
// outputs (a from Alice, b from Bob) is a predicate on (x,y,a,b).  We pack
// it into a 16-bit win table:
//
//   bit index(x,y,a,b) = 8x + 4y + 2a + b is set  <=>  outcome (a,b) wins
//                                                      on input (x,y).
//
// NOTE the polarity: a set bit means the players WIN.  In the boolean-
// function view of these games the winning condition is f(x,y,a,b) = 0,
// so mask bit = 1 - f.  Each input's winning outcomes occupy one nibble
// (input index 2x+y), which makes admissibility a four-nibble check.
struct GameTable {
  uint16_t mask = 0;

  friend constexpr bool operator==(GameTable, GameTable) = default;
  friend constexpr auto operator<=>(GameTable, GameTable) = default;
};

struct Outcome {
  int a = 0;
  int b = 0;
  friend constexpr bool operator==(Outcome, Outcome) = default;
};

struct Input {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Input, Input) = default;
};

constexpr int input_index(int x, int y) { return 2 * x + y; }
constexpr int outcome_index(int a, int b) { return 2 * a + b; }
constexpr int bit_index(int x, int y, int a, int b) {
  return 8 * x + 4 * y + 2 * a + b;
}

// The 4-bit set of winning outcomes for one input, bit at outcome_index(a,b).
constexpr uint16_t winner_nibble(GameTable g, int x, int y) {
  return static_cast<uint16_t>((g.mask >> (4 * input_index(x, y))) & 0xF);
}

constexpr bool wins(GameTable g, int x, int y, int a, int b) {
  return (g.mask >> bit_index(x, y, a, b)) & 1;
}

std::vector<Outcome> winners(GameTable g, int x, int y);

// The multiset of per-input winner counts, stored non-increasing.
// Two games compare equal here iff the paper-style "p1+p2+p3+p4" shape
// of their winner distribution is the same.
struct Partition {
  std::array<int, 4> counts{};  // sorted non-increasing, each in 0..4

  int total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

  friend constexpr bool operator==(const Partition&, const Partition&) = default;
  friend constexpr auto operator<=>(const Partition&, const Partition&) = default;
};

Partition partition_of(GameTable g);
std::string to_string(const Partition& p);  // "2+2+2+2"

// Admissible: at least one winning outcome for every input.
constexpr bool is_admissible(GameTable g) {
  return (g.mask & 0xF) && (g.mask & 0xF0) && (g.mask & 0xF00) && (g.mask & 0xF000);
}

// True iff the game has two inputs differing in one player's bit where the
// OTHER player (the one whose input is unchanged) has their output bit
// forced to opposite constants by the two winner sets.  No deterministic
// strategy can win both such inputs, so these games cap at 3/4 classically
// and at 0.75 over the measurement family.
bool has_inconsistent_pair(GameTable g);

enum class GameFilter { AdmissibleOnly, All };

// All games in ascending mask order; AdmissibleOnly yields 15^4 = 50625.
std::vector<GameTable> enumerate_games(GameFilter filter);

// Swap the two players (x<->y and a<->b simultaneously).  Preserves the
// partition, admissibility and inconsistency.
GameTable swap_players(GameTable g);

// Masks print as 0x-prefixed 4-digit hex; parsing also accepts decimal.
std::string format_mask(GameTable g);
GameTable parse_mask(const std::string& text);  // throws std::invalid_argument

}  // namespace nlgames
