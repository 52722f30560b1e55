#include "nlgames/game.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

namespace nlgames {

std::vector<Outcome> winners(GameTable g, int x, int y) {
  std::vector<Outcome> out;
  const uint16_t nib = winner_nibble(g, x, y);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (nib >> outcome_index(a, b) & 1) out.push_back({a, b});
  return out;
}

Partition partition_of(GameTable g) {
  Partition p;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      p.counts[input_index(x, y)] = std::popcount(winner_nibble(g, x, y));
  std::sort(p.counts.begin(), p.counts.end(), std::greater<>());
  return p;
}

std::string to_string(const Partition& p) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += '+';
    s += static_cast<char>('0' + p.counts[i]);
  }
  return s;
}

namespace {

// Output-bit masks within a winner nibble: outcomes with a = 0 sit at
// indices 0,1; a = 1 at 2,3; b = 0 at 0,2; b = 1 at 1,3.
constexpr uint16_t kA0 = 0b0011, kA1 = 0b1100;
constexpr uint16_t kB0 = 0b0101, kB1 = 0b1010;

bool forced_opposite(uint16_t nib0, uint16_t nib1, uint16_t zero_mask, uint16_t one_mask) {
  if (!nib0 || !nib1) return false;
  const bool n0_all0 = (nib0 & one_mask) == 0;
  const bool n0_all1 = (nib0 & zero_mask) == 0;
  const bool n1_all0 = (nib1 & one_mask) == 0;
  const bool n1_all1 = (nib1 & zero_mask) == 0;
  return (n0_all0 && n1_all1) || (n0_all1 && n1_all0);
}

}  // namespace

bool has_inconsistent_pair(GameTable g) {
  for (int x = 0; x < 2; ++x)
    if (forced_opposite(winner_nibble(g, x, 0), winner_nibble(g, x, 1), kA0, kA1)) return true;
  for (int y = 0; y < 2; ++y)
    if (forced_opposite(winner_nibble(g, 0, y), winner_nibble(g, 1, y), kB0, kB1)) return true;
  return false;
}

std::vector<GameTable> enumerate_games(GameFilter filter) {
  std::vector<GameTable> out;
  out.reserve(filter == GameFilter::All ? 65536 : 50625);
  for (uint32_t m = 0; m <= 0xFFFF; ++m) {
    const GameTable g{static_cast<uint16_t>(m)};
    if (filter == GameFilter::All || is_admissible(g)) out.push_back(g);
  }
  return out;
}

GameTable swap_players(GameTable g) {
  uint16_t m = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (wins(g, x, y, a, b)) m |= uint16_t{1} << bit_index(y, x, b, a);
  return GameTable{m};
}

std::string format_mask(GameTable g) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%04X", g.mask);
  return buf;
}

GameTable parse_mask(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty game mask");
  int base = 10;
  size_t start = 0;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    start = 2;
  }
  unsigned long value = 0;
  for (size_t i = start; i < text.size(); ++i) {
    const char ch = text[i];
    int digit;
    if (ch >= '0' && ch <= '9') digit = ch - '0';
    else if (base == 16 && ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
    else if (base == 16 && ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
    else throw std::invalid_argument(std::string("invalid character '") + ch + "' in game mask '" + text + "'");
    value = value * base + static_cast<unsigned long>(digit);
    if (value > 0xFFFF) throw std::invalid_argument("game mask '" + text + "' exceeds 16 bits");
  }
  if (text.size() == start) throw std::invalid_argument("empty game mask '" + text + "'");
  return GameTable{static_cast<uint16_t>(value)};
}

}  // namespace nlgames
