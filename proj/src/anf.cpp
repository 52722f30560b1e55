#include "nlgames/anf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace nlgames {

namespace {

constexpr int kVarBits[4] = {8, 4, 2, 1};   // x, y, a, b
constexpr char kVarNames[4] = {'x', 'y', 'a', 'b'};

// Canonical monomial order: degree descending, then lexicographic over the
// variable sequence with x < y < a < b.  The all-monomials list is tiny, so
// build it once.
const std::array<int, 16>& canonical_monomial_order() {
  static const std::array<int, 16> order = [] {
    std::array<int, 16> monos{};
    for (int s = 0; s < 16; ++s) monos[s] = s;
    auto var_seq = [](int s) {
      std::vector<int> seq;
      for (int v = 0; v < 4; ++v)
        if (s & kVarBits[v]) seq.push_back(v);
      return seq;
    };
    std::sort(monos.begin(), monos.end(), [&](int lhs, int rhs) {
      const auto ls = var_seq(lhs), rs = var_seq(rhs);
      if (ls.size() != rs.size()) return ls.size() > rs.size();
      return ls < rs;
    });
    return monos;
  }();
  return order;
}

}  // namespace

int anf_evaluate(AnfPolynomial poly, int point) {
  int f = 0;
  for (int s = 0; s < 16; ++s)
    if ((poly.monomials >> s & 1) && (point & s) == s) f ^= 1;
  return f;
}

AnfPolynomial to_anf(GameTable g) {
  // Truth table of f (win <=> f = 0), then the in-place GF(2) Moebius
  // butterfly; afterwards entry s is the coefficient of monomial s.
  std::array<int, 16> t{};
  for (int p = 0; p < 16; ++p) t[p] = 1 - (g.mask >> p & 1);
  for (int step : kVarBits)
    for (int p = 0; p < 16; ++p)
      if (p & step) t[p] ^= t[p ^ step];
  uint16_t monos = 0;
  for (int s = 0; s < 16; ++s)
    if (t[s]) monos |= uint16_t{1} << s;
  return AnfPolynomial{monos};
}

GameTable from_anf(AnfPolynomial poly) {
  // Direct evaluation on all 16 points rather than the inverse butterfly,
  // so the two directions stay independent of each other.
  uint16_t mask = 0;
  for (int p = 0; p < 16; ++p)
    if (anf_evaluate(poly, p) == 0) mask |= uint16_t{1} << p;
  return GameTable{mask};
}

std::string to_string(AnfPolynomial poly) {
  if (poly.monomials == 0) return "0";
  std::string out;
  for (int s : canonical_monomial_order()) {
    if (!(poly.monomials >> s & 1)) continue;
    if (!out.empty()) out += '+';
    if (s == 0) {
      out += '1';
      continue;
    }
    for (int v = 0; v < 4; ++v)
      if (s & kVarBits[v]) out += kVarNames[v];
  }
  return out;
}

AnfPolynomial parse_anf(const std::string& text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact += ch;
  if (compact.empty()) throw std::invalid_argument("empty polynomial text");

  AnfPolynomial poly;
  size_t pos = 0;
  while (pos <= compact.size()) {
    const size_t plus = std::min(compact.find('+', pos), compact.size());
    const std::string term = compact.substr(pos, plus - pos);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + text + "'");
    if (term == "0") {
      // additive identity, contributes nothing
    } else if (term == "1") {
      poly.monomials ^= 1;
    } else {
      int s = 0;
      for (char ch : term) {
        switch (ch) {
          case 'x': s |= kVarBits[0]; break;
          case 'y': s |= kVarBits[1]; break;
          case 'a': s |= kVarBits[2]; break;
          case 'b': s |= kVarBits[3]; break;
          default:
            throw std::invalid_argument(std::string("invalid character '") + ch +
                                        "' in polynomial term '" + term + "'");
        }
      }
      poly.monomials ^= uint16_t{1} << s;  // repeated terms cancel over GF(2)
    }
    if (plus == compact.size()) break;
    pos = plus + 1;
    if (pos == compact.size()) throw std::invalid_argument("trailing '+' in polynomial '" + text + "'");
  }
  return poly;
}

}  // namespace nlgames
