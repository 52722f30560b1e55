#pragma once

#include <cstdint>
#include <string>

#include "nlgames/game.hpp"

namespace nlgames {

// Algebraic normal form of the game's boolean function f over GF(2),
// where f(x,y,a,b) = 0 means the outcome wins.  A monomial is a subset of
// {x,y,a,b}, encoded in 4 bits (x=8, y=4, a=2, b=1, matching the game
// table's point encoding); bit s of `monomials` is set iff monomial s is
// present.  The empty subset (s = 0) is the constant-1 term.
struct AnfPolynomial {
  uint16_t monomials = 0;

  friend constexpr bool operator==(AnfPolynomial, AnfPolynomial) = default;
};

// Value of f at the point p = bit_index(x,y,a,b): XOR of all monomials
// whose variables are all 1 at p.
int anf_evaluate(AnfPolynomial poly, int point);

// GF(2) Moebius transform of the truth table f = 1 - win bit, and back.
// Round trip is the identity for all 65536 games.
AnfPolynomial to_anf(GameTable g);
GameTable from_anf(AnfPolynomial poly);

// Text form: monomials joined by '+', variables from {x,y,a,b}, "1" for
// the constant term, "0" for the zero polynomial; whitespace ignored.
// Canonical output sorts monomials by degree (descending) and then
// lexicographically with x < y < a < b, so CHSH prints as "xy+a+b".
std::string to_string(AnfPolynomial poly);
AnfPolynomial parse_anf(const std::string& text);  // throws std::invalid_argument naming the bad character

}  // namespace nlgames
