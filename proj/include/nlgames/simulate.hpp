#pragma once

#include <cstdint>

#include "nlgames/classical.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"

namespace nlgames {

// Monte Carlo referee: each round draws an input pair uniformly, lets the
// players answer (a fixed deterministic strategy, or sampling from the
// measurement family's joint distribution), and scores the win predicate.
//
// Randomness comes from one std::mt19937_64 stream seeded with `seed`:
// the input pair from the low two bits of one draw per round, a quantum
// outcome from CDF inversion of a 53-bit-mantissa uniform in [0,1).
// Identical configs produce identical reports on any platform.
struct SimulationConfig {
  enum class Mode { Classical, Quantum };

  GameTable game;
  Mode mode = Mode::Classical;
  JointStrategy strategy;  // used in Classical mode
  AngleSet angles;         // used in Quantum mode
  long rounds = 0;         // >= 1
  uint64_t seed = 0;
};

struct SimulationReport {
  long wins = 0;
  long rounds = 0;
  double empirical_rate = 0;
  double expected_rate = 0;   // the analytic rate for the configured play
  double standard_error = 0;  // sqrt(expected (1-expected) / rounds)
  double z_score = 0;

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

SimulationReport run_simulation(const SimulationConfig& config);  // throws on rounds < 1

}  // namespace nlgames
