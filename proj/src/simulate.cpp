#include "nlgames/simulate.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace nlgames {

SimulationReport run_simulation(const SimulationConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("simulation needs at least one round");

  std::mt19937_64 rng(config.seed);
  // 53-bit-mantissa uniform in [0,1); avoids std::uniform_real_distribution,
  // whose output is implementation-defined.
  auto next_unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  long win_count = 0;
  for (long round = 0; round < config.rounds; ++round) {
    const uint64_t draw = rng();
    const int x = static_cast<int>(draw & 1);
    const int y = static_cast<int>(draw >> 1 & 1);

    int a, b;
    if (config.mode == SimulationConfig::Mode::Classical) {
      const Outcome o = config.strategy.outputs({x, y});
      a = o.a;
      b = o.b;
    } else {
      const auto dist = joint_distribution(config.angles, x, y);
      const double u = next_unit();
      double acc = 0;
      int o = 3;
      for (int k = 0; k < 3; ++k) {
        acc += dist[k];
        if (u < acc) {
          o = k;
          break;
        }
      }
      a = o >> 1;
      b = o & 1;
    }
    if (wins(config.game, x, y, a, b)) ++win_count;
  }

  SimulationReport report;
  report.wins = win_count;
  report.rounds = config.rounds;
  report.empirical_rate = static_cast<double>(win_count) / static_cast<double>(config.rounds);
  report.expected_rate = config.mode == SimulationConfig::Mode::Classical
                             ? evaluate_strategy(config.game, config.strategy).value()
                             : success_probability(config.game, config.angles);
  report.standard_error =
      std::sqrt(report.expected_rate * (1 - report.expected_rate) / static_cast<double>(config.rounds));
  if (report.standard_error > 0) {
    report.z_score = (report.empirical_rate - report.expected_rate) / report.standard_error;
  } else {
    report.z_score = report.empirical_rate == report.expected_rate
                         ? 0.0
                         : std::numeric_limits<double>::infinity();
  }
  return report;
}

}  // namespace nlgames
