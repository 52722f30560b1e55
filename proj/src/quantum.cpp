#include "nlgames/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlgames {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduce an angle into [0, pi); success probability is pi-periodic in each
// individual angle.
double reduce_half_turn(double v) {
  double r = std::fmod(v, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r = 0;  // fmod rounding at the boundary
  return r;
}

}  // namespace

std::array<double, 4> joint_distribution(const AngleSet& angles, int x, int y) {
  const double delta = angles.theta(x) - angles.psi(y);
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  const double same = 0.5 * c * c;
  const double diff = 0.5 * s * s;
  // indexed by outcome_index(a,b): 00, 01, 10, 11
  return {same, diff, diff, same};
}

double success_probability(GameTable g, const AngleSet& angles) {
  double total = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const auto dist = joint_distribution(angles, x, y);
      const uint16_t nib = winner_nibble(g, x, y);
      for (int o = 0; o < 4; ++o)
        if (nib >> o & 1) total += dist[o];
    }
  return total / 4;
}

CoefficientProfile coefficient_profile(GameTable g) {
  CoefficientProfile p;
  p.d = std::popcount(g.mask);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const uint16_t nib = winner_nibble(g, x, y);
      const int equal = (nib & 1) + (nib >> 3 & 1);      // outcomes 00, 11
      const int unequal = (nib >> 1 & 1) + (nib >> 2 & 1);  // outcomes 01, 10
      p.c[input_index(x, y)] = equal - unequal;
    }
  return p;
}

namespace {

double g_of(const CoefficientProfile& p, double t) {
  const double c00 = p.c[0], c01 = p.c[1], c10 = p.c[2], c11 = p.c[3];
  const double r0 = c00 * c00 + c01 * c01 + 2 * c00 * c01 * t;
  const double r1 = c10 * c10 + c11 * c11 + 2 * c10 * c11 * t;
  return std::sqrt(std::max(0.0, r0)) + std::sqrt(std::max(0.0, r1));
}

// Maximizer of the concave g on [-1,1].  Writing g(t) = sqrt(A+Bt) +
// sqrt(C+Dt), the stationary condition B*sqrt(C+Dt) = -D*sqrt(A+Bt) can
// only hold when B and D have opposite signs, and squaring it is linear in
// t; otherwise g is monotone and an endpoint wins.
double best_t(const CoefficientProfile& p) {
  const double c00 = p.c[0], c01 = p.c[1], c10 = p.c[2], c11 = p.c[3];
  const double B = 2 * c00 * c01;
  const double D = 2 * c10 * c11;
  if (B == 0 && D == 0) return 0;  // g constant
  if (B == 0) return D > 0 ? 1 : -1;
  if (D == 0) return B > 0 ? 1 : -1;
  if ((B > 0) == (D > 0)) return B > 0 ? 1 : -1;
  const double A = c00 * c00 + c01 * c01;
  const double C = c10 * c10 + c11 * c11;
  const double t = (D * D * A - B * B * C) / (B * D * (B - D));
  if (t == 0) return 0;  // normalize -0.0
  return std::clamp(t, -1.0, 1.0);
}

}  // namespace

AnalyticSolution analytic_family_max(const CoefficientProfile& profile) {
  AnalyticSolution sol;
  sol.t_star = best_t(profile);
  sol.value = profile.d / 16.0 + g_of(profile, sol.t_star) / 16.0;
  sol.angles = recover_optimal_angles(profile, sol.t_star);
  return sol;
}

AngleSet recover_optimal_angles(const CoefficientProfile& profile, double t_star) {
  if (!(t_star >= -1.0 && t_star <= 1.0))
    throw std::invalid_argument("t_star must lie in [-1, 1]");

  // No cosine terms at all: the value is d/16 at any angles.
  if (profile.c == std::array<int, 4>{0, 0, 0, 0}) return AngleSet{};

  // Doubled-angle plane: v0 = (1, 0), v1 = (t, sqrt(1-t^2)).
  const double v1x = t_star;
  const double v1y = std::sqrt(std::max(0.0, 1.0 - t_star * t_star));

  double doubled_theta[2];
  for (int x = 0; x < 2; ++x) {
    const double cx0 = profile.c[input_index(x, 0)];
    const double cx1 = profile.c[input_index(x, 1)];
    const double wx = cx0 + cx1 * v1x;
    const double wy = cx1 * v1y;
    doubled_theta[x] = (wx == 0 && wy == 0) ? 0.0 : std::atan2(wy, wx);
  }
  const double doubled_psi[2] = {0.0, std::atan2(v1y, v1x)};

  AngleSet angles{doubled_theta[0] / 2, doubled_theta[1] / 2,
                  doubled_psi[0] / 2, doubled_psi[1] / 2};
  const double shift = -angles.theta0;
  angles.theta0 = 0;
  angles.theta1 = reduce_half_turn(angles.theta1 + shift);
  angles.psi0 = reduce_half_turn(angles.psi0 + shift);
  angles.psi1 = reduce_half_turn(angles.psi1 + shift);
  return angles;
}

namespace {

// Per-input contribution to the (unnormalized) success probability, kept in
// the definitional form so the numeric route never touches the cosine
// reduction the closed form is built on.  equal/unequal are the winner
// counts of outcome parity; the full objective is the sum over inputs / 8.
struct ParityCounts {
  double equal[4];
  double unequal[4];
};

ParityCounts parity_counts(GameTable g) {
  ParityCounts pc{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const uint16_t nib = winner_nibble(g, x, y);
      pc.equal[input_index(x, y)] = (nib & 1) + (nib >> 3 & 1);
      pc.unequal[input_index(x, y)] = (nib >> 1 & 1) + (nib >> 2 & 1);
    }
  return pc;
}

double input_term(const ParityCounts& pc, int ix, double delta) {
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  return pc.equal[ix] * c * c + pc.unequal[ix] * s * s;
}

struct GoldenResult {
  double arg;
  double value;
};

// Golden-section maximization on [lo, hi]; the callers guarantee the
// restriction is unimodal there.
template <typename F>
GoldenResult golden_max(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  return {mid, f(mid)};
}

// Maximize a period-pi sinusoid restriction over its full circle: probe at
// `probes` evenly spaced points (plus the current position), then refine in
// the one-cell bracket around the winner, which is guaranteed unimodal.
template <typename F>
GoldenResult circle_max(F&& f, double current, double current_value, int probes) {
  const double h = kPi / probes;
  double best_arg = current;
  double best_value = current_value;
  for (int j = 0; j < probes; ++j) {
    const double arg = j * h;
    const double value = f(arg);
    if (value > best_value) {
      best_arg = arg;
      best_value = value;
    }
  }
  GoldenResult refined = golden_max(f, best_arg - h, best_arg + h);
  if (refined.value < best_value) refined = {best_arg, best_value};
  return refined;
}

}  // namespace

NumericResult numeric_family_max(GameTable g, int grid_steps, double refine_tol) {
  if (grid_steps < 8) throw std::invalid_argument("grid_steps must be at least 8");
  if (!(refine_tol > 0)) throw std::invalid_argument("refine_tol must be positive");

  const ParityCounts pc = parity_counts(g);
  const int n = grid_steps;
  const double h = kPi / n;

  // Coarse grid, theta0 gauge-fixed to 0.  The objective splits over the
  // two Bob angles, f = A(theta1, psi0) + B(theta1, psi1) + const, so for
  // each theta1 the best psi0 and psi1 can be found independently; this is
  // exactly the full grid maximum (and the same lexicographically-first
  // argmax) at O(n^2) instead of O(n^3).
  double best_value = -1;
  double best_t1 = 0, best_p0 = 0, best_p1 = 0;
  for (int i = 0; i < n; ++i) {
    const double t1 = i * h;
    double best_a = -1, best_a_arg = 0;
    double best_b = -1, best_b_arg = 0;
    for (int j = 0; j < n; ++j) {
      const double p = j * h;
      const double va = input_term(pc, 0, -p) + input_term(pc, 2, t1 - p);
      if (va > best_a) {
        best_a = va;
        best_a_arg = p;
      }
      const double vb = input_term(pc, 1, -p) + input_term(pc, 3, t1 - p);
      if (vb > best_b) {
        best_b = vb;
        best_b_arg = p;
      }
    }
    if (best_a + best_b > best_value) {
      best_value = best_a + best_b;
      best_t1 = t1;
      best_p0 = best_a_arg;
      best_p1 = best_b_arg;
    }
  }

  // Cyclic coordinate descent.  Each coordinate restriction is a period-pi
  // sinusoid, maximized over its whole circle per visit, so the iteration
  // can only stall on the grid winner's basin, never below it.
  double coord[3] = {best_t1, best_p0, best_p1};
  auto objective = [&](double t1, double p0, double p1) {
    return input_term(pc, 0, -p0) + input_term(pc, 1, -p1) +
           input_term(pc, 2, t1 - p0) + input_term(pc, 3, t1 - p1);
  };
  double value = objective(coord[0], coord[1], coord[2]);
  for (int cycle = 0; cycle < 200; ++cycle) {
    const double at_cycle_start = value;
    for (int k = 0; k < 3; ++k) {
      auto restriction = [&](double v) {
        switch (k) {
          case 0: return objective(v, coord[1], coord[2]);
          case 1: return objective(coord[0], v, coord[2]);
          default: return objective(coord[0], coord[1], v);
        }
      };
      const GoldenResult r = circle_max(restriction, coord[k], value, n);
      coord[k] = r.arg;
      value = r.value;
    }
    if (value - at_cycle_start < refine_tol) break;
  }

  NumericResult result;
  result.value = value / 8;
  result.angles = {0, reduce_half_turn(coord[0]), reduce_half_turn(coord[1]),
                   reduce_half_turn(coord[2])};
  return result;
}

QuantumAssessment quantum_max(GameTable g) {
  QuantumAssessment q;
  q.classical = classical_max_value(g);
  q.family = analytic_family_max(coefficient_profile(g)).value;
  q.reported = std::max(q.family, q.classical.value());
  q.separation = std::max(0.0, q.family - q.classical.value());
  return q;
}

}  // namespace nlgames
