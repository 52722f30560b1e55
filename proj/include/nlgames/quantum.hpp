#pragma once

#include <array>
#include <string>

#include "nlgames/classical.hpp"
#include "nlgames/game.hpp"

namespace nlgames {

// The quantum model is one fixed measurement family: the players share the
// Bell state (|00> + |11>)/sqrt(2); on input x Alice measures in the basis
// rotated by theta_x, on input y Bob in the basis rotated by psi_y (real
// rotations, one angle per player per input).  The joint outcome
// distribution then depends only on the angle difference:
//
//   P(00) = P(11) = cos^2(theta_x - psi_y) / 2
//   P(01) = P(10) = sin^2(theta_x - psi_y) / 2
//
// Success probability is invariant under a common shift of all four angles
// and under adding pi to any single one, so optima are reported gauge-fixed
// with theta0 = 0 and all angles in [0, pi).
struct AngleSet {
  double theta0 = 0;
  double theta1 = 0;
  double psi0 = 0;
  double psi1 = 0;

  double theta(int x) const { return x == 0 ? theta0 : theta1; }
  double psi(int y) const { return y == 0 ? psi0 : psi1; }

  // The four angle differences; alpha - beta - gamma + delta = 0 identically.
  double alpha() const { return theta0 - psi0; }
  double beta() const { return theta0 - psi1; }
  double gamma() const { return theta1 - psi0; }
  double delta() const { return theta1 - psi1; }
};

// Outcome probabilities for one input, indexed by outcome_index(a,b).
std::array<double, 4> joint_distribution(const AngleSet& angles, int x, int y);

// Mean winning probability over the four equally likely inputs:
// (1/4) sum_xy sum_{(a,b) in winners(x,y)} P(a,b | x,y).
double success_probability(GameTable g, const AngleSet& angles);

// The game's success probability collapses to
//
//   d/16 + (1/16) sum_xy c_xy cos 2(theta_x - psi_y)
//
// where d is the total winner count and c_xy = (#winners of input (x,y)
// with a == b) - (#winners with a != b).  Everything the family optimum
// depends on is in (d, c).
struct CoefficientProfile {
  int d = 0;                 // popcount of the win mask, 0..16
  std::array<int, 4> c{};    // per input_index(x,y), each in -2..2
};

CoefficientProfile coefficient_profile(GameTable g);

struct AnalyticSolution {
  double value = 0;   // family maximum, in [0,1]
  double t_star = 0;  // optimal inner product <v0,v1>, in [-1,1]
  AngleSet angles;    // an angle set achieving `value`
};

// Exact family maximum:  value = d/16 + max_t g(t) / 16  over t in [-1,1],
//
//   g(t) = sqrt(c00^2 + c01^2 + 2 c00 c01 t) + sqrt(c10^2 + c11^2 + 2 c10 c11 t),
//
// with each radicand clamped at 0 against rounding.  g is concave, so the
// stationary point (the derivative equation turns linear in t after
// squaring) with endpoint checks gives the unique maximum in closed form.
AnalyticSolution analytic_family_max(const CoefficientProfile& profile);

// Angles witnessing the norm bound at a given inner product t:
// doubled-angle unit vectors v0 = (1,0), v1 = (t, sqrt(1-t^2)); u_x aligned
// with c_x0 v0 + c_x1 v1 (angle 0 when that vector vanishes); halve, then
// gauge-shift so theta0 = 0 and reduce everything into [0, pi).
// Throws std::invalid_argument for t outside [-1,1].
AngleSet recover_optimal_angles(const CoefficientProfile& profile, double t_star);

struct NumericResult {
  double value = 0;
  AngleSet angles;
};

// Derivative-free maximization over the family, used as an independent
// cross-check of the closed form: gauge-fix theta0 = 0, coarse grid over
// (theta1, psi0, psi1) in [0,pi)^3 with grid_steps points per axis, then
// cyclic coordinate descent (full-circle probe + golden-section per
// coordinate) until a full cycle improves by less than refine_tol.
// Deterministic; requires grid_steps >= 8 and refine_tol > 0.
NumericResult numeric_family_max(GameTable g, int grid_steps, double refine_tol);

struct QuantumAssessment {
  double reported = 0;   // max(family, classical): a classical strategy is a quantum one
  double family = 0;     // family maximum (may fall below classical)
  Quarters classical;    // exact classical optimum
  double separation = 0; // max(0, family - classical)
};

QuantumAssessment quantum_max(GameTable g);

}  // namespace nlgames
