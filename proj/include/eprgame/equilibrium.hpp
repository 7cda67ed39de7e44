#pragma once

#include <array>
#include <vector>

#include "eprgame/behavior.hpp"
#include "eprgame/game.hpp"
#include "eprgame/play.hpp"
#include "eprgame/scalar.hpp"

namespace eprgame {

template <Scalar T>
T default_ne_tol() {
  if constexpr (std::same_as<T, double>) {
    return 1e-9;
  } else {
    return T(0);
  }
}

template <Scalar T>
struct NeVerdict {
  bool is_ne = false;
  // Per player: payoff at the profile minus payoff after the most profitable
  // unilateral deviation to a pure strategy.
  std::array<T, 3> margins{};
  // Own first-strategy probability of that deviation (0 or 1).
  std::array<T, 3> deviations{};
};

// Payoffs are affine in each player's own probability, so the pure
// deviations are the only ones to test: the opposite corner when the player
// is at a corner, both corners otherwise. Ties count as equilibrium.
template <Scalar T>
NeVerdict<T> verify_ne(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                       const MixedProfile<T>& m, const T& tol);

template <Scalar T>
NeVerdict<T> verify_ne(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                       const MixedProfile<T>& m) {
  return verify_ne(game, p, m, default_ne_tol<T>());
}

// Pure-strategy equilibria in kCanonicalProfiles order.
template <Scalar T>
std::vector<PureProfile> enumerate_pure_ne(const SymmetricGame<T>& game,
                                           const JointProbabilitySet<T>& p, const T& tol);

template <Scalar T>
struct DeltaCoefficients {
  T d1{};  // alpha - beta - 2 delta + 2 theta + epsilon - omega
  T d2{};  // delta - epsilon - theta + omega
  T d3{};  // epsilon - omega
};

template <Scalar T>
DeltaCoefficients<T> delta_coefficients(const SymmetricGame<T>& game);

// For the classical embedding (coins r, r', r'' with s = s' = s'' = 0), the
// payoff gain of each player switching from second to first strategy at m:
// Alice's is y z r r' r'' d1 + r (z r'' + y r') d2 + r d3, Bob's and Chris'
// follow by symmetry. m is an equilibrium iff (m_i - x) * bracket_i >= 0 for
// every x in [0, 1]. Throws ConstraintViolation unless s = s' = s'' = 0.
template <Scalar T>
std::array<T, 3> delta_reduction_check(const SymmetricGame<T>& game, const CoinParameters<T>& coins,
                                       const MixedProfile<T>& m);

// The five payoff ratios that fix a game up to the scale beta > 0.
template <Scalar T>
struct PdRatios {
  T alpha_over_beta{};
  T theta_over_beta{};
  T delta_over_theta{};
  T omega_over_beta{};
  T epsilon_over_omega{};
  friend bool operator==(const PdRatios&, const PdRatios&) = default;
};

// Throws ConstraintViolation when beta <= 0, theta = 0 or omega = 0.
template <Scalar T>
PdRatios<T> ratios_from_game(const SymmetricGame<T>& game);

// The game with beta = 1 that has the given ratios.
template <Scalar T>
SymmetricGame<T> game_from_ratios(const PdRatios<T>& ratios);

// Left-hand sides of the three (C,C,C) equilibrium inequalities, i.e. the
// (1,1,1) deviation margins divided by beta, with no precondition checks.
template <Scalar T>
std::array<T, 3> ccc_margin_values(const PdRatios<T>& ratios, const JointProbabilitySet<T>& p);

// As ccc_margin_values, after checking the zero and reduced constraints at
// tol. Throws ConstraintViolation.
template <Scalar T>
std::array<T, 3> ccc_margins(const PdRatios<T>& ratios, const JointProbabilitySet<T>& p,
                             const T& tol);

template <Scalar T>
std::array<T, 3> ccc_margins(const PdRatios<T>& ratios, const JointProbabilitySet<T>& p) {
  return ccc_margins(ratios, p, default_constraint_tol<T>());
}

// (x p36, y p47, z p54) scaled by omega - epsilon: the loss of each player
// who moves from (0,0,0) to their part of m. Throws ConstraintViolation.
template <Scalar T>
std::array<T, 3> ddd_margins(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                             const MixedProfile<T>& m, const T& tol);

template <Scalar T>
std::array<T, 3> ddd_margins(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                             const MixedProfile<T>& m) {
  return ddd_margins(game, p, m, default_constraint_tol<T>());
}

}  // namespace eprgame
