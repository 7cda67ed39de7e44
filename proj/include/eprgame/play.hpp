#pragma once

#include <array>

#include "eprgame/behavior.hpp"
#include "eprgame/game.hpp"
#include "eprgame/scalar.hpp"

namespace eprgame {

// Probability that Alice, Bob, Chris choose their first strategy.
template <Scalar T>
struct MixedProfile {
  T x{};
  T y{};
  T z{};

  const T& operator[](Player p) const {
    switch (p) {
      case Player::kAlice: return x;
      case Player::kBob: return y;
      default: return z;
    }
  }
  T& operator[](Player p) {
    switch (p) {
      case Player::kAlice: return x;
      case Player::kBob: return y;
      default: return z;
    }
  }
  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

// Corner of the mixed-strategy cube: S1 maps to 1, S2 to 0.
template <Scalar T>
MixedProfile<T> corner(PureProfile profile) {
  auto v = [](Setting s) { return s == Setting::kFirst ? T(1) : T(0); };
  return {v(profile.alice), v(profile.bob), v(profile.chris)};
}

// Probability that the three players jointly pick `profile`.
template <Scalar T>
T profile_weight(const MixedProfile<T>& m, PureProfile profile);

// Classical mixed strategies: expected payoffs over the eight pure profiles.
template <Scalar T>
PayoffTriple<T> three_coin_payoffs(const SymmetricGame<T>& game, const MixedProfile<T>& m);

// Payoff coefficients attached to each outcome triple. Outcome +1 takes the
// role of the first strategy, so outcome (a, b, c) pays what the pure profile
// with the same pattern pays:
//   (+,+,+) (alpha, alpha, alpha)    (-,+,+) (beta, delta, delta)
//   (+,-,+) (delta, beta, delta)     (-,-,+) (theta, theta, epsilon)
//   (+,+,-) (delta, delta, beta)     (-,+,-) (theta, epsilon, theta)
//   (+,-,-) (epsilon, theta, theta)  (-,-,-) (omega, omega, omega)
template <Scalar T>
std::array<PayoffTriple<T>, kOutcomeCount> outcome_coefficients(const SymmetricGame<T>& game);

// Payoffs when the players' strategies select the measurement context and the
// shared behavior p supplies the outcome probabilities.
template <Scalar T>
PayoffTriple<T> payoffs_from_joint(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                                   const MixedProfile<T>& m);

// Corner payoffs of a zero-constrained behavior from the shortened sums that
// only involve its 27 surviving entries. Throws ZeroConstraintViolated when
// any of the 37 vanishing entries exceeds tol in magnitude.
template <Scalar T>
PayoffTriple<T> reduced_payoffs(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                                PureProfile profile, const T& tol);

template <Scalar T>
PayoffTriple<T> reduced_payoffs(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                                PureProfile profile) {
  return reduced_payoffs(game, p, profile, default_constraint_tol<T>());
}

}  // namespace eprgame
