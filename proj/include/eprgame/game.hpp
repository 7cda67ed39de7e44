#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eprgame/scalar.hpp"

namespace eprgame {

enum class Player : std::uint8_t { kAlice = 0, kBob = 1, kChris = 2 };
inline constexpr std::array<Player, 3> kPlayers{Player::kAlice, Player::kBob, Player::kChris};

// A player's two pure strategies (coins, measurement directions). In the
// Prisoner's Dilemma reading kFirst is Cooperate and kSecond is Defect.
enum class Setting : std::uint8_t { kFirst = 0, kSecond = 1 };

struct PureProfile {
  Setting alice = Setting::kFirst;
  Setting bob = Setting::kFirst;
  Setting chris = Setting::kFirst;

  constexpr Setting operator[](Player p) const {
    switch (p) {
      case Player::kAlice: return alice;
      case Player::kBob: return bob;
      default: return chris;
    }
  }
  friend constexpr bool operator==(const PureProfile&, const PureProfile&) = default;
};

namespace detail {
inline constexpr Setting k1 = Setting::kFirst;
inline constexpr Setting k2 = Setting::kSecond;
}  // namespace detail

// Profile order used for payoff tables and for the eight measurement
// contexts of a behavior: 111, 211, 121, 112, 122, 212, 221, 222.
inline constexpr std::array<PureProfile, 8> kCanonicalProfiles{{
    {detail::k1, detail::k1, detail::k1},
    {detail::k2, detail::k1, detail::k1},
    {detail::k1, detail::k2, detail::k1},
    {detail::k1, detail::k1, detail::k2},
    {detail::k1, detail::k2, detail::k2},
    {detail::k2, detail::k1, detail::k2},
    {detail::k2, detail::k2, detail::k1},
    {detail::k2, detail::k2, detail::k2},
}};

std::size_t canonical_index(PureProfile profile);

// "S1,S1',S2''" style label.
std::string to_string(PureProfile profile);

template <Scalar T>
struct PayoffTriple {
  T alice{};
  T bob{};
  T chris{};

  T& operator[](Player p) {
    switch (p) {
      case Player::kAlice: return alice;
      case Player::kBob: return bob;
      default: return chris;
    }
  }
  const T& operator[](Player p) const {
    switch (p) {
      case Player::kAlice: return alice;
      case Player::kBob: return bob;
      default: return chris;
    }
  }
  friend bool operator==(const PayoffTriple&, const PayoffTriple&) = default;
};

// Six constants of a symmetric three-player game. Alice's payoffs over the
// canonical profiles are alpha, beta, delta, delta, epsilon, theta, theta,
// omega; Bob's and Chris' follow by permuting roles.
template <Scalar T>
struct SymmetricGame {
  T alpha{};
  T beta{};
  T delta{};
  T epsilon{};
  T theta{};
  T omega{};
  friend bool operator==(const SymmetricGame&, const SymmetricGame&) = default;
};

// Arbitrary payoff table, one (Alice, Bob, Chris) triple per canonical profile.
template <Scalar T>
struct GeneralThreePlayerGame {
  std::array<PayoffTriple<T>, 8> table{};
};

template <Scalar T>
GeneralThreePlayerGame<T> expand(const SymmetricGame<T>& game);

// Throws NotSymmetric listing every symmetry equality off by more than tol.
template <Scalar T>
SymmetricGame<T> reduce_to_symmetric(const GeneralThreePlayerGame<T>& game, const T& tol);

template <Scalar T>
PayoffTriple<T> pure_strategy_payoffs(const SymmetricGame<T>& game, PureProfile profile);

struct PdReport {
  bool condition_a = false;  // defection dominates
  bool condition_b = false;  // more cooperating opponents is better
  bool condition_c = false;  // embedded two-player dilemmas
  std::vector<std::string> violated_inequalities;
  bool is_generalized_pd = false;
};

// Evaluates the eleven strict inequalities of the generalized three-player
// Prisoner's Dilemma. Each inequality lhs > rhs passes only if lhs - rhs > margin.
template <Scalar T>
PdReport classify_generalized_pd(const SymmetricGame<T>& game, const T& margin = T(0));

// Names of the eleven inequalities in evaluation order.
const std::array<std::string, 11>& pd_inequality_names();

template <Scalar T>
bool all_finite(const SymmetricGame<T>& game) {
  return is_finite(game.alpha) && is_finite(game.beta) && is_finite(game.delta) &&
         is_finite(game.epsilon) && is_finite(game.theta) && is_finite(game.omega);
}

}  // namespace eprgame
