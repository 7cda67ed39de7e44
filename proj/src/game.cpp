#include "eprgame/game.hpp"

#include <algorithm>
#include <string>

#include "eprgame/errors.hpp"

namespace eprgame {

std::size_t canonical_index(PureProfile profile) {
  auto it = std::find(kCanonicalProfiles.begin(), kCanonicalProfiles.end(), profile);
  return static_cast<std::size_t>(it - kCanonicalProfiles.begin());
}

std::string to_string(PureProfile profile) {
  auto label = [](Setting s, const char* primes) {
    return std::string(s == Setting::kFirst ? "S1" : "S2") + primes;
  };
  return label(profile.alice, "") + "," + label(profile.bob, "'") + "," +
         label(profile.chris, "''");
}

template <Scalar T>
GeneralThreePlayerGame<T> expand(const SymmetricGame<T>& game) {
  GeneralThreePlayerGame<T> out;
  for (std::size_t i = 0; i < kCanonicalProfiles.size(); ++i) {
    out.table[i] = pure_strategy_payoffs(game, kCanonicalProfiles[i]);
  }
  return out;
}

template <Scalar T>
SymmetricGame<T> reduce_to_symmetric(const GeneralThreePlayerGame<T>& game, const T& tol) {
  // a[i], b[i], c[i] hold Alice's, Bob's, Chris' payoff at profile i+1.
  auto a = [&](int i) -> const T& { return game.table[i - 1].alice; };
  auto b = [&](int i) -> const T& { return game.table[i - 1].bob; };
  auto c = [&](int i) -> const T& { return game.table[i - 1].chris; };

  struct Equality {
    const char* name;
    const T& lhs;
    const T& rhs;
  };
  const Equality equalities[] = {
      {"beta_1=alpha_1", b(1), a(1)},  {"beta_2=alpha_3", b(2), a(3)},
      {"beta_3=alpha_2", b(3), a(2)},  {"beta_4=alpha_3", b(4), a(3)},
      {"beta_5=alpha_6", b(5), a(6)},  {"beta_6=alpha_5", b(6), a(5)},
      {"beta_7=alpha_6", b(7), a(6)},  {"beta_8=alpha_8", b(8), a(8)},
      {"gamma_1=alpha_1", c(1), a(1)}, {"gamma_2=alpha_3", c(2), a(3)},
      {"gamma_3=alpha_3", c(3), a(3)}, {"gamma_4=alpha_2", c(4), a(2)},
      {"gamma_5=alpha_6", c(5), a(6)}, {"gamma_6=alpha_6", c(6), a(6)},
      {"gamma_7=alpha_5", c(7), a(5)}, {"gamma_8=alpha_8", c(8), a(8)},
      {"alpha_6=alpha_7", a(6), a(7)}, {"alpha_3=alpha_4", a(3), a(4)},
  };

  std::vector<std::string> failed;
  for (const auto& eq : equalities) {
    if (!is_finite(eq.lhs) || !is_finite(eq.rhs) || abs_value(T(eq.lhs - eq.rhs)) > tol) {
      failed.emplace_back(eq.name);
    }
  }
  if (!failed.empty()) {
    throw NotSymmetric("payoff table is not symmetric: " + join_details(failed), failed);
  }
  return SymmetricGame<T>{a(1), a(2), a(3), a(5), a(6), a(8)};
}

template <Scalar T>
PayoffTriple<T> pure_strategy_payoffs(const SymmetricGame<T>& g, PureProfile profile) {
  switch (canonical_index(profile)) {
    case 0: return {g.alpha, g.alpha, g.alpha};
    case 1: return {g.beta, g.delta, g.delta};
    case 2: return {g.delta, g.beta, g.delta};
    case 3: return {g.delta, g.delta, g.beta};
    case 4: return {g.epsilon, g.theta, g.theta};
    case 5: return {g.theta, g.epsilon, g.theta};
    case 6: return {g.theta, g.theta, g.epsilon};
    default: return {g.omega, g.omega, g.omega};
  }
}

const std::array<std::string, 11>& pd_inequality_names() {
  static const std::array<std::string, 11> names{
      "beta>alpha",  "omega>epsilon", "theta>delta",           "beta>theta",
      "theta>omega", "alpha>delta",   "delta>epsilon",         "delta>omega",
      "alpha>theta", "delta>(epsilon+theta)/2", "alpha>(delta+beta)/2",
  };
  return names;
}

template <Scalar T>
PdReport classify_generalized_pd(const SymmetricGame<T>& g, const T& margin) {
  const T two(2);
  const std::array<T, 11> lhs{g.beta,  g.omega, g.theta, g.beta,  g.theta, g.alpha,
                              g.delta, g.delta, g.alpha, g.delta, g.alpha};
  const std::array<T, 11> rhs{g.alpha, g.epsilon, g.delta,
                              g.theta, g.omega,   g.delta,
                              g.epsilon, g.omega, g.theta,
                              T((g.epsilon + g.theta) / two), T((g.delta + g.beta) / two)};
  // Inequalities 0-2 form condition (a), 3-6 condition (b), 7-10 condition (c).
  PdReport report;
  std::array<bool, 11> holds{};
  for (std::size_t i = 0; i < holds.size(); ++i) {
    holds[i] = T(lhs[i] - rhs[i]) > margin;
    if (!holds[i]) report.violated_inequalities.push_back(pd_inequality_names()[i]);
  }
  report.condition_a = holds[0] && holds[1] && holds[2];
  report.condition_b = holds[3] && holds[4] && holds[5] && holds[6];
  report.condition_c = holds[7] && holds[8] && holds[9] && holds[10];
  report.is_generalized_pd = report.condition_a && report.condition_b && report.condition_c;
  return report;
}

#define EPRGAME_INSTANTIATE(T)                                                               \
  template GeneralThreePlayerGame<T> expand(const SymmetricGame<T>&);                        \
  template SymmetricGame<T> reduce_to_symmetric(const GeneralThreePlayerGame<T>&, const T&); \
  template PayoffTriple<T> pure_strategy_payoffs(const SymmetricGame<T>&, PureProfile);      \
  template PdReport classify_generalized_pd(const SymmetricGame<T>&, const T&);

EPRGAME_INSTANTIATE(double)
EPRGAME_INSTANTIATE(Rational)

#undef EPRGAME_INSTANTIATE

}  // namespace eprgame
