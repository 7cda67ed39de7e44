#include "eprgame/play.hpp"

#include <string>
#include <vector>

#include "eprgame/errors.hpp"

namespace eprgame {

namespace {

template <Scalar T>
void accumulate(PayoffTriple<T>& total, const PayoffTriple<T>& coefficient, const T& weight) {
  total.alice += coefficient.alice * weight;
  total.bob += coefficient.bob * weight;
  total.chris += coefficient.chris * weight;
}

}  // namespace

template <Scalar T>
T profile_weight(const MixedProfile<T>& m, PureProfile profile) {
  T w(1);
  for (Player player : kPlayers) {
    w *= profile[player] == Setting::kFirst ? m[player] : T(1 - m[player]);
  }
  return w;
}

template <Scalar T>
PayoffTriple<T> three_coin_payoffs(const SymmetricGame<T>& game, const MixedProfile<T>& m) {
  PayoffTriple<T> total{T(0), T(0), T(0)};
  for (const PureProfile& profile : kCanonicalProfiles) {
    accumulate(total, pure_strategy_payoffs(game, profile), profile_weight(m, profile));
  }
  return total;
}

template <Scalar T>
std::array<PayoffTriple<T>, kOutcomeCount> outcome_coefficients(const SymmetricGame<T>& g) {
  return {{
      {g.alpha, g.alpha, g.alpha},
      {g.delta, g.beta, g.delta},
      {g.delta, g.delta, g.beta},
      {g.epsilon, g.theta, g.theta},
      {g.beta, g.delta, g.delta},
      {g.theta, g.theta, g.epsilon},
      {g.theta, g.epsilon, g.theta},
      {g.omega, g.omega, g.omega},
  }};
}

template <Scalar T>
PayoffTriple<T> payoffs_from_joint(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                                   const MixedProfile<T>& m) {
  const auto coefficients = outcome_coefficients(game);
  PayoffTriple<T> total{T(0), T(0), T(0)};
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    const T weight = profile_weight(m, kCanonicalProfiles[ctx]);
    if (weight == 0) continue;
    PayoffTriple<T> in_context{T(0), T(0), T(0)};
    for (std::size_t o = 0; o < kOutcomeCount; ++o) accumulate(in_context, coefficients[o], p.at(ctx, o));
    accumulate(total, in_context, weight);
  }
  return total;
}

template <Scalar T>
PayoffTriple<T> reduced_payoffs(const SymmetricGame<T>& g, const JointProbabilitySet<T>& p,
                                PureProfile profile, const T& tol) {
  const ZeroReport zeros = check_embedding_zeros(p, tol);
  if (!zeros.pass) {
    std::vector<std::string> names;
    for (std::size_t i : zeros.violators) names.push_back("p" + std::to_string(i));
    throw ZeroConstraintViolated("nonzero entries that must vanish: " + join_details(names), names);
  }
  const PayoffTriple<T> aaa{g.alpha, g.alpha, g.alpha};
  const PayoffTriple<T> dbd{g.delta, g.beta, g.delta};
  const PayoffTriple<T> ddb{g.delta, g.delta, g.beta};
  const PayoffTriple<T> ett{g.epsilon, g.theta, g.theta};
  const PayoffTriple<T> bdd{g.beta, g.delta, g.delta};
  const PayoffTriple<T> tte{g.theta, g.theta, g.epsilon};
  const PayoffTriple<T> tet{g.theta, g.epsilon, g.theta};
  const PayoffTriple<T> ooo{g.omega, g.omega, g.omega};

  struct Term {
    const PayoffTriple<T>* coefficient;
    std::size_t index;
  };
  std::vector<Term> terms;
  switch (canonical_index(profile)) {
    case 0:
      terms = {{&aaa, 1}, {&dbd, 2}, {&ddb, 3}, {&ett, 4}, {&bdd, 5}, {&tte, 6}, {&tet, 7}, {&ooo, 8}};
      break;
    case 1: terms = {{&bdd, 13}, {&tte, 14}, {&tet, 15}, {&ooo, 16}}; break;
    case 2: terms = {{&dbd, 18}, {&ett, 20}, {&tte, 22}, {&ooo, 24}}; break;
    case 3: terms = {{&ddb, 27}, {&ett, 28}, {&tet, 31}, {&ooo, 32}}; break;
    case 4: terms = {{&ett, 36}, {&ooo, 40}}; break;
    case 5: terms = {{&tet, 47}, {&ooo, 48}}; break;
    case 6: terms = {{&tte, 54}, {&ooo, 56}}; break;
    default: terms = {{&ooo, 64}}; break;
  }
  PayoffTriple<T> total{T(0), T(0), T(0)};
  for (const Term& term : terms) accumulate(total, *term.coefficient, p.p(term.index));
  return total;
}

#define EPRGAME_INSTANTIATE(T)                                                                   \
  template T profile_weight(const MixedProfile<T>&, PureProfile);                                \
  template PayoffTriple<T> three_coin_payoffs(const SymmetricGame<T>&, const MixedProfile<T>&);  \
  template std::array<PayoffTriple<T>, kOutcomeCount> outcome_coefficients(                      \
      const SymmetricGame<T>&);                                                                  \
  template PayoffTriple<T> payoffs_from_joint(const SymmetricGame<T>&,                           \
                                              const JointProbabilitySet<T>&,                     \
                                              const MixedProfile<T>&);                           \
  template PayoffTriple<T> reduced_payoffs(const SymmetricGame<T>&,                              \
                                           const JointProbabilitySet<T>&, PureProfile, const T&);

EPRGAME_INSTANTIATE(double)
EPRGAME_INSTANTIATE(Rational)

#undef EPRGAME_INSTANTIATE

}  // namespace eprgame
