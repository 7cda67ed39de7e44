#include "eprgame/equilibrium.hpp"

#include <string>

#include "eprgame/errors.hpp"

namespace eprgame {

namespace {

template <Scalar T>
void require_reduced_behavior(const JointProbabilitySet<T>& p, const T& tol) {
  std::vector<std::string> failures;
  for (std::size_t i : check_embedding_zeros(p, tol).violators) {
    failures.push_back("p" + std::to_string(i) + " must vanish");
  }
  auto reduced = check_reduced_constraints(p, tol);
  failures.insert(failures.end(), reduced.begin(), reduced.end());
  if (!failures.empty()) {
    throw ConstraintViolation("behavior violates the reduced constraints: " + join_details(failures),
                              failures);
  }
}

}  // namespace

template <Scalar T>
NeVerdict<T> verify_ne(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                       const MixedProfile<T>& m, const T& tol) {
  NeVerdict<T> verdict;
  verdict.is_ne = true;
  const PayoffTriple<T> at_profile = payoffs_from_joint(game, p, m);
  for (Player player : kPlayers) {
    const std::size_t i = static_cast<std::size_t>(player);
    bool first = true;
    for (const T& candidate : {T(0), T(1)}) {
      if (m[player] == candidate) continue;
      MixedProfile<T> deviated = m;
      deviated[player] = candidate;
      const T margin = at_profile[player] - payoffs_from_joint(game, p, deviated)[player];
      if (first || margin < verdict.margins[i]) {
        verdict.margins[i] = margin;
        verdict.deviations[i] = candidate;
        first = false;
      }
    }
    if (verdict.margins[i] < -tol || !is_finite(verdict.margins[i])) verdict.is_ne = false;
  }
  return verdict;
}

template <Scalar T>
std::vector<PureProfile> enumerate_pure_ne(const SymmetricGame<T>& game,
                                           const JointProbabilitySet<T>& p, const T& tol) {
  std::vector<PureProfile> out;
  for (const PureProfile& profile : kCanonicalProfiles) {
    if (verify_ne(game, p, corner<T>(profile), tol).is_ne) out.push_back(profile);
  }
  return out;
}

template <Scalar T>
DeltaCoefficients<T> delta_coefficients(const SymmetricGame<T>& g) {
  return {g.alpha - g.beta - 2 * g.delta + 2 * g.theta + g.epsilon - g.omega,
          g.delta - g.epsilon - g.theta + g.omega, g.epsilon - g.omega};
}

template <Scalar T>
std::array<T, 3> delta_reduction_check(const SymmetricGame<T>& game, const CoinParameters<T>& c,
                                       const MixedProfile<T>& m) {
  std::vector<std::string> nonzero;
  if (c.alice.second != 0) nonzero.emplace_back("s");
  if (c.bob.second != 0) nonzero.emplace_back("s'");
  if (c.chris.second != 0) nonzero.emplace_back("s''");
  if (!nonzero.empty()) {
    throw ConstraintViolation("second-setting coins must be 0: " + join_details(nonzero), nonzero);
  }
  const DeltaCoefficients<T> d = delta_coefficients(game);
  const T& r = c.alice.first;
  const T& r1 = c.bob.first;
  const T& r2 = c.chris.first;
  const T rrr = r * r1 * r2;
  return {m.y * m.z * rrr * d.d1 + r * (m.z * r2 + m.y * r1) * d.d2 + r * d.d3,
          m.x * m.z * rrr * d.d1 + r1 * (m.x * r + m.z * r2) * d.d2 + r1 * d.d3,
          m.x * m.y * rrr * d.d1 + r2 * (m.x * r + m.y * r1) * d.d2 + r2 * d.d3};
}

template <Scalar T>
PdRatios<T> ratios_from_game(const SymmetricGame<T>& g) {
  std::vector<std::string> problems;
  if (!(g.beta > 0)) problems.emplace_back("beta must be positive");
  if (g.theta == 0) problems.emplace_back("theta must be nonzero");
  if (g.omega == 0) problems.emplace_back("omega must be nonzero");
  if (!problems.empty()) {
    throw ConstraintViolation("game has no ratio form: " + join_details(problems), problems);
  }
  return {g.alpha / g.beta, g.theta / g.beta, g.delta / g.theta, g.omega / g.beta,
          g.epsilon / g.omega};
}

template <Scalar T>
SymmetricGame<T> game_from_ratios(const PdRatios<T>& r) {
  SymmetricGame<T> g;
  g.beta = T(1);
  g.alpha = r.alpha_over_beta;
  g.theta = r.theta_over_beta;
  g.delta = r.delta_over_theta * g.theta;
  g.omega = r.omega_over_beta;
  g.epsilon = r.epsilon_over_omega * g.omega;
  return g;
}

template <Scalar T>
std::array<T, 3> ccc_margin_values(const PdRatios<T>& k, const JointProbabilitySet<T>& p) {
  auto q = [&](std::size_t i) -> const T& { return p.p(i); };
  const T& ab = k.alpha_over_beta;
  const T& tb = k.theta_over_beta;
  const T& dt = k.delta_over_theta;
  const T& ob = k.omega_over_beta;
  const T& eo = k.epsilon_over_omega;
  const T alice = (q(5) + ab * q(1) - q(13)) +
                  tb * (q(6) + q(7) - q(14) - q(15) + dt * (q(2) + q(3))) +
                  ob * (q(8) - q(16) + eo * q(4));
  const T bob = (q(2) + ab * q(1) - q(18)) +
                tb * (q(4) + q(6) - q(20) - q(22) + dt * (q(3) + q(5))) +
                ob * (q(8) - q(24) + eo * q(7));
  const T chris = (q(3) + ab * q(1) - q(27)) +
                  tb * (q(4) + q(7) - q(28) - q(31) + dt * (q(2) + q(5))) +
                  ob * (q(8) - q(32) + eo * q(6));
  return {alice, bob, chris};
}

template <Scalar T>
std::array<T, 3> ccc_margins(const PdRatios<T>& ratios, const JointProbabilitySet<T>& p,
                             const T& tol) {
  require_reduced_behavior(p, tol);
  return ccc_margin_values(ratios, p);
}

template <Scalar T>
std::array<T, 3> ddd_margins(const SymmetricGame<T>& game, const JointProbabilitySet<T>& p,
                             const MixedProfile<T>& m, const T& tol) {
  require_reduced_behavior(p, tol);
  const T gap = game.omega - game.epsilon;
  return {m.x * p.p(36) * gap, m.y * p.p(47) * gap, m.z * p.p(54) * gap};
}

#define EPRGAME_INSTANTIATE(T)                                                                   \
  template NeVerdict<T> verify_ne(const SymmetricGame<T>&, const JointProbabilitySet<T>&,       \
                                  const MixedProfile<T>&, const T&);                             \
  template std::vector<PureProfile> enumerate_pure_ne(const SymmetricGame<T>&,                   \
                                                      const JointProbabilitySet<T>&, const T&);  \
  template DeltaCoefficients<T> delta_coefficients(const SymmetricGame<T>&);                     \
  template std::array<T, 3> delta_reduction_check(const SymmetricGame<T>&,                       \
                                                  const CoinParameters<T>&,                      \
                                                  const MixedProfile<T>&);                       \
  template PdRatios<T> ratios_from_game(const SymmetricGame<T>&);                                \
  template SymmetricGame<T> game_from_ratios(const PdRatios<T>&);                                \
  template std::array<T, 3> ccc_margin_values(const PdRatios<T>&, const JointProbabilitySet<T>&); \
  template std::array<T, 3> ccc_margins(const PdRatios<T>&, const JointProbabilitySet<T>&,       \
                                        const T&);                                               \
  template std::array<T, 3> ddd_margins(const SymmetricGame<T>&, const JointProbabilitySet<T>&,  \
                                        const MixedProfile<T>&, const T&);

EPRGAME_INSTANTIATE(double)
EPRGAME_INSTANTIATE(Rational)

#undef EPRGAME_INSTANTIATE

}  // namespace eprgame
