#include "eprgame/behavior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eprgame/errors.hpp"

namespace eprgame {

namespace {

std::size_t player_index(Player p) { return static_cast<std::size_t>(p); }

template <Scalar T>
T outcome_probability(const CoinParameters<T>& coins, Player player, Setting setting, int sign) {
  const T& plus = coins.plus_probability(player, setting);
  return sign > 0 ? plus : T(1 - plus);
}

// Probability that `player` sees `sign` in context `ctx`.
template <Scalar T>
T context_marginal(const JointProbabilitySet<T>& p, std::size_t ctx, Player player, int sign) {
  T sum(0);
  for (std::size_t o = 0; o < kOutcomeCount; ++o) {
    if (kCanonicalOutcomes[o][player] == sign) sum += p.at(ctx, o);
  }
  return sum;
}

template <Scalar T>
T sum_entries(const JointProbabilitySet<T>& p, const std::vector<std::size_t>& indices) {
  T sum(0);
  for (std::size_t i : indices) sum += p.p(i);
  return sum;
}

std::string group_label(const std::vector<std::size_t>& group) {
  std::string out = "p" + std::to_string(group.front());
  for (std::size_t k = 1; k < group.size(); ++k) out += "+p" + std::to_string(group[k]);
  return out;
}

template <Scalar T>
std::string chain_label(const ChainCheck<T>& chain) {
  static const char* const kNames[] = {"alice", "bob", "chris"};
  return std::string(kNames[player_index(chain.player)]) +
         (chain.setting == Setting::kFirst ? " first " : " second ") +
         (chain.sign > 0 ? "+1" : "-1");
}

}  // namespace

template <Scalar T>
const T& JointProbabilitySet<T>::p(std::size_t index) const {
  if (index < 1 || index > kEntryCount) {
    throw std::out_of_range("probability index " + std::to_string(index) + " outside 1..64");
  }
  return p_[index - 1];
}

template <Scalar T>
JointProbabilitySet<T> JointProbabilitySet<T>::with(std::size_t index, const T& value) const {
  if (index < 1 || index > kEntryCount) {
    throw std::out_of_range("probability index " + std::to_string(index) + " outside 1..64");
  }
  JointProbabilitySet copy = *this;
  copy.p_[index - 1] = value;
  return copy;
}

template <Scalar T>
JointProbabilitySet<double> to_double(const JointProbabilitySet<T>& p) {
  std::array<double, kEntryCount> out{};
  for (std::size_t i = 0; i < kEntryCount; ++i) out[i] = to_double(p.entries()[i]);
  return JointProbabilitySet<double>(out);
}

template <Scalar T>
const T& CoinParameters<T>::plus_probability(Player player, Setting setting) const {
  const CoinPair<T>& pair =
      player == Player::kAlice ? alice : (player == Player::kBob ? bob : chris);
  return setting == Setting::kFirst ? pair.first : pair.second;
}

template <Scalar T>
JointProbabilitySet<T> expand_factorizable(const CoinParameters<T>& coins) {
  std::array<T, kEntryCount> out{};
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    const PureProfile& profile = kCanonicalProfiles[ctx];
    for (std::size_t o = 0; o < kOutcomeCount; ++o) {
      const OutcomeTriple& outcome = kCanonicalOutcomes[o];
      T product(1);
      for (Player player : kPlayers) {
        product *= outcome_probability(coins, player, profile[player], outcome[player]);
      }
      out[ctx * kOutcomeCount + o] = product;
    }
  }
  return JointProbabilitySet<T>(out);
}

template <Scalar T>
NormalizationReport<T> check_normalization(const JointProbabilitySet<T>& p, const T& tol) {
  NormalizationReport<T> report;
  bool ok = true;
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    T sum(0);
    for (std::size_t o = 0; o < kOutcomeCount; ++o) sum += p.at(ctx, o);
    report.residuals[ctx] = sum - 1;
    if (!is_finite(report.residuals[ctx]) || abs_value(report.residuals[ctx]) > tol) ok = false;
  }
  for (std::size_t i = 1; i <= kEntryCount; ++i) {
    const T& v = p.p(i);
    if (!is_finite(v) || v < -tol || v > T(1 + tol)) report.out_of_range.push_back(i);
  }
  report.pass = ok && report.out_of_range.empty();
  return report;
}

template <Scalar T>
NoSignalingReport<T> check_no_signaling(const JointProbabilitySet<T>& p, const T& tol) {
  NoSignalingReport<T> report;
  report.pass = true;
  for (Player player : kPlayers) {
    for (Setting setting : {Setting::kFirst, Setting::kSecond}) {
      for (int sign : {1, -1}) {
        ChainCheck<T> chain;
        chain.player = player;
        chain.setting = setting;
        chain.sign = sign;
        std::size_t k = 0;
        for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
          if (kCanonicalProfiles[ctx][player] != setting) continue;
          chain.contexts[k] = ctx;
          chain.values[k] = context_marginal(p, ctx, player, sign);
          ++k;
        }
        const auto [lo, hi] = std::minmax_element(chain.values.begin(), chain.values.end());
        chain.spread = *hi - *lo;
        chain.pass = is_finite(chain.spread) && chain.spread <= tol;
        report.pass = report.pass && chain.pass;
        report.chains.push_back(std::move(chain));
      }
    }
  }
  return report;
}

template <Scalar T>
MarginalTable<T> compute_marginals(const JointProbabilitySet<T>& p) {
  MarginalTable<T> table;
  const NoSignalingReport<T> chains = check_no_signaling(p, T(0));
  for (const ChainCheck<T>& chain : chains.chains) {
    T sum(0);
    for (const T& v : chain.values) sum += v;
    const std::size_t sign_slot = chain.sign > 0 ? 0 : 1;
    const std::size_t pi = player_index(chain.player);
    const std::size_t si = static_cast<std::size_t>(chain.setting);
    table.probability[pi][si][sign_slot] = sum / 4;
    table.spread[pi][si][sign_slot] = chain.spread;
  }
  return table;
}

template <Scalar T>
FactorizabilityResult<T> factorizability_certificate(const JointProbabilitySet<T>& p,
                                                     const T& product_tol,
                                                     const T& constraint_tol) {
  std::vector<std::string> problems;
  const NormalizationReport<T> norm = check_normalization(p, constraint_tol);
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    if (abs_value(norm.residuals[ctx]) > constraint_tol || !is_finite(norm.residuals[ctx])) {
      problems.push_back("context " + std::to_string(ctx + 1) + " does not sum to 1");
    }
  }
  for (std::size_t i : norm.out_of_range) {
    problems.push_back("p" + std::to_string(i) + " outside [0,1]");
  }
  const NoSignalingReport<T> ns = check_no_signaling(p, constraint_tol);
  for (const ChainCheck<T>& chain : ns.chains) {
    if (!chain.pass) {
      problems.push_back(chain_label(chain) + " marginal varies by " + to_string(chain.spread));
    }
  }
  if (!problems.empty()) {
    throw NotABehavior("not a no-signaling behavior: " + join_details(problems), problems);
  }

  FactorizabilityResult<T> result;
  result.candidate.alice = {context_marginal(p, 0, Player::kAlice, 1),
                            context_marginal(p, 1, Player::kAlice, 1)};
  result.candidate.bob = {context_marginal(p, 0, Player::kBob, 1),
                          context_marginal(p, 2, Player::kBob, 1)};
  result.candidate.chris = {context_marginal(p, 0, Player::kChris, 1),
                            context_marginal(p, 3, Player::kChris, 1)};

  const JointProbabilitySet<T> product = expand_factorizable(result.candidate);
  result.max_deviation = T(0);
  for (std::size_t i = 1; i <= kEntryCount; ++i) {
    const T deviation = abs_value(T(p.p(i) - product.p(i)));
    if (deviation > result.max_deviation) {
      result.max_deviation = deviation;
      result.max_deviation_index = i;
    }
    if (!result.witness && deviation > product_tol) {
      result.witness = FactorizationWitness<T>{i, product.p(i), p.p(i), deviation};
    }
  }
  result.verdict = result.witness ? Verdict::kNonFactorizable : Verdict::kFactorizable;
  return result;
}

template <Scalar T>
ZeroReport check_embedding_zeros(const JointProbabilitySet<T>& p, const T& tol) {
  ZeroReport report;
  for (std::size_t i : kZeroIndices) {
    if (!is_finite(p.p(i)) || abs_value(p.p(i)) > tol) report.violators.push_back(i);
  }
  report.pass = report.violators.empty();
  return report;
}

template <Scalar T>
JointProbabilitySet<T> complete_unchecked(const IndependentProbabilities<T>& in) {
  std::array<T, kEntryCount + 1> q{};  // 1-based scratch, zeros preset
  for (std::size_t k = 0; k < kIndependentIndices.size(); ++k) q[kIndependentIndices[k]] = in[k];

  q[7] = q[13] + q[15] - q[1] - q[3] - q[5];
  q[2] = q[18] + q[22] - q[1] - q[5] - q[6];
  q[14] = q[18] + q[22] - q[13];
  q[4] = q[18] + q[20] - q[1] - q[2] - q[3];
  q[8] = 1 - (q[1] + q[2] + q[3] + q[4] + q[5] + q[6] + q[7]);
  q[16] = 1 - q[13] - q[14] - q[15];
  q[24] = 1 - q[18] - q[20] - q[22];
  q[28] = q[18] + q[20] - q[27];
  q[31] = q[13] + q[15] - q[27];
  q[32] = 1 - q[27] - q[28] - q[31];
  q[36] = q[1] + q[2] + q[3] + q[4];
  q[40] = q[5] + q[6] + q[7] + q[8];
  q[47] = q[13] + q[15];
  q[48] = q[14] + q[16];
  q[54] = q[13] + q[14];
  q[56] = q[15] + q[16];
  q[64] = T(1);

  std::array<T, kEntryCount> out{};
  std::copy(q.begin() + 1, q.end(), out.begin());
  return JointProbabilitySet<T>(out);
}

const std::vector<ReducedConstraint>& reduced_constraint_system() {
  static const std::vector<ReducedConstraint> system{
      {"normalization 1", {{1, 2, 3, 4, 5, 6, 7, 8}}, true},
      {"normalization 2", {{13, 14, 15, 16}}, true},
      {"normalization 3", {{18, 20, 22, 24}}, true},
      {"normalization 4", {{27, 28, 31, 32}}, true},
      {"normalization 5", {{36, 40}}, true},
      {"normalization 6", {{47, 48}}, true},
      {"normalization 7", {{54, 56}}, true},
      {"normalization 8", {{64}}, true},
      {"alice first +1", {{1, 2, 3, 4}, {27, 28}, {18, 20}, {36}}, false},
      {"alice first -1", {{5, 6, 7, 8}, {31, 32}, {22, 24}, {40}}, false},
      {"alice second", {{13, 14, 15, 16}}, true},
      {"bob first +1", {{1, 3, 5, 7}, {27, 31}, {13, 15}, {47}}, false},
      {"bob first -1", {{2, 4, 6, 8}, {28, 32}, {14, 16}, {48}}, false},
      {"bob second", {{18, 20, 22, 24}}, true},
      {"chris first +1", {{1, 2, 5, 6}, {18, 22}, {13, 14}, {54}}, false},
      {"chris first -1", {{3, 4, 7, 8}, {20, 24}, {15, 16}, {56}}, false},
      {"chris second", {{27, 28, 31, 32}}, true},
  };
  return system;
}

template <Scalar T>
std::vector<std::string> check_reduced_constraints(const JointProbabilitySet<T>& p, const T& tol) {
  std::vector<std::string> failures;
  for (const ReducedConstraint& constraint : reduced_constraint_system()) {
    const T reference = constraint.sums_to_one ? T(1) : sum_entries(p, constraint.groups.front());
    for (const auto& group : constraint.groups) {
      const T residual = sum_entries(p, group) - reference;
      if (!is_finite(residual) || abs_value(residual) > tol) {
        failures.push_back(constraint.name + ": " + group_label(group) + " off by " +
                           to_string(residual));
      }
    }
  }
  return failures;
}

template <Scalar T>
std::vector<std::string> completion_violations(const JointProbabilitySet<T>& p, const T& tol) {
  std::vector<std::string> failures;
  for (std::size_t i = 1; i <= kEntryCount; ++i) {
    const T& v = p.p(i);
    if (!is_finite(v) || v < -tol || v > T(1 + tol)) {
      failures.push_back("p" + std::to_string(i) + " = " + to_string(v) + " outside [0,1]");
    }
  }
  for (std::size_t i : check_embedding_zeros(p, tol).violators) {
    failures.push_back("p" + std::to_string(i) + " must vanish");
  }
  auto reduced = check_reduced_constraints(p, tol);
  failures.insert(failures.end(), reduced.begin(), reduced.end());
  return failures;
}

template <Scalar T>
JointProbabilitySet<T> complete_from_independent(const IndependentProbabilities<T>& independent,
                                                 const T& tol) {
  JointProbabilitySet<T> p = complete_unchecked(independent);
  std::vector<std::string> failures = completion_violations(p, tol);
  if (!failures.empty()) {
    throw InfeasibleCompletion("infeasible completion: " + join_details(failures), failures);
  }
  return p;
}

template <Scalar T>
IndependentProbabilities<T> independent_part(const JointProbabilitySet<T>& p) {
  IndependentProbabilities<T> out{};
  for (std::size_t k = 0; k < kIndependentIndices.size(); ++k) out[k] = p.p(kIndependentIndices[k]);
  return out;
}

#define EPRGAME_INSTANTIATE(T)                                                                  \
  template class JointProbabilitySet<T>;                                                        \
  template struct CoinParameters<T>;                                                            \
  template JointProbabilitySet<double> to_double(const JointProbabilitySet<T>&);                \
  template JointProbabilitySet<T> expand_factorizable(const CoinParameters<T>&);                \
  template NormalizationReport<T> check_normalization(const JointProbabilitySet<T>&, const T&); \
  template NoSignalingReport<T> check_no_signaling(const JointProbabilitySet<T>&, const T&);    \
  template MarginalTable<T> compute_marginals(const JointProbabilitySet<T>&);                   \
  template FactorizabilityResult<T> factorizability_certificate(const JointProbabilitySet<T>&,  \
                                                                const T&, const T&);            \
  template ZeroReport check_embedding_zeros(const JointProbabilitySet<T>&, const T&);           \
  template JointProbabilitySet<T> complete_unchecked(const IndependentProbabilities<T>&);       \
  template std::vector<std::string> check_reduced_constraints(const JointProbabilitySet<T>&,    \
                                                              const T&);                        \
  template std::vector<std::string> completion_violations(const JointProbabilitySet<T>&,        \
                                                          const T&);                            \
  template JointProbabilitySet<T> complete_from_independent(const IndependentProbabilities<T>&, \
                                                            const T&);                          \
  template IndependentProbabilities<T> independent_part(const JointProbabilitySet<T>&);

EPRGAME_INSTANTIATE(double)
EPRGAME_INSTANTIATE(Rational)

#undef EPRGAME_INSTANTIATE

}  // namespace eprgame
