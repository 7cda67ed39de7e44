#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eprgame/game.hpp"
#include "eprgame/scalar.hpp"

namespace eprgame {

inline constexpr std::size_t kContextCount = 8;
inline constexpr std::size_t kOutcomeCount = 8;
inline constexpr std::size_t kEntryCount = 64;

// Measurement outcomes are +1 or -1 per player.
struct OutcomeTriple {
  int alice = 1;
  int bob = 1;
  int chris = 1;

  constexpr int operator[](Player p) const {
    switch (p) {
      case Player::kAlice: return alice;
      case Player::kBob: return bob;
      default: return chris;
    }
  }
};

// Outcome order inside every context block.
inline constexpr std::array<OutcomeTriple, 8> kCanonicalOutcomes{{
    {+1, +1, +1},
    {+1, -1, +1},
    {+1, +1, -1},
    {+1, -1, -1},
    {-1, +1, +1},
    {-1, -1, +1},
    {-1, +1, -1},
    {-1, -1, -1},
}};

// 1-based entry index of (context, outcome), both 0-based.
constexpr std::size_t entry_index(std::size_t context, std::size_t outcome) {
  return context * kOutcomeCount + outcome + 1;
}

template <Scalar T>
T default_product_tol() {
  if constexpr (std::same_as<T, double>) {
    return 1e-9;
  } else {
    return T(0);
  }
}

template <Scalar T>
T default_constraint_tol() {
  if constexpr (std::same_as<T, double>) {
    return 1e-12;
  } else {
    return T(0);
  }
}

// A behavior: 64 joint outcome probabilities, eight per measurement context,
// contexts in kCanonicalProfiles order and outcomes in kCanonicalOutcomes
// order. Entries are stored as given; the check_* functions report whether
// they form a valid behavior.
template <Scalar T>
class JointProbabilitySet {
 public:
  JointProbabilitySet() = default;
  explicit JointProbabilitySet(const std::array<T, kEntryCount>& entries) : p_(entries) {}

  // 1-based, p(1)..p(64). Throws std::out_of_range.
  const T& p(std::size_t index) const;
  const T& at(std::size_t context, std::size_t outcome) const {
    return p_[context * kOutcomeCount + outcome];
  }
  const std::array<T, kEntryCount>& entries() const { return p_; }

  // Copy with entry `index` (1-based) replaced.
  JointProbabilitySet with(std::size_t index, const T& value) const;

  friend bool operator==(const JointProbabilitySet&, const JointProbabilitySet&) = default;

 private:
  std::array<T, kEntryCount> p_{};
};

template <Scalar T>
JointProbabilitySet<double> to_double(const JointProbabilitySet<T>& p);

// Probabilities of outcome +1 under a player's first and second setting.
template <Scalar T>
struct CoinPair {
  T first{};
  T second{};
  friend bool operator==(const CoinPair&, const CoinPair&) = default;
};

// (r, s) for Alice, (r', s') for Bob, (r'', s'') for Chris.
template <Scalar T>
struct CoinParameters {
  CoinPair<T> alice;
  CoinPair<T> bob;
  CoinPair<T> chris;

  const T& plus_probability(Player player, Setting setting) const;
  friend bool operator==(const CoinParameters&, const CoinParameters&) = default;
};

// Product behavior p = Pr_A * Pr_B * Pr_C in every context.
template <Scalar T>
JointProbabilitySet<T> expand_factorizable(const CoinParameters<T>& coins);

template <Scalar T>
struct NormalizationReport {
  std::array<T, kContextCount> residuals{};  // block sum minus one
  std::vector<std::size_t> out_of_range;     // 1-based entries outside [-tol, 1+tol]
  bool pass = false;
};

template <Scalar T>
NormalizationReport<T> check_normalization(const JointProbabilitySet<T>& p, const T& tol);

// One parameter-independence chain: the probability that `player` sees
// `sign` under `setting`, read in each of the four contexts using that setting.
template <Scalar T>
struct ChainCheck {
  Player player = Player::kAlice;
  Setting setting = Setting::kFirst;
  int sign = 1;
  std::array<std::size_t, 4> contexts{};  // 0-based
  std::array<T, 4> values{};
  T spread{};  // max - min
  bool pass = false;
};

template <Scalar T>
struct NoSignalingReport {
  std::vector<ChainCheck<T>> chains;  // 12: player, setting, then sign +1 before -1
  bool pass = false;
};

template <Scalar T>
NoSignalingReport<T> check_no_signaling(const JointProbabilitySet<T>& p, const T& tol);

// Single-party marginals averaged over the four contexts that use each
// setting; `spread` is the largest disagreement between those contexts.
template <Scalar T>
struct MarginalTable {
  // Indexed [player][setting][0 for +1, 1 for -1].
  std::array<std::array<std::array<T, 2>, 2>, 3> probability{};
  std::array<std::array<std::array<T, 2>, 2>, 3> spread{};

  const T& plus(Player player, Setting setting) const {
    return probability[static_cast<std::size_t>(player)][static_cast<std::size_t>(setting)][0];
  }
  const T& minus(Player player, Setting setting) const {
    return probability[static_cast<std::size_t>(player)][static_cast<std::size_t>(setting)][1];
  }
};

template <Scalar T>
MarginalTable<T> compute_marginals(const JointProbabilitySet<T>& p);

enum class Verdict { kFactorizable, kNonFactorizable };

template <Scalar T>
struct FactorizationWitness {
  std::size_t index = 0;  // 1-based
  T product{};
  T value{};
  T deviation{};  // |value - product|
};

template <Scalar T>
struct FactorizabilityResult {
  Verdict verdict = Verdict::kFactorizable;
  CoinParameters<T> candidate;
  // Lowest-index entry deviating by more than the product tolerance.
  std::optional<FactorizationWitness<T>> witness;
  T max_deviation{};
  std::size_t max_deviation_index = 1;
};

// Reads candidate coins from single contexts (r, r', r'' from context 1,
// s from context 2, s' from context 3, s'' from context 4) and compares the
// product behavior with p entry by entry. Throws NotABehavior when p fails
// normalization or no-signaling at constraint_tol.
template <Scalar T>
FactorizabilityResult<T> factorizability_certificate(const JointProbabilitySet<T>& p,
                                                     const T& product_tol,
                                                     const T& constraint_tol);

template <Scalar T>
FactorizabilityResult<T> factorizability_certificate(const JointProbabilitySet<T>& p) {
  return factorizability_certificate(p, default_product_tol<T>(), default_constraint_tol<T>());
}

// Entries that vanish when the classical game is embedded (s = s' = s'' = 0).
inline constexpr std::array<std::size_t, 37> kZeroIndices{
    9,  10, 11, 12, 17, 19, 21, 23, 25, 26, 29, 30, 33, 34, 35, 37, 38, 39, 41,
    42, 43, 44, 45, 46, 49, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62, 63,
};

struct ZeroReport {
  std::vector<std::size_t> violators;  // 1-based
  bool pass = false;
};

template <Scalar T>
ZeroReport check_embedding_zeros(const JointProbabilitySet<T>& p, const T& tol);

// Free entries of a zero-constrained behavior; the rest follow linearly.
inline constexpr std::array<std::size_t, 10> kIndependentIndices{1, 3, 5, 6, 13, 15, 18, 20, 22, 27};

// Values of p_1, p_3, p_5, p_6, p_13, p_15, p_18, p_20, p_22, p_27 in that order.
template <Scalar T>
using IndependentProbabilities = std::array<T, 10>;

// Applies the completion formulas without any feasibility check.
template <Scalar T>
JointProbabilitySet<T> complete_unchecked(const IndependentProbabilities<T>& independent);

// Named linear constraint of a zero-constrained behavior: every group of
// entries has the same sum, and that sum is 1 when `sums_to_one` is set.
struct ReducedConstraint {
  std::string name;
  std::vector<std::vector<std::size_t>> groups;
  bool sums_to_one = false;
};

// Normalization and parameter independence restricted to the 27 entries that
// survive the zero constraints.
const std::vector<ReducedConstraint>& reduced_constraint_system();

// Human-readable description of every violated reduced constraint.
template <Scalar T>
std::vector<std::string> check_reduced_constraints(const JointProbabilitySet<T>& p, const T& tol);

// Entries outside [-tol, 1+tol] plus violated reduced constraints.
template <Scalar T>
std::vector<std::string> completion_violations(const JointProbabilitySet<T>& p, const T& tol);

// Throws InfeasibleCompletion listing every violation.
template <Scalar T>
JointProbabilitySet<T> complete_from_independent(const IndependentProbabilities<T>& independent,
                                                 const T& tol);

template <Scalar T>
JointProbabilitySet<T> complete_from_independent(
    const IndependentProbabilities<T>& independent) {
  return complete_from_independent(independent, default_constraint_tol<T>());
}

template <Scalar T>
IndependentProbabilities<T> independent_part(const JointProbabilitySet<T>& p);

}  // namespace eprgame
