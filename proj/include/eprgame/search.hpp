#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "eprgame/behavior.hpp"
#include "eprgame/equilibrium.hpp"
#include "eprgame/scalar.hpp"

namespace eprgame {

template <Scalar T>
struct SearchProblem {
  PdRatios<T> ratios;
  T margin{};  // required slack in each (C,C,C) inequality, >= 0
  bool require_nonfactorizable = false;
  // Returned without solving when it already meets every requirement.
  std::optional<IndependentProbabilities<T>> seed_point;
  // Drives the randomized objectives of the non-factorizable retries.
  std::uint64_t seed = 0;
};

enum class SearchStatus { kFeasible, kInfeasible };

template <Scalar T>
struct SearchResult {
  SearchStatus status = SearchStatus::kInfeasible;
  std::optional<JointProbabilitySet<T>> behavior;
  IndependentProbabilities<T> independent{};
  std::array<T, 3> margins{};
  std::optional<FactorizabilityResult<T>> factorizability;
  int solves = 0;
  std::string note;
};

inline constexpr int kNonFactorizableRetries = 16;
inline constexpr int kSamplerDraws = 10000;

// Finds a zero-constrained behavior for which (C,C,C) is an equilibrium with
// every margin at least prob.margin. The free variables are the ten
// independent probabilities; box constraints on every completed entry and the
// three margins are affine in them, so feasibility is a linear program. With
// require_nonfactorizable, factorizable solutions are rejected and the LP is
// re-solved with random objectives, also trying the centroid of the vertices
// found so far. Throws InputError on a negative margin or non-finite ratios.
template <Scalar T>
SearchResult<T> search_ccc_feasible(const SearchProblem<T>& prob);

// Zero-constrained no-signaling behavior drawn from the seed: the first
// context is uniform on the simplex and p13, p18, p27 are uniform in the
// ranges their contexts allow given its marginals. Throws SamplingExhausted
// after kSamplerDraws rejected draws.
JointProbabilitySet<double> random_nosignaling_sample(std::uint64_t seed);

}  // namespace eprgame
