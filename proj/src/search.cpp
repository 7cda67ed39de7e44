#include "eprgame/search.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "eprgame/errors.hpp"
#include "eprgame/simplex.hpp"

namespace eprgame {

namespace {

template <Scalar T>
T margin_padding() {
  if constexpr (std::same_as<T, double>) {
    return 1e-9;
  } else {
    return T(0);
  }
}

// value(u) = constant + gradient . u
template <Scalar T>
struct AffineForm {
  T constant{};
  std::array<T, 10> gradient{};

  bool is_constant() const {
    return std::all_of(gradient.begin(), gradient.end(), [](const T& g) { return g == 0; });
  }
};

template <Scalar T>
struct SearchModel {
  std::array<AffineForm<T>, kEntryCount> entries;
  std::array<AffineForm<T>, 3> margins;
};

template <Scalar T>
SearchModel<T> build_model(const PdRatios<T>& ratios) {
  SearchModel<T> model;
  const IndependentProbabilities<T> origin{};
  const JointProbabilitySet<T> p0 = complete_unchecked(origin);
  const std::array<T, 3> m0 = ccc_margin_values(ratios, p0);
  for (std::size_t i = 0; i < kEntryCount; ++i) model.entries[i].constant = p0.entries()[i];
  for (std::size_t k = 0; k < 3; ++k) model.margins[k].constant = m0[k];
  for (std::size_t j = 0; j < 10; ++j) {
    IndependentProbabilities<T> unit{};
    unit[j] = T(1);
    const JointProbabilitySet<T> pj = complete_unchecked(unit);
    const std::array<T, 3> mj = ccc_margin_values(ratios, pj);
    for (std::size_t i = 0; i < kEntryCount; ++i) {
      model.entries[i].gradient[j] = pj.entries()[i] - p0.entries()[i];
    }
    for (std::size_t k = 0; k < 3; ++k) model.margins[k].gradient[j] = mj[k] - m0[k];
  }
  return model;
}

template <Scalar T>
void add_row(LinearProgram<T>& lp, const std::array<T, 10>& gradient, const T& sign,
             const T& bound) {
  std::vector<T> row(10);
  for (std::size_t j = 0; j < 10; ++j) row[j] = sign * gradient[j];
  lp.a.push_back(std::move(row));
  lp.b.push_back(bound);
}

// 0 <= entry(u) <= 1 for every entry and margin_k(u) >= target.
template <Scalar T>
LinearProgram<T> build_program(const SearchModel<T>& model, const T& target) {
  LinearProgram<T> lp;
  for (const AffineForm<T>& form : model.entries) {
    if (form.is_constant()) continue;
    add_row(lp, form.gradient, T(1), T(1 - form.constant));
    add_row(lp, form.gradient, T(-1), form.constant);
  }
  for (const AffineForm<T>& form : model.margins) {
    add_row(lp, form.gradient, T(-1), T(form.constant - target));
  }
  lp.c.assign(10, T(0));
  return lp;
}

template <Scalar T>
struct Candidate {
  JointProbabilitySet<T> behavior;
  std::array<T, 3> margins{};
  FactorizabilityResult<T> factorizability;
};

// Completes u and re-verifies every requirement independently of the LP.
template <Scalar T>
std::optional<Candidate<T>> evaluate(const SearchProblem<T>& prob,
                                     const IndependentProbabilities<T>& u) {
  const JointProbabilitySet<T> p = complete_unchecked(u);
  if (!completion_violations(p, default_constraint_tol<T>()).empty()) return std::nullopt;
  const std::array<T, 3> margins = ccc_margin_values(prob.ratios, p);
  for (const T& m : margins) {
    if (m < prob.margin) return std::nullopt;
  }
  return Candidate<T>{p, margins, factorizability_certificate(p)};
}

template <Scalar T>
SearchResult<T> feasible(const IndependentProbabilities<T>& u, Candidate<T> candidate, int solves,
                         std::string note) {
  SearchResult<T> result;
  result.status = SearchStatus::kFeasible;
  result.behavior = std::move(candidate.behavior);
  result.independent = u;
  result.margins = candidate.margins;
  result.factorizability = std::move(candidate.factorizability);
  result.solves = solves;
  result.note = std::move(note);
  return result;
}

template <Scalar T>
IndependentProbabilities<T> to_independent(const std::vector<T>& x) {
  IndependentProbabilities<T> u{};
  std::copy(x.begin(), x.end(), u.begin());
  return u;
}

}  // namespace

template <Scalar T>
SearchResult<T> search_ccc_feasible(const SearchProblem<T>& prob) {
  if (!is_finite(prob.margin) || prob.margin < 0) {
    throw InputError("margin must be a non-negative finite number");
  }
  const PdRatios<T>& r = prob.ratios;
  for (const T* v : {&r.alpha_over_beta, &r.theta_over_beta, &r.delta_over_theta,
                     &r.omega_over_beta, &r.epsilon_over_omega}) {
    if (!is_finite(*v)) throw InputError("ratios must be finite");
  }

  const bool need_nonfactorizable = prob.require_nonfactorizable;
  auto acceptable = [&](const Candidate<T>& c) {
    return !need_nonfactorizable || c.factorizability.verdict == Verdict::kNonFactorizable;
  };

  if (prob.seed_point) {
    if (auto candidate = evaluate(prob, *prob.seed_point); candidate && acceptable(*candidate)) {
      return feasible(*prob.seed_point, std::move(*candidate), 0, "seed point");
    }
  }

  const SearchModel<T> model = build_model(prob.ratios);
  LinearProgram<T> lp = build_program(model, T(prob.margin + margin_padding<T>()));

  SearchResult<T> infeasible;
  LpSolution<T> solution = solve_lp(lp);
  int solves = 1;
  if (solution.status != LpStatus::kOptimal) {
    infeasible.solves = solves;
    infeasible.note = "no behavior reaches the requested margin";
    return infeasible;
  }

  std::vector<IndependentProbabilities<T>> vertices;
  auto try_point = [&](const IndependentProbabilities<T>& u) -> std::optional<SearchResult<T>> {
    auto candidate = evaluate(prob, u);
    if (candidate && acceptable(*candidate)) {
      return feasible(u, std::move(*candidate), solves, "");
    }
    return std::nullopt;
  };

  const IndependentProbabilities<T> first = to_independent(solution.x);
  if (auto found = try_point(first)) return *found;
  vertices.push_back(first);

  std::mt19937_64 rng(prob.seed);
  std::uniform_int_distribution<int> coefficient(-1000, 1000);
  for (int attempt = 0; attempt < kNonFactorizableRetries; ++attempt) {
    for (T& c : lp.c) c = T(coefficient(rng)) / 1000;
    solution = solve_lp(lp);
    ++solves;
    if (solution.status != LpStatus::kOptimal) continue;
    const IndependentProbabilities<T> u = to_independent(solution.x);
    if (auto found = try_point(u)) return *found;
    vertices.push_back(u);

    IndependentProbabilities<T> centroid{};
    for (const auto& v : vertices) {
      for (std::size_t j = 0; j < 10; ++j) centroid[j] += v[j];
    }
    for (T& c : centroid) c /= static_cast<int>(vertices.size());
    if (auto found = try_point(centroid)) {
      found->note = "centroid of " + std::to_string(vertices.size()) + " vertices";
      return *found;
    }
  }

  infeasible.solves = solves;
  infeasible.note = "every solution found was factorizable after " +
                    std::to_string(kNonFactorizableRetries) + " re-solves";
  return infeasible;
}

JointProbabilitySet<double> random_nosignaling_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform_in = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  for (int draw = 0; draw < kSamplerDraws; ++draw) {
    std::array<double, 8> block{};
    double total = 0.0;
    for (double& v : block) total += (v = exponential(rng));
    for (double& v : block) v /= total;

    const double alice_plus = block[0] + block[1] + block[2] + block[3];
    const double bob_plus = block[0] + block[2] + block[4] + block[6];
    const double chris_plus = block[0] + block[1] + block[4] + block[5];
    const double p13 = uniform_in(std::max(0.0, bob_plus + chris_plus - 1.0), std::min(bob_plus, chris_plus));
    const double p18 = uniform_in(std::max(0.0, alice_plus + chris_plus - 1.0), std::min(alice_plus, chris_plus));
    const double p27 = uniform_in(std::max(0.0, alice_plus + bob_plus - 1.0), std::min(alice_plus, bob_plus));

    const IndependentProbabilities<double> u{block[0], block[2],           block[4],
                                             block[5], p13,                bob_plus - p13,
                                             p18,      alice_plus - p18,   chris_plus - p18,
                                             p27};
    const JointProbabilitySet<double> p = complete_unchecked(u);
    if (completion_violations(p, default_constraint_tol<double>()).empty()) return p;
  }
  throw SamplingExhausted("no feasible behavior after " + std::to_string(kSamplerDraws) + " draws");
}

template SearchResult<double> search_ccc_feasible(const SearchProblem<double>&);
template SearchResult<Rational> search_ccc_feasible(const SearchProblem<Rational>&);

}  // namespace eprgame
