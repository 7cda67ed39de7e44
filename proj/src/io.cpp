#include "eprgame/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "eprgame/errors.hpp"

namespace eprgame {

namespace {

const char* const kPlayerKeys[3] = {"alice", "bob", "chris"};
const char* const kGameKeys[6] = {"alpha", "beta", "delta", "epsilon", "theta", "omega"};
const char* const kRatioKeys[5] = {"alpha_over_beta", "theta_over_beta", "delta_over_theta",
                                   "omega_over_beta", "epsilon_over_omega"};

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw InputError(field + ": " + problem, {field});
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string child(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

std::string element(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

void expect_array(const Json& j, std::size_t size, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of " + std::to_string(size));
  if (j.size() != size) {
    fail(field, "expected " + std::to_string(size) + " elements, got " + std::to_string(j.size()));
  }
}

double real_from_json(const Json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "expected a finite number");
  return v;
}

Direction direction_from_json(const Json& j, const std::string& field) {
  expect_array(j, 3, field);
  return {real_from_json(j[0], element(field, 0)), real_from_json(j[1], element(field, 1)),
          real_from_json(j[2], element(field, 2))};
}

Complex complex_from_json(const Json& j, const std::string& field) {
  expect_array(j, 2, field);
  return {real_from_json(j[0], element(field, 0)), real_from_json(j[1], element(field, 1))};
}

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file", {path});
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON (" + e.what() + ")", {path});
  }
}

template <Scalar T>
T number_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return from_rational<T>(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) {
    if constexpr (std::same_as<T, Rational>) {
      return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
    } else {
      return j.get<double>();
    }
  }
  if (j.is_number()) return from_double<T>(real_from_json(j, field));
  fail(field, "expected a number or a rational string");
}

template <Scalar T>
Json number_to_json(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return v;
  } else {
    return to_string(v);
  }
}

template <Scalar T>
SymmetricGame<T> game_from_json(const Json& j, const T& symmetry_tol) {
  if (!j.is_object()) fail("game", "expected an object");
  if (j.contains("table")) {
    const Json& table = j["table"];
    expect_array(table, 8, "table");
    GeneralThreePlayerGame<T> general;
    for (std::size_t i = 0; i < 8; ++i) {
      const std::string row_field = element("table", i);
      expect_array(table[i], 3, row_field);
      for (std::size_t k = 0; k < 3; ++k) {
        general.table[i][kPlayers[k]] = number_from_json<T>(table[i][k], element(row_field, k));
      }
    }
    try {
      return reduce_to_symmetric(general, symmetry_tol);
    } catch (const NotSymmetric& e) {
      fail("table", e.what());
    }
  }
  SymmetricGame<T> g;
  T* slots[6] = {&g.alpha, &g.beta, &g.delta, &g.epsilon, &g.theta, &g.omega};
  for (std::size_t k = 0; k < 6; ++k) *slots[k] = number_from_json<T>(member(j, kGameKeys[k], ""), kGameKeys[k]);
  return g;
}

template <Scalar T>
Json game_to_json(const SymmetricGame<T>& g) {
  return Json{{"alpha", number_to_json(g.alpha)}, {"beta", number_to_json(g.beta)},
              {"delta", number_to_json(g.delta)}, {"epsilon", number_to_json(g.epsilon)},
              {"theta", number_to_json(g.theta)}, {"omega", number_to_json(g.omega)}};
}

template <Scalar T>
JointProbabilitySet<T> behavior_from_json(const Json& j) {
  if (!j.is_object()) fail("behavior", "expected an object");
  if (j.contains("p")) {
    const Json& p = j["p"];
    expect_array(p, kEntryCount, "p");
    std::array<T, kEntryCount> entries{};
    for (std::size_t i = 0; i < kEntryCount; ++i) entries[i] = number_from_json<T>(p[i], element("p", i));
    return JointProbabilitySet<T>(entries);
  }
  if (j.contains("independent")) return complete_unchecked(independents_from_json<T>(j));
  if (j.contains("coins")) return expand_factorizable(coins_from_json<T>(j));
  fail("p", "missing (expected \"p\", \"independent\" or \"coins\")");
}

template <Scalar T>
Json behavior_to_json(const JointProbabilitySet<T>& p) {
  Json entries = Json::array();
  for (const T& v : p.entries()) entries.push_back(number_to_json(v));
  return Json{{"p", entries}};
}

template <Scalar T>
IndependentProbabilities<T> independents_from_json(const Json& j) {
  if (!j.is_object()) fail("independent", "expected an object");
  const bool wrapped = j.contains("independent");
  const Json& obj = wrapped ? j["independent"] : j;
  const std::string prefix = wrapped ? "independent" : "";
  IndependentProbabilities<T> u{};
  for (std::size_t k = 0; k < kIndependentIndices.size(); ++k) {
    const std::string key = "p" + std::to_string(kIndependentIndices[k]);
    u[k] = number_from_json<T>(member(obj, key, prefix), child(prefix, key));
  }
  return u;
}

template <Scalar T>
Json independents_to_json(const IndependentProbabilities<T>& u) {
  Json out = Json::object();
  for (std::size_t k = 0; k < kIndependentIndices.size(); ++k) {
    out["p" + std::to_string(kIndependentIndices[k])] = number_to_json(u[k]);
  }
  return out;
}

template <Scalar T>
CoinParameters<T> coins_from_json(const Json& j) {
  if (!j.is_object()) fail("coins", "expected an object");
  const Json& coins = j.contains("coins") ? j["coins"] : j;
  CoinParameters<T> out;
  CoinPair<T>* pairs[3] = {&out.alice, &out.bob, &out.chris};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string field = child("coins", kPlayerKeys[k]);
    const Json& pair = member(coins, kPlayerKeys[k], "coins");
    expect_array(pair, 2, field);
    pairs[k]->first = number_from_json<T>(pair[0], element(field, 0));
    pairs[k]->second = number_from_json<T>(pair[1], element(field, 1));
    for (std::size_t s = 0; s < 2; ++s) {
      const T& v = s == 0 ? pairs[k]->first : pairs[k]->second;
      if (v < 0 || v > 1) fail(element(field, s), "probability outside [0,1]");
    }
  }
  return out;
}

template <Scalar T>
Json coins_to_json(const CoinParameters<T>& c) {
  auto pair = [](const CoinPair<T>& p) {
    return Json::array({number_to_json(p.first), number_to_json(p.second)});
  };
  return Json{{"alice", pair(c.alice)}, {"bob", pair(c.bob)}, {"chris", pair(c.chris)}};
}

template <Scalar T>
PdRatios<T> ratios_from_json(const Json& j) {
  if (!j.is_object()) fail("ratios", "expected an object");
  if (j.contains("alpha") || j.contains("table")) {
    const SymmetricGame<T> game = game_from_json<T>(j, default_constraint_tol<T>());
    try {
      return ratios_from_game(game);
    } catch (const ConstraintViolation& e) {
      fail("game", e.what());
    }
  }
  const bool wrapped = j.contains("ratios");
  const Json& obj = wrapped ? j["ratios"] : j;
  const std::string prefix = wrapped ? "ratios" : "";
  PdRatios<T> r;
  T* slots[5] = {&r.alpha_over_beta, &r.theta_over_beta, &r.delta_over_theta, &r.omega_over_beta,
                 &r.epsilon_over_omega};
  for (std::size_t k = 0; k < 5; ++k) {
    *slots[k] = number_from_json<T>(member(obj, kRatioKeys[k], prefix), child(prefix, kRatioKeys[k]));
  }
  return r;
}

template <Scalar T>
Json ratios_to_json(const PdRatios<T>& r) {
  return Json{{"alpha_over_beta", number_to_json(r.alpha_over_beta)},
              {"theta_over_beta", number_to_json(r.theta_over_beta)},
              {"delta_over_theta", number_to_json(r.delta_over_theta)},
              {"omega_over_beta", number_to_json(r.omega_over_beta)},
              {"epsilon_over_omega", number_to_json(r.epsilon_over_omega)}};
}

TripartiteState state_from_json(const Json& j) {
  if (!j.is_object()) fail("state", "expected an object");
  if (j.contains("pure")) {
    const Json& amps = j["pure"];
    expect_array(amps, 8, "pure");
    StateVector psi;
    for (std::size_t i = 0; i < 8; ++i) psi(static_cast<int>(i)) = complex_from_json(amps[i], element("pure", i));
    return {psi};
  }
  if (j.contains("density")) {
    const Json& rows = j["density"];
    expect_array(rows, 8, "density");
    DensityMatrix rho;
    for (std::size_t r = 0; r < 8; ++r) {
      const std::string row_field = element("density", r);
      expect_array(rows[r], 8, row_field);
      for (std::size_t c = 0; c < 8; ++c) {
        rho(static_cast<int>(r), static_cast<int>(c)) = complex_from_json(rows[r][c], element(row_field, c));
      }
    }
    return {rho};
  }
  fail("pure", "missing (expected \"pure\" or \"density\")");
}

Json state_to_json(const TripartiteState& state) {
  if (const auto* psi = std::get_if<StateVector>(&state.value)) {
    Json amps = Json::array();
    for (int i = 0; i < 8; ++i) amps.push_back(complex_to_json((*psi)(i)));
    return Json{{"pure", amps}};
  }
  const auto& rho = std::get<DensityMatrix>(state.value);
  Json rows = Json::array();
  for (int r = 0; r < 8; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 8; ++c) row.push_back(complex_to_json(rho(r, c)));
    rows.push_back(row);
  }
  return Json{{"density", rows}};
}

MeasurementSetup setup_from_json(const Json& j) {
  MeasurementSetup setup;
  for (std::size_t k = 0; k < 3; ++k) {
    const Json& pair = member(j, kPlayerKeys[k], "");
    expect_array(pair, 2, kPlayerKeys[k]);
    for (std::size_t s = 0; s < 2; ++s) {
      setup.directions[k][s] = direction_from_json(pair[s], element(kPlayerKeys[k], s));
    }
  }
  return setup;
}

Json setup_to_json(const MeasurementSetup& setup) {
  Json out = Json::object();
  for (std::size_t k = 0; k < 3; ++k) {
    Json pair = Json::array();
    for (const Direction& d : setup.directions[k]) pair.push_back(Json::array({d[0], d[1], d[2]}));
    out[kPlayerKeys[k]] = pair;
  }
  return out;
}

template <Scalar T>
SearchProblem<T> problem_from_json(const Json& j) {
  SearchProblem<T> prob;
  prob.ratios = ratios_from_json<T>(Json{{"ratios", member(j, "ratios", "")}});
  prob.margin = number_from_json<T>(member(j, "margin", ""), "margin");
  if (prob.margin < 0) fail("margin", "must be non-negative");
  if (j.contains("require_nonfactorizable")) {
    const Json& flag = j["require_nonfactorizable"];
    if (!flag.is_boolean()) fail("require_nonfactorizable", "expected true or false");
    prob.require_nonfactorizable = flag.get<bool>();
  }
  if (j.contains("seed_point")) prob.seed_point = independents_from_json<T>(Json{{"independent", j["seed_point"]}});
  if (j.contains("seed")) {
    const Json& seed = j["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      fail("seed", "expected an unsigned integer");
    }
    prob.seed = j["seed"].get<std::uint64_t>();
  }
  return prob;
}

template <Scalar T>
MixedProfile<T> profile_from_string(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  if (parts.size() != 3) fail("profile", "expected x,y,z");
  std::array<T, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    try {
      v[k] = from_rational<T>(parse_rational(parts[k]));
    } catch (const std::invalid_argument& e) {
      fail("profile", e.what());
    }
    if (v[k] < 0 || v[k] > 1) fail("profile", "probability outside [0,1]");
  }
  return {v[0], v[1], v[2]};
}

#define EPRGAME_INSTANTIATE(T)                                                     \
  template T number_from_json<T>(const Json&, const std::string&);                 \
  template Json number_to_json(const T&);                                          \
  template SymmetricGame<T> game_from_json(const Json&, const T&);                 \
  template Json game_to_json(const SymmetricGame<T>&);                             \
  template JointProbabilitySet<T> behavior_from_json<T>(const Json&);              \
  template Json behavior_to_json(const JointProbabilitySet<T>&);                   \
  template IndependentProbabilities<T> independents_from_json<T>(const Json&);     \
  template Json independents_to_json(const IndependentProbabilities<T>&);          \
  template CoinParameters<T> coins_from_json<T>(const Json&);                      \
  template Json coins_to_json(const CoinParameters<T>&);                           \
  template PdRatios<T> ratios_from_json<T>(const Json&);                           \
  template Json ratios_to_json(const PdRatios<T>&);                                \
  template SearchProblem<T> problem_from_json<T>(const Json&);                     \
  template MixedProfile<T> profile_from_string<T>(const std::string&);

EPRGAME_INSTANTIATE(double)
EPRGAME_INSTANTIATE(Rational)

#undef EPRGAME_INSTANTIATE

}  // namespace eprgame
