#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "eprgame/behavior.hpp"
#include "eprgame/equilibrium.hpp"
#include "eprgame/game.hpp"
#include "eprgame/play.hpp"
#include "eprgame/quantum.hpp"
#include "eprgame/search.hpp"

namespace eprgame {

// std::map-backed, so objects serialize with sorted keys.
using Json = nlohmann::json;

// Reads and parses a JSON file. Throws InputError naming the path.
Json load_json_file(const std::string& path);

// Numbers may be JSON numbers or strings such as "7/50" or "0.13". In
// Rational mode a JSON number maps to the shortest decimal that round-trips
// its double value. Every reader throws InputError naming the offending field.
template <Scalar T>
T number_from_json(const Json& j, const std::string& field);

// Doubles become JSON numbers, Rationals become strings like "7/50".
template <Scalar T>
Json number_to_json(const T& v);

// {"alpha": ..., "omega": ...} or {"table": [[a, b, c] x 8]}; a table is
// reduced with reduce_to_symmetric at symmetry_tol.
template <Scalar T>
SymmetricGame<T> game_from_json(const Json& j, const T& symmetry_tol);
template <Scalar T>
Json game_to_json(const SymmetricGame<T>& game);

// {"p": [64 numbers]}, {"independent": {"p1": ..., "p27": ...}} completed
// without feasibility checks, or a coins file expanded as a product behavior.
template <Scalar T>
JointProbabilitySet<T> behavior_from_json(const Json& j);
template <Scalar T>
Json behavior_to_json(const JointProbabilitySet<T>& p);

// {"independent": {"p1": ...}} or the bare {"p1": ...} object.
template <Scalar T>
IndependentProbabilities<T> independents_from_json(const Json& j);
template <Scalar T>
Json independents_to_json(const IndependentProbabilities<T>& u);

// {"coins": {"alice": [r, s], "bob": [r', s'], "chris": [r'', s'']}} or the
// bare inner object. Writers emit the bare forms.
template <Scalar T>
CoinParameters<T> coins_from_json(const Json& j);
template <Scalar T>
Json coins_to_json(const CoinParameters<T>& coins);

// {"ratios": {...}}, the bare ratio object, or a game file (converted with
// ratios_from_game). Ratio keys: alpha_over_beta, theta_over_beta,
// delta_over_theta, omega_over_beta, epsilon_over_omega.
template <Scalar T>
PdRatios<T> ratios_from_json(const Json& j);
template <Scalar T>
Json ratios_to_json(const PdRatios<T>& ratios);

// {"pure": [[re, im] x 8]} or {"density": [[[re, im] x 8] x 8]}.
TripartiteState state_from_json(const Json& j);
Json state_to_json(const TripartiteState& state);

// {"alice": [[x, y, z], [x, y, z]], "bob": ..., "chris": ...}.
MeasurementSetup setup_from_json(const Json& j);
Json setup_to_json(const MeasurementSetup& setup);

// {"ratios": {...}, "margin": m, "require_nonfactorizable": bool} with
// optional "seed_point" (independents object) and "seed" (unsigned integer).
template <Scalar T>
SearchProblem<T> problem_from_json(const Json& j);

// "x,y,z" with each part a number or fraction in [0, 1].
template <Scalar T>
MixedProfile<T> profile_from_string(const std::string& text);

}  // namespace eprgame
