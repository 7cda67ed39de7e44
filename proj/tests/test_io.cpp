#include <gtest/gtest.h>

#include <string>

#include "eprgame/errors.hpp"
#include "eprgame/io.hpp"
#include "test_support.hpp"

namespace eprgame {
namespace {

using testing::frac;
using testing::Rng;

const std::string kData = EPRGAME_DATA_DIR;

// The first detail of the InputError thrown by f, or "" if none.
template <typename F>
std::string failing_field(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.details().empty() ? "?" : e.details().front();
  }
  return "";
}

TEST(NumberFromJson, AcceptsNumbersAndRationalStrings) {
  EXPECT_EQ(number_from_json<Rational>(Json("7/50"), "x"), frac<Rational>(7, 50));
  EXPECT_EQ(number_from_json<Rational>(Json(0.13), "x"), frac<Rational>(13, 100));
  EXPECT_EQ(number_from_json<Rational>(Json(-3), "x"), Rational(-3));
  EXPECT_EQ(number_from_json<double>(Json("1/4"), "x"), 0.25);
  EXPECT_EQ(number_from_json<double>(Json(2), "x"), 2.0);
  EXPECT_EQ(failing_field([] { number_from_json<double>(Json("abc"), "game.alpha"); }), "game.alpha");
  EXPECT_EQ(failing_field([] { number_from_json<double>(Json(true), "q"); }), "q");
  EXPECT_EQ(number_to_json(frac<Rational>(172, 10000)), Json("43/2500"));
}

TEST(GameJson, RoundTripsAndReadsTables) {
  const auto g = testing::pd7<Rational>();
  EXPECT_EQ(game_from_json<Rational>(game_to_json(g), Rational(0)), g);
  Json table = Json::array();
  for (const auto& row : expand(g).table) table.push_back({row.alice.str(), row.bob.str(), row.chris.str()});
  EXPECT_EQ(game_from_json<Rational>(Json{{"table", table}}, Rational(0)), g);
  table[3][0] = "8";
  EXPECT_THROW(game_from_json<Rational>(Json{{"table", table}}, Rational(0)), InputError);
  EXPECT_EQ(game_from_json<double>(load_json_file(kData + "/pd7.json"), 0.0), testing::pd7<double>());
}

TEST(GameJson, NamesMissingAndMalformedFields) {
  Json j = game_to_json(testing::pd7<double>());
  j.erase("theta");
  EXPECT_EQ(failing_field([&] { game_from_json<double>(j, 0.0); }), "theta");
  j["theta"] = "five";
  EXPECT_EQ(failing_field([&] { game_from_json<double>(j, 0.0); }), "theta");
  Json t{{"table", Json::array({1, 2})}};
  EXPECT_EQ(failing_field([&] { game_from_json<double>(t, 0.0); }), "table");
}

TEST(BehaviorJson, RoundTripsInBothModes) {
  const auto exact = testing::worked_behavior<Rational>();
  EXPECT_EQ(behavior_from_json<Rational>(behavior_to_json(exact)), exact);
  Rng rng(90);
  const auto sample = random_nosignaling_sample(rng());
  EXPECT_EQ(behavior_from_json<double>(behavior_to_json(sample)), sample);
  EXPECT_EQ(behavior_from_json<Rational>(load_json_file(kData + "/worked_behavior.json")), exact);
}

TEST(BehaviorJson, AcceptsIndependentsAndCoins) {
  const auto u = testing::worked_independents<Rational>();
  EXPECT_EQ(behavior_from_json<Rational>(Json{{"independent", independents_to_json(u)}}),
            testing::worked_behavior<Rational>());
  EXPECT_EQ(independents_from_json<Rational>(independents_to_json(u)), u);
  const CoinParameters<Rational> coins{{frac<Rational>(3, 10), frac<Rational>(1, 2)},
                                       {frac<Rational>(1, 4), 0}, {1, frac<Rational>(2, 3)}};
  EXPECT_EQ(coins_from_json<Rational>(coins_to_json(coins)), coins);
  EXPECT_EQ(behavior_from_json<Rational>(Json{{"coins", coins_to_json(coins)}}), expand_factorizable(coins));
}

TEST(BehaviorJson, NamesOffendingFields) {
  Json j = behavior_to_json(testing::uniform_behavior<double>());
  j["p"].erase(j["p"].begin());
  EXPECT_EQ(failing_field([&] { behavior_from_json<double>(j); }), "p");
  j = behavior_to_json(testing::uniform_behavior<double>());
  j["p"][5] = "x";
  EXPECT_EQ(failing_field([&] { behavior_from_json<double>(j); }), "p[5]");
  EXPECT_EQ(failing_field([] { behavior_from_json<double>(Json{{"q", 1}}); }), "p");
  Json u{{"independent", independents_to_json(testing::worked_independents<double>())}};
  u["independent"].erase("p13");
  EXPECT_EQ(failing_field([&] { independents_from_json<double>(u); }), "independent.p13");
  Json c{{"coins", coins_to_json(CoinParameters<double>{{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}})}};
  c["coins"]["bob"][1] = 1.5;
  EXPECT_EQ(failing_field([&] { coins_from_json<double>(c); }), "coins.bob[1]");
}

TEST(RatiosJson, WrappedBareAndGameForms) {
  const auto r = testing::worked_ratios<Rational>();
  EXPECT_EQ(ratios_from_json<Rational>(ratios_to_json(r)), r);
  EXPECT_EQ(ratios_from_json<Rational>(Json{{"ratios", ratios_to_json(r)}}), r);
  EXPECT_EQ(ratios_from_json<Rational>(game_to_json(testing::worked_ratio_game<Rational>())), r);
  EXPECT_EQ(ratios_from_json<Rational>(load_json_file(kData + "/worked_ratios.json")), r);
}

TEST(StateJson, PureAndDensityRoundTrip) {
  Rng rng(91);
  const StateVector psi = testing::random_pure_state(rng);
  const auto pure = state_from_json(state_to_json(TripartiteState{psi}));
  ASSERT_TRUE(pure.is_pure());
  EXPECT_EQ(std::get<StateVector>(pure.value), psi);
  const DensityMatrix rho = density_from_pure(psi);
  const auto mixed = state_from_json(state_to_json(TripartiteState{rho}));
  ASSERT_FALSE(mixed.is_pure());
  EXPECT_EQ(std::get<DensityMatrix>(mixed.value), rho);
  EXPECT_EQ(failing_field([] { state_from_json(Json{{"mixed", 1}}); }), "pure");
  EXPECT_TRUE(validate_state(state_from_json(load_json_file(kData + "/ghz.json"))).pass);
}

TEST(SetupJson, RoundTrip) {
  Rng rng(92);
  const auto setup = testing::random_setup(rng);
  EXPECT_EQ(setup_from_json(setup_to_json(setup)).directions, setup.directions);
  Json j = setup_to_json(setup);
  j["chris"][1] = Json::array({1, 0});
  EXPECT_EQ(failing_field([&] { setup_from_json(j); }), "chris[1]");
}

TEST(ProblemJson, ReadsExampleAndRejectsBadFields) {
  const auto prob = problem_from_json<Rational>(load_json_file(kData + "/problem.json"));
  EXPECT_EQ(prob.ratios, testing::worked_ratios<Rational>());
  EXPECT_EQ(prob.margin, frac<Rational>(1, 100));
  EXPECT_TRUE(prob.require_nonfactorizable);
  EXPECT_FALSE(prob.seed_point.has_value());

  Json j = load_json_file(kData + "/problem.json");
  j["margin"] = -1;
  EXPECT_EQ(failing_field([&] { problem_from_json<double>(j); }), "margin");
  j["margin"] = 0;
  j["require_nonfactorizable"] = "yes";
  EXPECT_EQ(failing_field([&] { problem_from_json<double>(j); }), "require_nonfactorizable");
  j["require_nonfactorizable"] = false;
  j["seed"] = -4;
  EXPECT_EQ(failing_field([&] { problem_from_json<double>(j); }), "seed");
  j["seed"] = 4;
  j["seed_point"] = independents_to_json(testing::worked_independents<double>());
  const auto seeded = problem_from_json<double>(j);
  EXPECT_EQ(seeded.seed, 4u);
  ASSERT_TRUE(seeded.seed_point.has_value());
  EXPECT_EQ(*seeded.seed_point, testing::worked_independents<double>());
}

TEST(ProfileFromString, ParsesAndValidates) {
  EXPECT_EQ(profile_from_string<Rational>("1,0,1/2"), (MixedProfile<Rational>{1, 0, frac<Rational>(1, 2)}));
  EXPECT_EQ(profile_from_string<double>(" 0.25, 1 ,0"), (MixedProfile<double>{0.25, 1, 0}));
  EXPECT_EQ(failing_field([] { profile_from_string<double>("1,0"); }), "profile");
  EXPECT_EQ(failing_field([] { profile_from_string<double>("1,0,2"); }), "profile");
  EXPECT_EQ(failing_field([] { profile_from_string<double>("1,a,0"); }), "profile");
}

TEST(LoadJsonFile, ReportsPath) {
  EXPECT_EQ(failing_field([] { load_json_file("/nonexistent/file.json"); }), "/nonexistent/file.json");
}

}  // namespace
}  // namespace eprgame
