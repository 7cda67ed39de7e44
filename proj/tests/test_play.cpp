#include <gtest/gtest.h>

#include "eprgame/errors.hpp"
#include "eprgame/play.hpp"
#include "eprgame/search.hpp"
#include "test_support.hpp"

namespace eprgame {
namespace {

using testing::frac;
using testing::Rng;

// Six-coin mixed payoff folded context by context: in each context the
// players toss the coins their strategies select, which is the three-coin
// game with each x replaced by that coin's head probability.
PayoffTriple<double> six_coin_oracle(const SymmetricGame<double>& g, const CoinParameters<double>& c,
                                     const MixedProfile<double>& m) {
  PayoffTriple<double> total{0, 0, 0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int cc = 0; cc < 2; ++cc) {
        const double weight = (a == 0 ? m.x : 1 - m.x) * (b == 0 ? m.y : 1 - m.y) *
                              (cc == 0 ? m.z : 1 - m.z);
        const MixedProfile<double> heads{a == 0 ? c.alice.first : c.alice.second,
                                         b == 0 ? c.bob.first : c.bob.second,
                                         cc == 0 ? c.chris.first : c.chris.second};
        const auto inner = three_coin_payoffs(g, heads);
        total.alice += weight * inner.alice;
        total.bob += weight * inner.bob;
        total.chris += weight * inner.chris;
      }
    }
  }
  return total;
}

TEST(ThreeCoinPayoffs, Corners) {
  const auto g = testing::pd7<Rational>();
  EXPECT_EQ(three_coin_payoffs(g, MixedProfile<Rational>{0, 0, 0}), (PayoffTriple<Rational>{1, 1, 1}));
  EXPECT_EQ(three_coin_payoffs(g, MixedProfile<Rational>{1, 1, 1}), (PayoffTriple<Rational>{7, 7, 7}));
}

TEST(ThreeCoinPayoffs, FairCoinsAverageThePayoffTable) {
  const auto g = testing::pd7<Rational>();
  Rational alice_sum(0);
  for (const auto& row : expand(g).table) alice_sum += row.alice;
  EXPECT_EQ(alice_sum, 33);
  const Rational half = frac<Rational>(1, 2);
  const auto v = three_coin_payoffs(g, MixedProfile<Rational>{half, half, half});
  EXPECT_EQ(v, (PayoffTriple<Rational>{alice_sum / 8, alice_sum / 8, alice_sum / 8}));
}

TEST(PayoffsFromJoint, DeterministicHeads) {
  const CoinParameters<double> heads{{1, 1}, {1, 1}, {1, 1}};
  const auto v = payoffs_from_joint(testing::pd7<double>(), expand_factorizable(heads),
                                    MixedProfile<double>{1, 1, 1});
  EXPECT_EQ(v, (PayoffTriple<double>{7, 7, 7}));
}

TEST(PayoffsFromJoint, MatchesSixCoinFoldOnProductBehaviors) {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_game(rng);
    const auto c = testing::random_coins(rng);
    const auto m = testing::random_profile(rng);
    const auto expected = six_coin_oracle(g, c, m);
    const auto actual = payoffs_from_joint(g, expand_factorizable(c), m);
    for (Player p : kPlayers) EXPECT_NEAR(actual[p], expected[p], 1e-10);
  }
}

TEST(PayoffsFromJoint, WorkedExampleDeviationGain) {
  const auto g = testing::worked_ratio_game<Rational>();
  const auto p = testing::worked_behavior<Rational>();
  const Rational at_ccc = payoffs_from_joint(g, p, MixedProfile<Rational>{1, 1, 1}).alice;
  const Rational deviated = payoffs_from_joint(g, p, MixedProfile<Rational>{0, 1, 1}).alice;
  EXPECT_EQ(at_ccc - deviated, frac<Rational>(10663, 100000));
}

TEST(PayoffsFromJoint, AffineInOwnProbability) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_game(rng);
    const auto p = random_nosignaling_sample(rng());
    const auto m = testing::random_profile(rng);
    for (Player player : kPlayers) {
      auto at = [&](double v) {
        MixedProfile<double> q = m;
        q[player] = v;
        return payoffs_from_joint(g, p, q)[player];
      };
      const double t = testing::uniform(rng);
      EXPECT_NEAR(at(t), (1 - t) * at(0) + t * at(1), 1e-10);
    }
  }
}

TEST(PayoffsFromJoint, SymmetricOnSymmetricBehaviors) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_game(rng);
    const double r = testing::uniform(rng), s = testing::uniform(rng);
    const CoinParameters<double> same{{r, s}, {r, s}, {r, s}};
    const double t = testing::uniform(rng);
    for (const auto& p : {testing::uniform_behavior<double>(), expand_factorizable(same)}) {
      const auto v = payoffs_from_joint(g, p, MixedProfile<double>{t, t, t});
      EXPECT_NEAR(v.alice, v.bob, 1e-12);
      EXPECT_NEAR(v.alice, v.chris, 1e-12);
    }
  }
}

TEST(OutcomeCoefficients, FollowPurePayoffsOfMatchingProfile) {
  const auto g = testing::pd7<double>();
  const auto coefficients = outcome_coefficients(g);
  for (std::size_t o = 0; o < 8; ++o) {
    const auto& outcome = kCanonicalOutcomes[o];
    auto s = [](int sign) { return sign > 0 ? Setting::kFirst : Setting::kSecond; };
    EXPECT_EQ(coefficients[o], pure_strategy_payoffs(g, {s(outcome.alice), s(outcome.bob), s(outcome.chris)}));
  }
}

TEST(ReducedPayoffs, AllDefectCorner) {
  const auto g = testing::pd7<Rational>();
  const auto p = testing::worked_behavior<Rational>();
  using detail::k1;
  using detail::k2;
  EXPECT_EQ(reduced_payoffs(g, p, {k2, k2, k2}), (PayoffTriple<Rational>{g.omega, g.omega, g.omega}));
  const Rational a = g.epsilon * p.p(36) + g.omega * p.p(40);
  const Rational b = g.theta * p.p(36) + g.omega * p.p(40);
  EXPECT_EQ(reduced_payoffs(g, p, {k1, k2, k2}), (PayoffTriple<Rational>{a, b, b}));
}

TEST(ReducedPayoffs, AgreeWithFullSumOnZeroConstrainedBehaviors) {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_game(rng);
    const auto p = random_nosignaling_sample(rng());
    for (const PureProfile& profile : kCanonicalProfiles) {
      const auto reduced = reduced_payoffs(g, p, profile);
      const auto full = payoffs_from_joint(g, p, corner<double>(profile));
      for (Player player : kPlayers) EXPECT_NEAR(reduced[player], full[player], 1e-12);
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_game(rng);
    const auto p = expand_factorizable(testing::random_classical_coins(rng));
    for (const PureProfile& profile : kCanonicalProfiles) {
      const auto reduced = reduced_payoffs(g, p, profile);
      const auto full = payoffs_from_joint(g, p, corner<double>(profile));
      for (Player player : kPlayers) EXPECT_NEAR(reduced[player], full[player], 1e-12);
    }
  }
}

TEST(ReducedPayoffs, RejectsNonzeroVanishingEntries) {
  try {
    reduced_payoffs(testing::pd7<double>(), testing::uniform_behavior<double>(), kCanonicalProfiles[0]);
    FAIL() << "expected ZeroConstraintViolated";
  } catch (const ZeroConstraintViolated& e) {
    EXPECT_EQ(e.details().size(), 37u);
    EXPECT_EQ(e.details().front(), "p9");
  }
}

}  // namespace
}  // namespace eprgame
