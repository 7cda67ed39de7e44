#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eprgame/errors.hpp"
#include "eprgame/quantum.hpp"
#include "test_support.hpp"

namespace eprgame {
namespace {

using testing::Rng;

constexpr Direction kZ{0, 0, 1};
constexpr Direction kX{1, 0, 0};
constexpr Direction kY{0, 1, 0};

// Signs of outcome o as (Alice, Bob, Chris).
std::array<int, 3> outcome_signs(std::size_t o) {
  return {kCanonicalOutcomes[o].alice, kCanonicalOutcomes[o].bob, kCanonicalOutcomes[o].chris};
}

// Independent evaluation: builds the 8x8 tensor projector explicitly.
double born_oracle(const StateVector& psi, const MeasurementSetup& setup, PureProfile ctx,
                   const std::array<int, 3>& signs) {
  const Projector pa = spin_projector(setup.direction(Player::kAlice, ctx.alice), signs[0]);
  const Projector pb = spin_projector(setup.direction(Player::kBob, ctx.bob), signs[1]);
  const Projector pc = spin_projector(setup.direction(Player::kChris, ctx.chris), signs[2]);
  DensityMatrix big;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      big(r, c) = pa(r >> 2, c >> 2) * pb((r >> 1) & 1, (c >> 1) & 1) * pc(r & 1, c & 1);
    }
  }
  return (psi.adjoint() * big * psi)(0, 0).real();
}

MeasurementSetup two_axis_setup(const Direction& first, const Direction& second) {
  MeasurementSetup s;
  for (auto& pair : s.directions) pair = {first, second};
  return s;
}

TEST(GhzState, AmplitudesAndValidity) {
  const auto ghz = ghz_state();
  ASSERT_TRUE(ghz.is_pure());
  const auto& psi = std::get<StateVector>(ghz.value);
  EXPECT_NEAR(psi(0).real(), 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(psi(7).real(), 1 / std::numbers::sqrt2, 1e-15);
  for (int i = 1; i < 7; ++i) EXPECT_EQ(psi(i), Complex(0, 0));
  EXPECT_TRUE(validate_state(ghz).pass);
}

TEST(BornProbabilities, GhzAlongZ) {
  const auto p = born_joint_probabilities(ghz_state(), uniform_setup(kZ));
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    for (std::size_t o = 0; o < kOutcomeCount; ++o) {
      const auto s = outcome_signs(o);
      const bool aligned = s[0] == s[1] && s[1] == s[2];
      EXPECT_NEAR(p.at(ctx, o), aligned ? 0.5 : 0.0, 1e-12);
    }
  }
}

TEST(BornProbabilities, GhzAlongXIsParityWeighted) {
  const auto p = born_joint_probabilities(ghz_state(), uniform_setup(kX));
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    for (std::size_t o = 0; o < kOutcomeCount; ++o) {
      const auto s = outcome_signs(o);
      EXPECT_NEAR(p.at(ctx, o), (1.0 + s[0] * s[1] * s[2]) / 8, 1e-12);
    }
  }
}

TEST(BornProbabilities, GhzMarginalsAreFair) {
  Rng rng(60);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = born_joint_probabilities(ghz_state(), testing::random_setup(rng));
    const auto m = compute_marginals(p);
    for (Player player : kPlayers) {
      for (Setting setting : {Setting::kFirst, Setting::kSecond}) {
        EXPECT_NEAR(m.plus(player, setting), 0.5, 1e-12);
      }
    }
  }
}

TEST(BornProbabilities, RandomStatesAreNoSignalingBehaviors) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector psi = testing::random_pure_state(rng);
    const auto setup = testing::random_setup(rng);
    const auto p = born_joint_probabilities(TripartiteState{psi}, setup);
    EXPECT_TRUE(check_normalization(p, 1e-10).pass);
    EXPECT_TRUE(check_no_signaling(p, 1e-10).pass);
    for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
      for (std::size_t o = 0; o < kOutcomeCount; ++o) {
        EXPECT_NEAR(p.at(ctx, o), born_oracle(psi, setup, kCanonicalProfiles[ctx], outcome_signs(o)), 1e-12);
      }
    }
  }
}

TEST(BornProbabilities, PureAndDensityAgree) {
  Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi = testing::random_pure_state(rng);
    const auto setup = testing::random_setup(rng);
    const auto pure = born_joint_probabilities(TripartiteState{psi}, setup);
    const auto mixed = born_joint_probabilities(TripartiteState{density_from_pure(psi)}, setup);
    for (std::size_t i = 1; i <= kEntryCount; ++i) EXPECT_NEAR(pure.p(i), mixed.p(i), 1e-12);
  }
}

TEST(BornProbabilities, MaximallyMixedStateIsUniform) {
  const TripartiteState mixed{DensityMatrix(DensityMatrix::Identity() / 8.0)};
  EXPECT_TRUE(validate_state(mixed).pass);
  Rng rng(63);
  const auto p = born_joint_probabilities(mixed, testing::random_setup(rng));
  for (std::size_t i = 1; i <= kEntryCount; ++i) EXPECT_NEAR(p.p(i), 0.125, 1e-12);
}

TEST(BornProbabilities, ProductStateIsFactorizable) {
  StateVector zero = StateVector::Zero();
  zero(0) = 1;
  Rng rng(64);
  const auto setup = testing::random_setup(rng);
  const auto p = born_joint_probabilities(TripartiteState{zero}, setup);
  const auto cert = factorizability_certificate(p, 1e-9, 1e-10);
  EXPECT_EQ(cert.verdict, Verdict::kFactorizable);
  // |0> gives +1 along n with probability (1 + n_z) / 2.
  const auto m = compute_marginals(p);
  for (Player player : kPlayers) {
    for (Setting setting : {Setting::kFirst, Setting::kSecond}) {
      EXPECT_NEAR(m.plus(player, setting), (1 + setup.direction(player, setting)[2]) / 2, 1e-12);
    }
  }
}

TEST(BornProbabilities, GhzWithTwoAxesIsNonFactorizable) {
  const auto p = born_joint_probabilities(ghz_state(), two_axis_setup(kX, kY));
  EXPECT_EQ(factorizability_certificate(p, 1e-9, 1e-10).verdict, Verdict::kNonFactorizable);
}

TEST(ValidateState, RejectsUnnormalizedVector) {
  StateVector ones = StateVector::Constant(Complex(1, 0));
  const auto report = validate_state(TripartiteState{ones});
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.norm_residual, 7.0, 1e-12);
  EXPECT_THROW(born_joint_probabilities(TripartiteState{ones}, uniform_setup(kZ)), InvalidState);
}

TEST(ValidateState, RejectsBadDensityOperators) {
  DensityMatrix half = DensityMatrix::Identity() / 16.0;
  EXPECT_FALSE(validate_state(TripartiteState{half}).pass);

  DensityMatrix skew = DensityMatrix::Identity() / 8.0;
  skew(0, 1) = Complex(0.01, 0);
  EXPECT_GT(validate_state(TripartiteState{skew}).hermiticity_residual, 0.009);
  EXPECT_FALSE(validate_state(TripartiteState{skew}).pass);

  DensityMatrix negative = DensityMatrix::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  const auto report = validate_state(TripartiteState{negative});
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.min_eigenvalue, -0.5, 1e-12);
  EXPECT_THROW(born_joint_probabilities(TripartiteState{negative}, uniform_setup(kZ)), InvalidState);
}

TEST(ValidateSetup, RejectsNonUnitDirections) {
  MeasurementSetup setup = uniform_setup(kZ);
  EXPECT_NO_THROW(validate_setup(setup));
  setup.directions[1][0] = {0, 0, 1.001};
  EXPECT_THROW(validate_setup(setup), InvalidSetup);
  EXPECT_THROW(born_joint_probabilities(ghz_state(), setup), InvalidSetup);
  setup.directions[1][0] = {0, 0, 0};
  EXPECT_THROW(validate_setup(setup), InvalidSetup);
}

TEST(SpinProjector, IdempotentHermitianComplementary) {
  Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const Direction n = testing::random_direction(rng);
    const Projector plus = spin_projector(n, 1);
    const Projector minus = spin_projector(n, -1);
    EXPECT_LT((plus * plus - plus).norm(), 1e-12);
    EXPECT_LT((plus.adjoint() - plus).norm(), 1e-12);
    EXPECT_LT((plus + minus - Projector::Identity()).norm(), 1e-12);
    EXPECT_NEAR(plus.trace().real(), 1.0, 1e-12);
  }
}

TEST(DirectionFromAngles, MatchesAxes) {
  const auto z = direction_from_angles(0, 0);
  const auto x = direction_from_angles(std::numbers::pi / 2, 0);
  const auto y = direction_from_angles(std::numbers::pi / 2, std::numbers::pi / 2);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(z[i], kZ[i], 1e-15);
    EXPECT_NEAR(x[i], kX[i], 1e-15);
    EXPECT_NEAR(y[i], kY[i], 1e-15);
  }
}

}  // namespace
}  // namespace eprgame
