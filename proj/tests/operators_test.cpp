// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/operators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle/dense_walk.hpp"
#include "qwalk/verification.hpp"

namespace qwalk {
namespace {

using enum CoinFace;

const double kQ = 1.0 / (2.0 * std::sqrt(2.0));

void expect_state_near(const PureState& actual,
                       const std::vector<PureState::Entry>& expected,
                       double tol) {
  // Compared over the union of supports: cos and sin of pi/4 differ in the
  // last bit, so cancelled branches can leave residuals near 1e-17.
  const PureState want(expected, actual.step_count());
  for (const auto& [label, amp] : want) {
    EXPECT_NEAR(std::abs(actual.amplitude(label) - amp), 0.0, tol)
        << "at (" << label.x1 << "," << label.x2 << ")";
  }
  for (const auto& [label, amp] : actual) {
    EXPECT_NEAR(std::abs(want.amplitude(label) - amp), 0.0, tol)
        << "unexpected support at (" << label.x1 << "," << label.x2 << ")";
  }
}

TEST(CoinMatrixTest, IsRealSymmetricUnitary) {
  for (const CoinAngle& a : verification_angles()) {
    const CoinMatrix c = coin_matrix(a);
    EXPECT_DOUBLE_EQ(c(0, 0), std::cos(a.radians()));
    EXPECT_DOUBLE_EQ(c(0, 1), std::sin(a.radians()));
    EXPECT_DOUBLE_EQ(c(1, 0), std::sin(a.radians()));
    EXPECT_DOUBLE_EQ(c(1, 1), -std::cos(a.radians()));
    EXPECT_TRUE((c * c.transpose()).isIdentity(1e-15));
  }
}

TEST(ApplyStepTest, AntisymmetricCoinStateAfterTwoSteps) {
  const PureState s =
      apply_n_steps(build_initial(BellType::PsiMinus), CoinAngle::pi_fraction(1, 4), 2);
  EXPECT_EQ(s.step_count(), 2);
  expect_state_near(s,
                    {{{Up, Up, 0, 2}, kQ},
                     {{Up, Up, 2, 0}, -kQ},
                     {{Up, Down, 2, -2}, kQ},
                     {{Up, Down, 0, 0}, kQ},
                     {{Down, Up, 0, 0}, -kQ},
                     {{Down, Up, -2, 2}, -kQ},
                     {{Down, Down, 0, -2}, kQ},
                     {{Down, Down, -2, 0}, -kQ}},
                    1e-12);
}

TEST(ApplyStepTest, SymmetricCoinStateAfterTwoSteps) {
  const PureState s =
      apply_n_steps(build_initial(BellType::PsiPlus), CoinAngle::pi_fraction(1, 4), 2);
  expect_state_near(s,
                    {{{Up, Up, 2, 2}, kQ},
                     {{Up, Up, 0, 0}, -kQ},
                     {{Up, Down, 2, 0}, kQ},
                     {{Up, Down, 0, -2}, kQ},
                     {{Down, Up, 0, 2}, kQ},
                     {{Down, Up, -2, 0}, kQ},
                     {{Down, Down, 0, 0}, kQ},
                     {{Down, Down, -2, -2}, -kQ}},
                    1e-12);
}

TEST(ApplyStepTest, DiagonalCoinOnPhiPlus) {
  // C(0) = diag(1, -1): the Down-Down branch picks up (-1)^2 = +1.
  const double h = 1.0 / std::sqrt(2.0);
  const PureState s =
      apply_step(build_initial(BellType::PhiPlus), CoinAngle::pi_fraction(0, 1));
  expect_state_near(s, {{{Up, Up, 1, 1}, h}, {{Down, Down, -1, -1}, h}}, 0.0);
}

TEST(ApplyStepTest, MatchesDenseOperatorOnBellStates) {
  const int radius = 4;
  for (const CoinAngle& angle : verification_angles()) {
    const Eigen::MatrixXd u = oracle::evolution_operator(angle.radians(), radius);
    for (BellType bell : kAllBellTypes) {
      PureState sparse = build_initial(bell);
      Eigen::VectorXcd dense = oracle::to_oracle_vector(sparse, radius);
      for (int n = 1; n <= 4; ++n) {
        sparse = apply_step(sparse, angle);
        dense = u * dense;
        EXPECT_LT(oracle::max_deviation(sparse, dense, radius), 1e-12)
            << to_string(bell) << " " << angle.to_string() << " n=" << n;
      }
    }
  }
}

TEST(ApplyStepTest, MatchesDenseOperatorOnRandomStates) {
  std::mt19937_64 rng(2024);
  const int radius = 5;
  const Eigen::MatrixXd u = oracle::evolution_operator(0.7, radius);
  const CoinAngle angle = CoinAngle::from_radians(0.7);
  for (int trial = 0; trial < 30; ++trial) {
    const PureState s = random_pure_state(rng, 12, 3);
    const PureState next = apply_step(s, angle);
    EXPECT_LT(oracle::max_deviation(next, u * oracle::to_oracle_vector(s, radius),
                                    radius),
              1e-12);
  }
}

TEST(ApplyStepTest, PreservesNorm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    PureState s = random_pure_state(rng, 16, 4);
    for (int n = 0; n < 10; ++n) s = apply_step(s, CoinAngle::pi_fraction(2, 9));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(ApplyStepTest, CommutesWithGlobalPhase) {
  std::mt19937_64 rng(9);
  const Complex phase = std::polar(1.0, 0.913);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState s = random_pure_state(rng, 8, 3);
    const PureState a = apply_step(s.scaled(phase), CoinAngle::pi_fraction(1, 3));
    const PureState b = apply_step(s, CoinAngle::pi_fraction(1, 3)).scaled(phase);
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [label, amp] : a) {
      EXPECT_NEAR(std::abs(amp - b.amplitude(label)), 0.0, 1e-14);
    }
  }
}

TEST(ApplyStepTest, StepCountsAndValidation) {
  const PureState s0 = build_initial(BellType::PsiPlus);
  EXPECT_EQ(apply_n_steps(s0, CoinAngle::pi_fraction(1, 4), 0), s0);
  EXPECT_EQ(apply_n_steps(s0, CoinAngle::pi_fraction(1, 4), 5).step_count(), 5);
  EXPECT_THROW(apply_n_steps(s0, CoinAngle::pi_fraction(1, 4), -1),
               std::invalid_argument);
}

TEST(ApplyStepTest, SupportGrowsByOneSitePerStep) {
  PureState s = build_initial(BellType::PhiMinus);
  for (int n = 1; n <= 8; ++n) {
    s = apply_step(s, CoinAngle::pi_fraction(1, 6));
    for (const auto& [label, amp] : s) {
      EXPECT_LE(std::abs(label.x1), n);
      EXPECT_LE(std::abs(label.x2), n);
      EXPECT_EQ((label.x1 + n) % 2, 0);
    }
  }
}

}  // namespace
}  // namespace qwalk
