// Copyright 2026 The mbco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "fock_reference.hpp"
#include "mbco/block_hamiltonian.hpp"
#include "mbco/errors.hpp"
#include "mbco/momenta.hpp"

namespace mbco {
namespace {

Eigen::VectorXd spectrum_of(const Eigen::MatrixXcd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues();
}

TEST(Block6, CornerEntries) {
  const Block6 h = build_block6(0.3, 1.2, 0.4, 2.5);
  EXPECT_DOUBLE_EQ(h(0, 0).real(), 10.0);
  EXPECT_DOUBLE_EQ(h(5, 5).real(), -10.0);
}

TEST(Block6, HermitianForRandomInputs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double k = (0.01 + 0.98 * u(rng)) * std::numbers::pi / 2;
    const Block6 h = build_block6(k, 3.0 * u(rng), u(rng), 5.0 * u(rng));
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Block6, ZeroStaggeringDecouplesOddPair) {
  const Block6 h = build_block6(0.5, 1.0, 0.0, 0.7);
  for (int outer : {0, 1, 4, 5}) {
    for (int inner : {2, 3}) {
      EXPECT_EQ(std::abs(h(outer, inner)), 0.0);
      EXPECT_EQ(std::abs(h(inner, outer)), 0.0);
    }
  }
}

TEST(Block6, RejectsMomentumOutsideQuarterZone) {
  EXPECT_THROW(build_block6(0.0, 1.0, 0.0, 1.0), ConfigError);
  EXPECT_THROW(build_block6(std::numbers::pi / 2, 1.0, 0.0, 1.0), ConfigError);
}

// Independent second-quantized evaluation of the quadratic ring Hamiltonian.
// The block basis phases are a convention, so spectra are compared.
TEST(Block6, MatchesFockSpaceReference) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {8, 12, 16, 40}) {
    for (double k : allowed_momenta(n)) {
      const double j = 0.2 + 2.0 * u(rng);
      const double d = u(rng) * j;
      const double h = 3.0 * u(rng);
      const auto ref = testing::fock_block(n, j, d, h, k);
      EXPECT_LT(ref.leakage, 1e-12) << "n=" << n << " k=" << k;
      const Eigen::VectorXd want = spectrum_of(ref.projected);
      const Eigen::VectorXd got = spectrum_of(build_block6(k, j, d, h));
      EXPECT_LT((want - got).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Block6, MatchesFockReferenceElementwise) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {8, 24}) {
    for (double k : allowed_momenta(n)) {
      const double j = 0.5 + u(rng), d = 0.5 * u(rng), h = 2.0 * u(rng);
      const auto ref = testing::fock_block(n, j, d, h, k);
      EXPECT_LT((ref.projected - Eigen::MatrixXcd(build_block6(k, j, d, h))).cwiseAbs().maxCoeff(),
                1e-12);
    }
  }
}

TEST(Block8, ZeroBackscatterIsBlockDiagonal) {
  const Block8 h = build_block8(0.4, 1.0, 0.3, 0.9, Complex(0.0, 0.0));
  EXPECT_LT((h.topLeftCorner<6, 6>() - build_block6(0.4, 1.0, 0.3, 0.9)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ((h.topRightCorner<6, 2>().cwiseAbs().maxCoeff()), 0.0);
  EXPECT_EQ((h.bottomRightCorner<2, 2>().cwiseAbs().maxCoeff()), 0.0);
}

TEST(Block8, HermitianWithBackscatter) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const Block8 h = build_block8(0.2 + 0.5 * std::abs(u(rng)), 1.0, 0.3, 2.0,
                                  Complex(u(rng), u(rng)));
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Block8, MatchesFockReferenceWithBackscatter) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double k : allowed_momenta(16)) {
    const double j = 1.0 + 0.5 * u(rng), d = 0.2 + 0.1 * u(rng), h = 1.0 + u(rng);
    const Complex b(0.3 * u(rng), 0.3 * u(rng));
    const auto ref = testing::fock_block(16, j, d, h, k, 8, b);
    EXPECT_LT(ref.leakage, 1e-12);
    EXPECT_LT((ref.projected - Eigen::MatrixXcd(build_block8(k, j, d, h, b))).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Block8, BackscatterOnlyTouchesSingleOccupancyStates) {
  const Block8 h = build_block8(0.4, 0.0, 0.0, 0.0, Complex(0.3, -0.2));
  // |1111>, |1100>, |0011>, |0000> carry no one-body hopping matrix elements.
  for (int r : {0, 1, 4, 5}) {
    for (int c = 0; c < 8; ++c) {
      EXPECT_EQ(std::abs(h(r, c)), 0.0);
    }
  }
  // Each hopping term moves a single fermion: the 4 coupled states form a ring.
  EXPECT_NEAR(std::abs(h(6, 3)), 2.0 * std::abs(Complex(0.3, -0.2)), 1e-15);
  EXPECT_NEAR(std::abs(h(2, 7)), 2.0 * std::abs(Complex(0.3, -0.2)), 1e-15);
}

}  // namespace
}  // namespace mbco
