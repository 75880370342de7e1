// Copyright 2026 The PulseForge Authors
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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "pulseforge/fitness.hpp"
#include "pulseforge/pauli.hpp"
#include "pulseforge/rotation.hpp"
#include "pulseforge/targets.hpp"
#include "test_util.hpp"

using namespace pulseforge;
using pftest::to_matrix;
using L = PauliLetter;

namespace {

constexpr double kTol = 1e-12;

}  // namespace

TEST(PauliWordMatrix, FlippedSigmaZIsDiagMinusOnePlusOne) {
  const auto m = pauli_word_matrix({L::Z}, SigmaZVariant::flipped);
  EXPECT_EQ(m, ComplexMatrix::diagonal({-1.0, 1.0}));
  EXPECT_EQ(pauli_word_matrix({L::Z}, SigmaZVariant::standard),
            ComplexMatrix::diagonal({1.0, -1.0}));
}

TEST(PauliWordMatrix, IdentityWord) {
  EXPECT_EQ(pauli_word_matrix({L::I, L::I}, SigmaZVariant::flipped),
            ComplexMatrix::identity(4));
}

TEST(PauliWordMatrix, ZZFlippedVariant) {
  EXPECT_EQ(pauli_word_matrix({L::Z, L::Z}, SigmaZVariant::flipped),
            ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0}));
}

TEST(PauliWordMatrix, EmptyWordIsAnError) {
  EXPECT_THROW(pauli_word_matrix(PauliWord{}, SigmaZVariant::flipped), InvalidArgument);
}

TEST(PauliWordMatrix, MatchesEntryFormulaAndSquaresToIdentity) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t words = std::size_t{1} << (2 * n);
    for (std::size_t w = 0; w < words; ++w) {
      std::vector<L> ls(n);
      for (std::size_t k = 0; k < n; ++k) ls[k] = static_cast<L>((w >> (2 * k)) & 3);
      const PauliWord word(ls);
      for (auto v : {SigmaZVariant::flipped, SigmaZVariant::standard}) {
        const auto m = pauli_word_matrix(word, v);
        const double zsign = v == SigmaZVariant::flipped ? -1.0 : 1.0;
        EXPECT_LE(max_abs_diff(m, to_matrix(oracle::pauli(pftest::letters(word), zsign))),
                  kTol);
        EXPECT_LE(max_abs_diff(m * m, ComplexMatrix::identity(m.dim())), kTol);
        EXPECT_LE(max_abs_diff(m, m.adjoint()), kTol);
      }
    }
  }
}

TEST(RotationMatrix, ZeroAngleIsIdentity) {
  for (const auto& conv : all_conventions()) {
    EXPECT_LE(max_abs_diff(rotation_matrix(Rotation({L::X, L::Z}, 0.0), conv),
                           ComplexMatrix::identity(4)),
              kTol);
  }
}

TEST(RotationMatrix, FullTurnIsMinusIdentity) {
  for (const auto& conv : all_conventions()) {
    EXPECT_LE(max_abs_diff(rotation_matrix(PauliWord{L::Y, L::I}, 360.0, conv),
                           ComplexMatrix::identity(4) * Complex(-1.0)),
              kTol);
  }
  // The stored Rotation wraps 360 to 0.
  EXPECT_EQ(Rotation({L::X}, 360.0).angle_deg(), 0.0);
}

TEST(RotationMatrix, XHalfTurnIsMinusISigmaX) {
  const Convention minus{ExponentSign::minus, SigmaZVariant::standard,
                         ProductOrder::as_listed};
  const auto r = rotation_matrix(Rotation({L::X}, 180.0), minus);
  const ComplexMatrix expected{{0.0, Complex(0, -1)}, {Complex(0, -1), 0.0}};
  EXPECT_LE(max_abs_diff(r, expected), kTol);
  const ComplexMatrix not_gate{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_LE(fitness(r, not_gate, FitnessMode::phase_invariant), kTol);
}

TEST(RotationMatrix, AgreesWithOracleForBothSigns) {
  for (auto sign : {ExponentSign::minus, ExponentSign::plus}) {
    const Convention conv{sign, SigmaZVariant::flipped, ProductOrder::as_listed};
    const auto r = rotation_matrix(Rotation({L::X, L::Z}, 90.0), conv);
    const auto o = oracle::rotation("XZ", 90.0, sign == ExponentSign::minus ? -1.0 : 1.0, -1.0);
    EXPECT_LE(max_abs_diff(r, to_matrix(o)), kTol);
  }
}

TEST(SequenceProduct, EmptyIsIdentity) {
  EXPECT_EQ(sequence_product(PulseSequence(2), Convention{}), ComplexMatrix::identity(4));
}

TEST(SequenceProduct, SameAxisAnglesAdd) {
  PulseSequence seq(1, {Rotation({L::X}, 90.0), Rotation({L::X}, 90.0)});
  for (const auto& conv : all_conventions()) {
    EXPECT_LE(max_abs_diff(sequence_product(seq, conv),
                           rotation_matrix(Rotation({L::X}, 180.0), conv)),
              kTol);
  }
}

TEST(SequenceProduct, OrderFollowsConvention) {
  PulseSequence seq(1, {Rotation({L::X}, 90.0), Rotation({L::Z}, 90.0)});
  const Convention as_listed{ExponentSign::minus, SigmaZVariant::standard,
                             ProductOrder::as_listed};
  Convention reversed = as_listed;
  reversed.product_order = ProductOrder::reversed;
  const auto rx = rotation_matrix(seq[0], as_listed);
  const auto rz = rotation_matrix(seq[1], as_listed);
  EXPECT_LE(max_abs_diff(sequence_product(seq, as_listed), rx * rz), kTol);
  EXPECT_LE(max_abs_diff(sequence_product(seq, reversed), rz * rx), kTol);
  EXPECT_GT(max_abs_diff(rx * rz, rz * rx), 0.1);
}

TEST(SequenceProduct, MixedQubitCountsAreRejected) {
  PulseSequence seq(2);
  EXPECT_THROW(seq.push_back(Rotation({L::X}, 90.0)), DimensionError);
  EXPECT_THROW(sequence_product(2, {Rotation({L::X, L::I}, 1.0), Rotation({L::X}, 1.0)},
                                Convention{}),
               DimensionError);
}

TEST(Fitness, IdenticalMatricesScoreZero) {
  const auto u = rotation_matrix(Rotation({L::X, L::Y}, 37.0), Convention{});
  EXPECT_EQ(fitness(u, u, FitnessMode::frobenius), 0.0);
  EXPECT_LE(fitness(u, u, FitnessMode::phase_invariant), kTol);
}

TEST(Fitness, GlobalPhaseIsInvisibleInPhaseMode) {
  for (double phi : {0.3, 1.0, 2.5, -3.0}) {
    const auto u = ComplexMatrix::identity(4) * std::polar(1.0, phi);
    EXPECT_LE(fitness(u, ComplexMatrix::identity(4), FitnessMode::phase_invariant), kTol);
    EXPECT_GT(fitness(u, ComplexMatrix::identity(4), FitnessMode::frobenius), 0.1);
  }
}

TEST(Fitness, IdentityVersusCnot) {
  // Oracle: brute-force trace and entry differences.
  const auto cnot = oracle::cnot(2, 0, 1);
  const auto id = oracle::identity(4);
  const double phase_ref = oracle::phase_fitness(id, cnot);
  const double frob_ref = oracle::frobenius(id, cnot);
  ASSERT_NEAR(phase_ref, 0.5, kTol);
  ASSERT_NEAR(frob_ref, 2.0, kTol);
  EXPECT_NEAR(fitness(ComplexMatrix::identity(4), cnot_matrix(2, 0, 1),
                      FitnessMode::phase_invariant),
              0.5, kTol);
  EXPECT_NEAR(fitness(ComplexMatrix::identity(4), cnot_matrix(2, 0, 1),
                      FitnessMode::frobenius),
              2.0, kTol);
}

TEST(Fitness, DimensionMismatchIsAnError) {
  EXPECT_THROW(fitness(ComplexMatrix::identity(2), ComplexMatrix::identity(4),
                       FitnessMode::phase_invariant),
               DimensionError);
}

TEST(Fitness, OptimalPhaseAlignsExactly) {
  const auto t = cnot_matrix(2, 0, 1);
  const auto u = t * std::polar(1.0, 0.7);
  EXPECT_NEAR(optimal_phase(u, t), 0.7, kTol);
  EXPECT_LE(aligned_residual(u, t), kTol);
}

// Property suite over random rotations.
class RandomRotations : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomRotations, UnitaryAdditiveAndBounded) {
  const std::size_t n = GetParam();
  std::mt19937_64 gen(1234 + n);
  std::uniform_real_distribution<double> angle(0.0, 720.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliWord word = pftest::random_word(gen, n);
    const Convention conv = Convention::from_index(gen() % 8);
    const double a = angle(gen), b = angle(gen);
    const auto ra = rotation_matrix(word, a, conv);
    const auto rb = rotation_matrix(word, b, conv);
    EXPECT_LE(ra.unitarity_deviation(), kTol);

    // R(a) R(b) = cos((a+b)/2) I -/+ i sin((a+b)/2) S
    const double h = (a + b) * std::numbers::pi / 360.0;
    const double s = conv.exponent_sign == ExponentSign::minus ? -1.0 : 1.0;
    ComplexMatrix expect = pauli_word_matrix(word, conv.sigma_z) * Complex(0, s * std::sin(h));
    for (std::size_t i = 0; i < expect.dim(); ++i) expect(i, i) += std::cos(h);
    EXPECT_LE(max_abs_diff(ra * rb, expect), kTol);

    const auto target = rotation_matrix(pftest::random_word(gen, n), angle(gen), conv);
    const double f_phase = fitness(ra, target, FitnessMode::phase_invariant);
    const double f_frob = fitness(ra, target, FitnessMode::frobenius);
    EXPECT_GE(f_phase, 0.0);
    EXPECT_LE(f_phase, 1.0);
    EXPECT_GE(f_frob, 0.0);
    EXPECT_LE(f_frob, 2.0 * std::sqrt(static_cast<double>(ra.dim())) + kTol);
    for (int k = 0; k < 8; ++k) {
      const Complex z = std::polar(1.0, angle(gen));
      EXPECT_NEAR(fitness(ra * z, target, FitnessMode::phase_invariant), f_phase, kTol);
      EXPECT_NEAR(fitness(ra, target * z, FitnessMode::phase_invariant), f_phase, kTol);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Qubits, RandomRotations, ::testing::Values(1, 2, 3));
