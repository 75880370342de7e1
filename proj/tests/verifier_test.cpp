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

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "pulseforge/chromosome.hpp"
#include "pulseforge/verifier.hpp"
#include "test_util.hpp"

using namespace pulseforge;
using pftest::to_matrix;

namespace {

// Reference rows in oracle notation (one letter per qubit).
const std::vector<oracle::Pulse> kCnotRow1{{"IZ", 270}, {"XZ", 90}, {"XI", 90}};
const std::vector<oracle::Pulse> kCnotRow2{{"XI", 90}, {"IZ", 270}, {"XZ", 90}};
const std::vector<oracle::Pulse> kShorRow1{
    {"XII", 90}, {"IIX", 250}, {"XIX", 160}, {"IZX", 90}, {"XZI", 260}};
const std::vector<oracle::Pulse> kShorRow2{
    {"XZI", 80}, {"XII", 80}, {"IZX", 110}, {"IIX", 105}, {"IZI", 190}};

/// min over the 8 conventions of the oracle's phase fitness.
double oracle_best(const std::vector<oracle::Pulse>& seq, std::size_t n,
                   const oracle::Dense& target) {
  double best = 1e9;
  for (double sign : {-1.0, 1.0})
    for (double z : {-1.0, 1.0})
      for (bool rev : {false, true})
        best = std::min(best, oracle::phase_fitness(oracle::product(seq, n, sign, z, rev), target));
  return best;
}

}  // namespace

TEST(VerifySequence, EmptySequenceAgainstIdentity) {
  const TargetGate id{"id", 2, ComplexMatrix::identity(4)};
  const auto r = verify_sequence(PulseSequence(2), id, 1e-6, Convention{});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.fitness_phase_invariant, 0.0);
  EXPECT_EQ(r.fitness_frobenius, 0.0);
  EXPECT_EQ(r.aligned_residual, 0.0);
}

TEST(VerifySequence, SingleXPulseIsNotCnot) {
  const PulseSequence seq(2, {Rotation(parse_word("xA", 2), 90)});
  const auto r = verify_sequence(seq, cnot_target(), 1e-6, Convention::replication_default());
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.fitness_phase_invariant, 0.1);
  // 1 - |2 cos 45deg| / 4
  EXPECT_NEAR(r.fitness_phase_invariant, 1.0 - std::sqrt(2.0) / 4.0, 1e-12);
}

TEST(VerifySequence, ReferenceThreePulseRowsRealizeCnotWithControlB) {
  const auto pubs = reference_sequences();
  const TargetGate cnot_ba{"cnot_ba", 2, cnot_matrix(2, 1, 0)};
  for (int k = 0; k < 2; ++k) {
    const auto& seq = pubs[k].sequence;
    for (auto sign : {ExponentSign::minus, ExponentSign::plus})
      for (auto order : {ProductOrder::as_listed, ProductOrder::reversed}) {
        const Convention flipped{sign, SigmaZVariant::flipped, order};
        EXPECT_TRUE(verify_sequence(seq, cnot_ba, kStrictTier, flipped).pass);
        EXPECT_LE(verify_sequence(seq, cnot_ba, kStrictTier, flipped).aligned_residual, 1e-12);
        Convention standard = flipped;
        standard.sigma_z = SigmaZVariant::standard;
        EXPECT_NEAR(verify_sequence(seq, cnot_ba, kStrictTier, standard).fitness_phase_invariant,
                    1.0, 1e-12);
      }
  }
}

TEST(VerifySequence, ReferenceThreePulseRowsMissControlACnot) {
  // Against the control-A CNOT every convention lands at 0.75.
  const auto pubs = reference_sequences();
  for (int k = 0; k < 2; ++k) {
    const auto& oracle_seq = k == 0 ? kCnotRow1 : kCnotRow2;
    const double ref = oracle_best(oracle_seq, 2, oracle::cnot(2, 0, 1));
    ASSERT_NEAR(ref, 0.75, 1e-12);
    for (const auto& conv : all_conventions()) {
      const auto r = verify_sequence(pubs[k].sequence, cnot_target(), kStrictTier, conv);
      EXPECT_NEAR(r.fitness_phase_invariant, 0.75, 1e-12);
      EXPECT_FALSE(r.pass);
    }
  }
}

TEST(VerifySequence, FrobeniusZeroImpliesPhaseZero) {
  const auto cnot = cnot_target();
  const PulseSequence seq(2);
  const TargetGate id{"id", 2, ComplexMatrix::identity(4)};
  const auto r = verify_sequence(seq, id, 0.0, Convention{}, FitnessMode::frobenius);
  EXPECT_EQ(r.fitness_frobenius, 0.0);
  EXPECT_EQ(r.fitness_phase_invariant, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(VerifySequence, IsPureAndRejectsMismatchedDims) {
  const auto pubs = reference_sequences();
  const auto a = verify_sequence(pubs[2].sequence, shor15_target(), 0.02, Convention{});
  const auto b = verify_sequence(pubs[2].sequence, shor15_target(), 0.02, Convention{});
  EXPECT_EQ(a.fitness_phase_invariant, b.fitness_phase_invariant);
  EXPECT_EQ(a.fitness_frobenius, b.fitness_frobenius);
  EXPECT_EQ(a.optimal_phase, b.optimal_phase);
  EXPECT_THROW(verify_sequence(pubs[0].sequence, shor15_target(), 0.02, Convention{}),
               DimensionError);
}

TEST(ConventionSweep, IdentitySequenceTiesAndPicksFirst) {
  const PulseSequence seq(2, {Rotation(parse_word("id", 2), 90)});
  const auto s = convention_sweep(seq, cnot_target());
  EXPECT_EQ(s.convention.index(), 0u);
  for (double f : s.per_convention) EXPECT_EQ(f, s.per_convention.front());
}

TEST(ConventionSweep, MinimumBoundsEveryConvention) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto seq = decode_chromosome(random_chromosome(rng, {2, 3}));
    const auto s = convention_sweep(seq, cnot_target());
    for (const auto& conv : all_conventions()) {
      EXPECT_LE(s.fitness,
                verify_sequence(seq, cnot_target(), 0.0, conv).fitness_phase_invariant);
    }
    EXPECT_EQ(s.fitness, s.per_convention[s.convention.index()]);
  }
}

TEST(PermuteQubits, SwapTurnsControlAIntoControlB) {
  EXPECT_EQ(permute_qubits(cnot_matrix(2, 0, 1), {1, 0}), cnot_matrix(2, 1, 0));
  EXPECT_EQ(permute_qubits(shor15_core_matrix(), {0, 1, 2}), shor15_core_matrix());
  EXPECT_EQ(permute_qubits(shor15_core_matrix(), {0, 2, 1}), shor15_core_matrix());
  EXPECT_EQ(permute_qubits(cnot_matrix(3, 0, 1), {1, 0, 2}), cnot_matrix(3, 1, 0));
}

TEST(ReplicateReferenceSequences, ReportMatchesIndependentOracle) {
  const auto report = replicate_reference_sequences();
  ASSERT_EQ(report.rows.size(), 4u);
  ASSERT_EQ(report.groups.size(), 2u);

  const auto shor = oracle::mul(oracle::cnot(3, 0, 1), oracle::cnot(3, 0, 2));
  const double expected[4] = {oracle_best(kCnotRow1, 2, oracle::cnot(2, 0, 1)),
                              oracle_best(kCnotRow2, 2, oracle::cnot(2, 0, 1)),
                              oracle_best(kShorRow1, 3, shor),
                              oracle_best(kShorRow2, 3, shor)};
  // Values also confirmed with an external numpy evaluation.
  EXPECT_NEAR(expected[0], 0.75, 1e-12);
  EXPECT_NEAR(expected[2], 0.758286899799457, 1e-9);
  EXPECT_NEAR(expected[3], 0.737372, 1e-6);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(report.rows[k].fitness_phase_invariant, expected[k], 1e-12);
    EXPECT_EQ(report.rows[k].group, k < 2 ? "cnot" : "shor15");
    EXPECT_EQ(report.rows[k].row, k % 2 + 1);
    EXPECT_EQ(report.rows[k].tolerance, k < 2 ? kStrictTier : kRoundingTier);
    EXPECT_EQ(report.rows[k].pass,
              report.rows[k].fitness_phase_invariant <= report.rows[k].tolerance);
  }
  EXPECT_FALSE(report.all_pass);
  EXPECT_EQ(report.groups[0].worst_fitness, std::max(report.rows[0].fitness_phase_invariant,
                                                     report.rows[1].fitness_phase_invariant));
}

TEST(ReplicateReferenceSequences, RelabelingDiagnostic) {
  const auto report = replicate_reference_sequences();
  // Exchanging qubits A and B makes both three-pulse rows exact.
  for (int k = 0; k < 2; ++k) {
    EXPECT_EQ(format_permutation(report.rows[k].relabeled.permutation), "BA");
    EXPECT_LE(report.rows[k].relabeled.fitness, 1e-12);
  }
  // The five-pulse rows get close under the same exchange but stay above 0.02.
  EXPECT_EQ(format_permutation(report.rows[2].relabeled.permutation), "BAC");
  EXPECT_NEAR(report.rows[2].relabeled.fitness, 0.033844247622697665, 1e-9);
  EXPECT_NEAR(report.rows[3].relabeled.fitness, 0.0345463089747613, 1e-9);
}

TEST(ReplicateReferenceSequences, AlternateXcaReading) {
  const auto report = replicate_reference_sequences("xzCA");
  EXPECT_EQ(report.xca_reading, "xzCA");
  EXPECT_EQ(format_word(report.rows[2].sequence[2].word()), "zxAC");
  EXPECT_NE(report.rows[2].fitness_phase_invariant,
            replicate_reference_sequences().rows[2].fitness_phase_invariant);
  EXPECT_THROW(replicate_reference_sequences("qCA"), ParseError);
}
