/* Copyright 2026 The decomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "decomp/codes.hpp"
#include "decomp/combinatorics.hpp"
#include "decomp/example_fixture.hpp"
#include "oracles.hpp"

namespace decomp {
namespace {

TEST(BallVolume, Examples) {
  EXPECT_EQ(ball_volume(3, 11, 2), 243u);
  EXPECT_EQ(ball_volume(3, 11, 2), oracle::ball_volume_by_enumeration(3, 11, 2));
  EXPECT_EQ(ball_volume(2, 7, 1), 8u);
  EXPECT_EQ(ball_volume(2, 7, 1), oracle::ball_volume_by_enumeration(2, 7, 1));
  EXPECT_EQ(ball_volume(5, 9, 0), 1u);
  EXPECT_EQ(ball_volume(2, 23, 3), 2048u);
  EXPECT_THROW(ball_volume(3, 4, 5), ValidationError);
}

TEST(BallVolume, FullRadiusIsWholeSpace) {
  for (std::uint64_t q : {2, 3, 5, 7})
    for (std::uint64_t n = 0; n <= 8; ++n) EXPECT_EQ(ball_volume(q, n, n), checked_pow(q, n));
}

TEST(BallVolume, MatchesEnumeration) {
  for (int q : {2, 3})
    for (std::size_t n = 1; n <= 7; ++n)
      for (int r = 0; r <= static_cast<int>(n); ++r)
        EXPECT_EQ(ball_volume(q, n, r), oracle::ball_volume_by_enumeration(q, n, r));
}

TEST(Rational, LowestTerms) {
  const Rational r(6, 8);
  EXPECT_EQ(r.num(), 3u);
  EXPECT_EQ(r.den(), 4u);
  EXPECT_EQ(r.str(), "3/4");
  EXPECT_TRUE(Rational(243, 243).is_one());
  EXPECT_TRUE(Rational(1, 2) < Rational(2, 3));
  EXPECT_THROW(Rational(1, 0), ValidationError);
}

TEST(Codes, HammingBinary74) {
  const auto c = hamming_code(2, 3);
  EXPECT_EQ(c.n, 7u);
  EXPECT_EQ(c.k_dim, 4u);
  EXPECT_EQ(c.d, 3u);
  EXPECT_EQ(c.tau, 1u);
  EXPECT_EQ(c.rho, 1u);
  EXPECT_TRUE(c.mu_tau.is_one());
  EXPECT_EQ(c.classification, CodeClass::Perfect);
  // Column j is the binary expansion of j + 1, row 0 most significant.
  EXPECT_EQ(c.parity_check, FieldMatrix::from_rows(FieldSpec(2), {{0, 0, 0, 1, 1, 1, 1},
                                                                  {0, 1, 1, 0, 0, 1, 1},
                                                                  {1, 0, 1, 0, 1, 0, 1}}));
}

TEST(Codes, HammingTernary42) {
  const auto c = hamming_code(3, 2);
  EXPECT_EQ(c.n, 4u);
  EXPECT_EQ(c.redundancy, 2u);
  EXPECT_EQ(c.d, 3u);
  EXPECT_EQ(c.classification, CodeClass::Perfect);
  EXPECT_EQ(c.parity_check, FieldMatrix::from_rows(FieldSpec(3), {{0, 1, 1, 1}, {1, 0, 1, 2}}));
}

TEST(Codes, HammingDegenerateIsRepetition) {
  const auto c = hamming_code(2, 2);
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.k_dim, 1u);
  EXPECT_EQ(c.d, 3u);
  EXPECT_THROW(hamming_code(2, 1), ValidationError);
  EXPECT_THROW(hamming_code(4, 2), ValidationError);
}

TEST(Codes, GolayTernary) {
  const auto c = golay_ternary();
  EXPECT_EQ(c.parity_check, example::decoding());
  const auto row0 = c.parity_check.row(0);
  EXPECT_EQ(std::vector<Residue>(row0.begin(), row0.end()),
            (std::vector<Residue>{1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(c.n, 11u);
  EXPECT_EQ(c.k_dim, 6u);
  EXPECT_EQ(c.d, 5u);
  EXPECT_EQ(c.tau, 2u);
  EXPECT_EQ(c.rho, 2u);
  EXPECT_EQ(c.mu_tau, Rational(1, 1));
  EXPECT_EQ(c.classification, CodeClass::Perfect);
}

TEST(Codes, GolayBinary) {
  const auto c = golay_binary();
  EXPECT_EQ(c.n, 23u);
  EXPECT_EQ(c.k_dim, 12u);
  EXPECT_EQ(c.d, 7u);
  EXPECT_EQ(c.tau, 3u);
  EXPECT_EQ(c.rho, 3u);
  EXPECT_TRUE(c.mu_tau.is_one());
  EXPECT_EQ(c.classification, CodeClass::Perfect);
}

TEST(Codes, SingleParityCheck) {
  const auto c = from_parity_check(FieldMatrix::from_rows(FieldSpec(2), {{1, 1, 1}}));
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.k_dim, 2u);
  EXPECT_EQ(c.d, 2u);
  EXPECT_EQ(c.tau, 0u);
  EXPECT_EQ(c.rho, 1u);
  EXPECT_EQ(c.mu_tau, Rational(1, 2));
  // rho = tau + 1, which the coset-table oracle confirms.
  EXPECT_EQ(c.classification, CodeClass::QuasiPerfect);
}

TEST(Codes, ExtendedHamming84) {
  const auto c = extended_hamming(3);
  EXPECT_EQ(c.n, 8u);
  EXPECT_EQ(c.k_dim, 4u);
  EXPECT_EQ(c.d, 4u);
  EXPECT_EQ(c.tau, 1u);
  EXPECT_EQ(c.rho, 2u);
  EXPECT_EQ(c.mu_tau, Rational(9, 16));
  EXPECT_EQ(c.classification, CodeClass::QuasiPerfect);
}

TEST(Codes, Repetition) {
  const auto c = repetition_code(3, 5);
  EXPECT_EQ(c.d, 5u);
  EXPECT_EQ(c.k_dim, 1u);
  EXPECT_EQ(c.classification, classify(c.tau, c.rho));
  EXPECT_EQ(repetition_code(2, 3).classification, CodeClass::Perfect);
}

TEST(Codes, Classify) {
  EXPECT_EQ(classify(2, 2), CodeClass::Perfect);
  EXPECT_EQ(classify(1, 2), CodeClass::QuasiPerfect);
  EXPECT_EQ(classify(0, 3), CodeClass::Other);
}

TEST(Codes, Errors) {
  // Row 2 = row 0 + row 1.
  EXPECT_THROW(from_parity_check(FieldMatrix::from_rows(FieldSpec(3), {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})),
               ValidationError);
  EXPECT_THROW(from_parity_check(FieldMatrix::identity(FieldSpec(3), 3)), ValidationError);
  Budget tiny;
  tiny.max_codewords = 100;
  EXPECT_THROW(golay_ternary(tiny), BudgetError);
  Budget small_table;
  small_table.max_table_entries = 100;
  EXPECT_THROW(golay_ternary(small_table), BudgetError);
}

// Built-in constructions re-analysed from their own H agree with themselves,
// and with the brute-force oracles where those are affordable.
TEST(Codes, ConstructionsAgreeWithOracles) {
  std::vector<LinearCode> codes{hamming_code(2, 3), hamming_code(3, 2), hamming_code(2, 2), repetition_code(2, 3),
                                extended_hamming(3), golay_ternary(), repetition_code(3, 4)};
  for (const auto& c : codes) {
    const auto again = from_parity_check(c.parity_check);
    EXPECT_EQ(again.d, c.d);
    EXPECT_EQ(again.rho, c.rho);
    EXPECT_EQ(again.mu_tau, c.mu_tau);
    EXPECT_EQ(again.classification, c.classification);

    EXPECT_EQ(static_cast<int>(c.d), oracle::min_distance_brute(c.parity_check));
    const auto best = oracle::min_weight_per_syndrome(c.parity_check);
    EXPECT_EQ(static_cast<int>(c.rho), *std::max_element(best.begin(), best.end()));
    EXPECT_LE(c.mu_tau.num(), c.mu_tau.den());
    EXPECT_EQ(c.mu_tau.is_one(), c.classification == CodeClass::Perfect);
  }
}

TEST(Codes, DistanceMatchesColumnIndependence) {
  ResidueRng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t q = trial % 2 ? 3 : 2;
    const std::size_t n = 4 + trial % 6;
    const std::size_t k = 1 + trial % (n - 1);
    const auto h = oracle::random_full_rank(rng, q, k, n);
    const auto c = from_parity_check(h);
    EXPECT_EQ(static_cast<int>(c.d), oracle::min_distance_by_columns(h)) << serialize_matrix(h);
    EXPECT_EQ(c.tau, (c.d - 1) / 2);
    EXPECT_GE(c.rho, c.tau);
    EXPECT_EQ(c.classification, classify(c.tau, c.rho));
    EXPECT_EQ(c.mu_tau.is_one(), c.classification == CodeClass::Perfect);
  }
  for (const auto& c : {golay_ternary(), hamming_code(2, 4), extended_hamming(3)})
    EXPECT_EQ(static_cast<int>(c.d), oracle::min_distance_by_columns(c.parity_check));
}

}  // namespace
}  // namespace decomp
