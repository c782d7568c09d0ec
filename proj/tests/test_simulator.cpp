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
#include "decomp/example_fixture.hpp"
#include "decomp/scheme.hpp"
#include "decomp/simulator.hpp"
#include "oracles.hpp"

namespace decomp {
namespace {

ComputingScheme example_scheme() { return plan(DemandMatrix(example::demand()), golay_ternary()); }

TEST(Simulator, ExampleSchemeDecodesEveryUser) {
  const auto s = example_scheme();
  ResidueRng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = rng.vector(3, 12);
    const auto r = run_once(s, w);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.decoded, r.expected);
    EXPECT_EQ(r.reads, example::jobs());
    // z = E w
    EXPECT_EQ(r.transmissions, mat_mul(s.encoding, FieldMatrix::column_vector(FieldSpec(3), w)).column(0));
  }
}

TEST(Simulator, ZeroFiles) {
  const auto s = example_scheme();
  const std::vector<Residue> w(12, 0);
  const auto r = run_once(s, w);
  EXPECT_EQ(r.transmissions, std::vector<Residue>(11, 0));
  EXPECT_EQ(r.decoded, std::vector<Residue>(5, 0));
  EXPECT_TRUE(r.pass);
}

TEST(Simulator, DeliveriesFollowAudiences) {
  const auto s = example_scheme();
  const auto r = run_once(s, std::vector<Residue>(12, 1));
  ASSERT_EQ(r.delivered.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> senders;
    for (const auto& d : r.delivered[k]) senders.push_back(d.server);
    std::vector<std::size_t> expected;
    for (std::size_t n = 0; n < 11; ++n)
      if (std::count(s.audiences[n].begin(), s.audiences[n].end(), k)) expected.push_back(n);
    EXPECT_EQ(senders, expected);
  }
  EXPECT_EQ(r.message_count, 30u);
  EXPECT_EQ(r.delay, 3u);
}

TEST(Simulator, PerturbedSchemeFailsAtExpectedRate) {
  const auto good = example_scheme();
  FieldMatrix e = good.encoding;
  e.set(3, 0, field_add(e(3, 0), 1, 3));  // server 4 now also touches file 1
  const auto bad = assemble_scheme(good.demand, good.decoding, e);
  EXPECT_FALSE(bad.feasible());
  const auto summary = random_trials(bad, 1000, 99);
  const auto failures = summary.trials - summary.passes;
  // A failure happens exactly when W_1 != 0: probability 2/3. Four standard
  // deviations below the mean is 667 - 60.
  EXPECT_GE(failures, 607u);
  EXPECT_LE(failures, 727u);
}

TEST(Simulator, RandomTrialsDeterministic) {
  const auto s = example_scheme();
  const auto a = random_trials(s, 1, 42, true);
  const auto b = random_trials(s, 1, 42, true);
  ASSERT_EQ(a.reports.size(), 1u);
  EXPECT_EQ(a.reports, b.reports);
  const auto c = random_trials(s, 100, 42);
  EXPECT_EQ(c.pass_rate, 1.0);
  EXPECT_EQ(c.message_count, 30u);
  EXPECT_EQ(c.lambda, 3u);
  EXPECT_THROW(random_trials(s, 0, 42), ValidationError);
}

TEST(Simulator, DelayAccounting) {
  const auto s = example_scheme();
  const auto acc = delay_accounting(s);
  EXPECT_EQ(acc.per_server, (std::vector<std::uint64_t>{3, 2, 2, 1, 2, 3, 1, 1, 2, 2, 2}));
  EXPECT_EQ(acc.lambda, 3u);
  EXPECT_EQ(acc.lambda, s.lambda);

  const auto ham = hamming_code(2, 3);
  const auto hs = plan(maximal_basis_demand(2, 3), ham);
  EXPECT_EQ(delay_accounting(hs).per_server, std::vector<std::uint64_t>(7, 1));

  const auto empty = plan(DemandMatrix(FieldMatrix(FieldSpec(3), 5, 0)), golay_ternary());
  const auto eacc = delay_accounting(empty);
  EXPECT_EQ(eacc.per_server, std::vector<std::uint64_t>(11, 0));
  EXPECT_EQ(eacc.lambda, 0u);
  EXPECT_TRUE(run_once(empty, std::vector<Residue>{}).pass);
}

TEST(Simulator, EndToEndAcrossCodes) {
  ResidueRng rng(8);
  std::vector<LinearCode> codes{hamming_code(2, 3), extended_hamming(3), hamming_code(3, 2), repetition_code(5, 3)};
  for (int i = 0; i < 6; ++i) codes.push_back(from_parity_check(oracle::random_full_rank(rng, 3, 2 + i % 3, 6)));
  for (const auto& c : codes) {
    const auto s = plan(maximal_basis_demand(c.q(), c.redundancy), c);
    EXPECT_EQ(delay_accounting(s).lambda, s.lambda);
    const auto summary = random_trials(s, 50, 3);
    EXPECT_EQ(summary.passes, 50u);
  }
}

TEST(Simulator, RejectsBadFileVectors) {
  const auto s = example_scheme();
  EXPECT_THROW(run_once(s, std::vector<Residue>(11, 0)), ValidationError);
  EXPECT_THROW(run_once(s, std::vector<Residue>(12, 3)), ValidationError);
}

TEST(Rng, RejectionSamplingIsUniformEnough) {
  ResidueRng rng(123);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.residue(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, StreamIsFixedBySeed) {
  // mt19937_64 with the default seed has a standard-mandated 10000th output.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ull);
  ResidueRng a(42), b(42);
  EXPECT_EQ(a.vector(3, 100), b.vector(3, 100));
}

}  // namespace
}  // namespace decomp
