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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "decomp/bounds.hpp"
#include "decomp/cli.hpp"
#include "decomp/codes.hpp"
#include "decomp/example_fixture.hpp"
#include "decomp/scheme.hpp"
#include "decomp/scheme_io.hpp"
#include "decomp/simulator.hpp"
#include "decomp/syndrome_table.hpp"
#include "oracles.hpp"

namespace {

using namespace decomp;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// 1. Worked example reproduced entry for entry.
Outcome worked_example() {
  Outcome o;
  const auto t = Clock::now();
  const auto code = golay_ternary();
  const auto s = plan(DemandMatrix(example::demand()), code);
  const double secs = seconds_since(t);
  o.require(s.decoding == example::decoding(), "D differs");
  o.require(s.encoding == example::encoding(), "E differs");
  o.require(s.gamma == 21, "gamma = " + std::to_string(s.gamma));
  o.require(s.lambda == 3, "lambda = " + std::to_string(s.lambda));
  o.require(s.jobs == example::jobs(), "job sets differ");
  o.require(s.audiences == example::audiences(), "audiences differ");
  o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  o.detail = o.pass ? "E exact, gamma=21, lambda=3, S_n/T_n match, " + std::to_string(secs) + " s" : o.detail;
  return o;
}

// 2. Exhaustively computed parameters of the perfect codes.
Outcome perfect_parameters() {
  Outcome o;
  struct Case {
    const char* name;
    std::function<LinearCode()> make;
    std::size_t d, tau, rho;
  };
  const std::vector<Case> cases{{"golay-ternary", [] { return golay_ternary(); }, 5, 2, 2},
                                {"hamming:2:3", [] { return hamming_code(2, 3); }, 3, 1, 1},
                                {"golay-binary", [] { return golay_binary(); }, 7, 3, 3}};
  std::ostringstream info;
  for (const auto& c : cases) {
    const auto t = Clock::now();
    const auto code = c.make();
    const double secs = seconds_since(t);
    o.require(code.d == c.d && code.tau == c.tau && code.rho == c.rho,
              std::string(c.name) + " d/tau/rho = " + std::to_string(code.d) + "/" + std::to_string(code.tau) + "/" +
                  std::to_string(code.rho));
    o.require(code.mu_tau == Rational(1, 1), std::string(c.name) + " mu = " + code.mu_tau.str());
    o.require(code.classification == CodeClass::Perfect, std::string(c.name) + " not Perfect");
    o.require(secs < 30.0, std::string(c.name) + " took " + std::to_string(secs) + " s");
    info << c.name << " " << secs << "s ";
  }
  if (o.pass) o.detail = info.str();
  return o;
}

// 3. Maximal basis with a perfect code meets the closed forms exactly.
Outcome perfect_equalities() {
  Outcome o;
  struct Case {
    const char* name;
    std::function<LinearCode()> make;
    std::uint64_t lambda, gamma;
    double limit;
  };
  const std::vector<Case> cases{{"golay-ternary", [] { return golay_ternary(); }, 42, 462, 60},
                                {"hamming:2:3", [] { return hamming_code(2, 3); }, 1, 7, 60},
                                {"golay-binary", [] { return golay_binary(); }, 254, 5842, 60}};
  std::ostringstream info;
  for (const auto& c : cases) {
    const auto t = Clock::now();
    const auto code = c.make();
    const auto s = plan(maximal_basis_demand(code.q(), code.redundancy), code);
    const double secs = seconds_since(t);
    const auto lb = lower_bounds_maximal(code);
    o.require(s.lambda == c.lambda && s.gamma == c.gamma,
              std::string(c.name) + " measured " + std::to_string(s.lambda) + "/" + std::to_string(s.gamma));
    o.require(lb.lambda == c.lambda && lb.gamma == c.gamma, std::string(c.name) + " closed form differs");
    o.require(secs < c.limit, std::string(c.name) + " took " + std::to_string(secs) + " s");
    info << c.name << " (" << s.lambda << "," << s.gamma << ") ";
  }
  if (o.pass) o.detail = info.str();
  return o;
}

std::vector<LinearCode> bound_test_codes() {
  std::vector<LinearCode> codes{repetition_code(2, 3), hamming_code(2, 3), golay_ternary(), extended_hamming(3)};
  ResidueRng rng(20240101);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t q = i % 2 ? 3 : 2;
    const std::size_t n = 2 + rng.below(8);  // 2..9
    const std::size_t k = 1 + rng.below(n - 1);
    codes.push_back(from_parity_check(oracle::random_full_rank(rng, q, k, n)));
  }
  return codes;
}

// 4. Bound compliance for 200 random distinct-column demands per code.
Outcome bound_compliance(const std::vector<LinearCode>& codes) {
  Outcome o;
  ResidueRng rng(4);
  std::uint64_t cases = 0;
  for (std::size_t ci = 0; ci < codes.size(); ++ci) {
    const auto& c = codes[ci];
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t l = 1 + rng.below(c.table->size());
      const auto s = plan(DemandMatrix(cli::random_distinct_demand(c, l, rng)), c);
      ++cases;
      if (s.lambda > bound_lambda(c, l) || s.gamma > bound_gamma(c, l)) {
        o.require(false, "code " + std::to_string(ci) + " L=" + std::to_string(l) + " exceeds bound");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(codes.size()) + " codes, " + std::to_string(cases) + " demands, 100% within";
  return o;
}

// 5. Every table leader is minimum weight in its coset (brute force, N <= 10).
Outcome decoder_minimality(const std::vector<LinearCode>& codes) {
  Outcome o;
  std::uint64_t checked = 0;
  std::size_t n_codes = 0;
  std::vector<LinearCode> extra{hamming_code(3, 2), repetition_code(3, 4)};
  auto check = [&](const LinearCode& c) {
    if (c.n > 10) return;
    ++n_codes;
    const auto best = oracle::min_weight_per_syndrome(c.parity_check);
    for (std::uint64_t idx = 0; idx < c.table->size(); ++idx, ++checked) {
      const auto s = c.table->syndrome_of_index(idx);
      const auto e = c.table->decode(s);
      if (static_cast<int>(weight(e)) != best[idx] || c.table->syndrome(e) != s) {
        o.require(false, "leader for syndrome " + std::to_string(idx) + " not minimal");
      }
    }
  };
  for (const auto& c : codes) check(c);
  for (const auto& c : extra) check(c);
  if (o.pass) o.detail = std::to_string(n_codes) + " codes, " + std::to_string(checked) + " syndromes, 100% agree";
  return o;
}

// 6. Quasi-perfect [8,4] extended Hamming stays strictly below 29 / 64.
Outcome quasi_perfect() {
  Outcome o;
  const auto c = extended_hamming(3);
  const auto qp = quasi_perfect_bounds(c);
  const auto s = plan(maximal_basis_demand(2, c.redundancy), c);
  o.require(c.rho == c.tau + 1, "rho != tau + 1");
  o.require(qp.lambda == 29 && qp.gamma == 64, "bounds " + std::to_string(qp.lambda) + "/" + std::to_string(qp.gamma));
  o.require(s.lambda < qp.lambda, "lambda " + std::to_string(s.lambda) + " not < " + std::to_string(qp.lambda));
  o.require(s.gamma < qp.gamma, "gamma " + std::to_string(s.gamma) + " not < " + std::to_string(qp.gamma));
  if (o.pass) {
    o.detail = "lambda " + std::to_string(s.lambda) + " < 29, gamma " + std::to_string(s.gamma) +
               " < 64, rho = tau + 1 = " + std::to_string(c.rho);
  }
  return o;
}

// 7. 100 seeded trials of the worked example decode correctly, with servers
// reading only their own job sets.
Outcome end_to_end() {
  Outcome o;
  const auto s = plan(DemandMatrix(example::demand()), golay_ternary());
  const auto summary = random_trials(s, 100, 42, true);
  o.require(summary.pass_rate == 1.0, "pass rate " + std::to_string(summary.pass_rate));
  for (const auto& r : summary.reports) {
    o.require(r.decoded == r.expected, "decoded != F w");
    o.require(r.reads == s.jobs, "server read outside S_n");
  }
  if (o.pass) o.detail = "100/100 trials pass, access logs equal S_n";
  return o;
}

// 8. Byte-identical outputs for repeated runs.
Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "decomp_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  write_text_file(root / "F.txt", serialize_matrix(example::demand()));

  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "decomp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  for (const char* b : {"b1", "b2"}) {
    run({"plan", "--demand", (root / "F.txt").string(), "--code", "golay-ternary", "--out", (root / b).string()});
  }
  for (const char* f : {"D.txt", "E.txt", "F.txt", "scheme.json"}) {
    o.require(read_text_file(root / "b1" / f) == read_text_file(root / "b2" / f), std::string("plan ") + f);
  }
  const auto h = golay_binary_parity_check();
  std::ostringstream t1, t2;
  SyndromeTable::build(h).save(t1);
  SyndromeTable::build(h).save(t2);
  o.require(t1.str() == t2.str(), "build_table bytes differ");

  const std::string s1 = run({"simulate", "--scheme", (root / "b1").string(), "--trials", "20", "--seed", "7",
                              "--csv", (root / "s1.csv").string()});
  const std::string s2 = run({"simulate", "--scheme", (root / "b2").string(), "--trials", "20", "--seed", "7",
                              "--csv", (root / "s2.csv").string()});
  o.require(s1 == s2, "simulate output differs");
  o.require(read_text_file(root / "s1.csv") == read_text_file(root / "s2.csv"), "simulate CSV differs");
  fs::remove_all(root);
  if (o.pass) o.detail = "plan bundle, syndrome table cache and simulate output byte-identical";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  const auto codes = bound_test_codes();
  criteria.emplace_back("AC1 worked example reproduction", worked_example);
  criteria.emplace_back("AC2 perfect-code parameters", perfect_parameters);
  criteria.emplace_back("AC3 maximal-basis equalities", perfect_equalities);
  criteria.emplace_back("AC4 bound compliance", [&] { return bound_compliance(codes); });
  criteria.emplace_back("AC5 decoder minimality", [&] { return decoder_minimality(codes); });
  criteria.emplace_back("AC6 quasi-perfect bounds", quasi_perfect);
  criteria.emplace_back("AC7 end-to-end simulation", end_to_end);
  criteria.emplace_back("AC8 determinism", determinism);

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
