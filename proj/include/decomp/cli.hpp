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

#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "decomp/bounds.hpp"
#include "decomp/budget.hpp"
#include "decomp/codes.hpp"
#include "decomp/error.hpp"
#include "decomp/example_fixture.hpp"
#include "decomp/matrix_io.hpp"
#include "decomp/rng.hpp"
#include "decomp/scheme.hpp"
#include "decomp/scheme_io.hpp"
#include "decomp/simulator.hpp"
#include "decomp/syndrome_table.hpp"

namespace decomp::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kBudget = 2, kAssertion = 3 };

/// Code selector token: "hamming:Q:R", "golay-ternary", "golay-binary",
/// "repetition:Q:N", "extended-hamming:R" (binary) or "file:PATH".
struct CodeSelector {
  enum class Kind { Hamming, GolayTernary, GolayBinary, Repetition, ExtendedHamming, File };
  Kind kind = Kind::GolayTernary;
  std::uint64_t q = 0;
  std::uint64_t param = 0;
  std::string path;
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::uint64_t parse_count(const std::string& s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("bad " + std::string(what) + " '" + s + "'");
  }
  return v;
}

inline std::string join(std::span<const Residue> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

inline CodeSelector parse_selector(std::string_view token) {
  CodeSelector sel;
  if (token.starts_with("file:")) {
    sel.kind = CodeSelector::Kind::File;
    sel.path = std::string(token.substr(5));
    if (sel.path.empty()) throw ValidationError("file selector needs a path");
    return sel;
  }
  const auto parts = detail::split(token, ':');
  const std::string& name = parts.front();
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw ValidationError("bad code selector '" + std::string(token) + "'");
  };
  if (name == "golay-ternary") {
    want(1);
    sel.kind = CodeSelector::Kind::GolayTernary;
  } else if (name == "golay-binary") {
    want(1);
    sel.kind = CodeSelector::Kind::GolayBinary;
  } else if (name == "hamming" || name == "repetition") {
    want(3);
    sel.kind = name == "hamming" ? CodeSelector::Kind::Hamming : CodeSelector::Kind::Repetition;
    sel.q = detail::parse_count(parts[1], "field size");
    sel.param = detail::parse_count(parts[2], name == "hamming" ? "redundancy" : "length");
    if (!is_prime(sel.q)) throw ValidationError("field size " + parts[1] + " is not a prime >= 2");
  } else if (name == "extended-hamming") {
    want(2);
    sel.kind = CodeSelector::Kind::ExtendedHamming;
    sel.q = 2;
    sel.param = detail::parse_count(parts[1], "redundancy");
  } else {
    throw ValidationError("unknown code '" + std::string(token) + "'");
  }
  return sel;
}

inline FieldMatrix selector_parity_check(const CodeSelector& sel) {
  switch (sel.kind) {
    case CodeSelector::Kind::Hamming:
      return hamming_parity_check(sel.q, sel.param);
    case CodeSelector::Kind::GolayTernary:
      return golay_ternary_parity_check();
    case CodeSelector::Kind::GolayBinary:
      return golay_binary_parity_check();
    case CodeSelector::Kind::Repetition:
      return repetition_parity_check(sel.q, sel.param);
    case CodeSelector::Kind::ExtendedHamming:
      return extended_hamming_parity_check(sel.param);
    case CodeSelector::Kind::File:
      return read_matrix_file(sel.path);
  }
  throw ValidationError("unknown code selector");
}

struct GlobalOptions {
  Budget budget;
  std::string format;  // empty: command default
  std::uint64_t seed = 42;
};

inline nlohmann::ordered_json code_to_json(const LinearCode& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["k"] = c.k_dim;
  j["d"] = c.d;
  j["tau"] = c.tau;
  j["rho"] = c.rho;
  j["mu_tau"] = c.mu_tau.str();
  j["class"] = to_string(c.classification);
  return j;
}

inline int cmd_analyze(const CodeSelector& sel, const GlobalOptions& g, std::ostream& out) {
  const LinearCode code = from_parity_check(selector_parity_check(sel), g.budget);
  if (g.format == "csv") {
    out << "n,k,d,tau,rho,mu_tau,class\n"
        << code.n << ',' << code.k_dim << ',' << code.d << ',' << code.tau << ',' << code.rho << ','
        << code.mu_tau.str() << ',' << to_string(code.classification) << '\n';
  } else {
    out << code_to_json(code).dump() << '\n';
  }
  return kOk;
}

struct PlanOptions {
  std::string demand_path;
  CodeSelector code;
  std::string out_dir;
  bool maximal_basis = false;
  bool allow_duplicates = false;
  bool reduce_entries = false;
  std::string cache_path;
};

/// Resolves the code, reusing (and refreshing) a syndrome table cache when one
/// is configured.
inline LinearCode load_code(const FieldMatrix& h, const Budget& budget, const std::string& cache_path,
                            std::ostream& err) {
  std::shared_ptr<const SyndromeTable> table;
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    std::ifstream in(cache_path, std::ios::binary);
    try {
      table = std::make_shared<const SyndromeTable>(SyndromeTable::load(in, h, budget));
    } catch (const ValidationError& e) {
      err << "warning: ignoring syndrome cache " << cache_path << ": " << e.what() << '\n';
    }
  }
  const bool fresh = !table;
  LinearCode code = from_parity_check(h, budget, std::move(table));
  if (!cache_path.empty() && fresh) {
    std::ofstream cache(cache_path, std::ios::binary | std::ios::trunc);
    if (!cache) throw ValidationError("cannot write syndrome cache " + cache_path);
    code.table->save(cache);
  }
  return code;
}

inline int cmd_plan(const PlanOptions& opt, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (opt.out_dir.empty()) throw ValidationError("plan needs --out");
  if (opt.maximal_basis == !opt.demand_path.empty()) {
    throw ValidationError("plan needs exactly one of --demand or --maximal-basis");
  }
  const FieldMatrix h = selector_parity_check(opt.code);
  const LinearCode code = load_code(h, g.budget, opt.cache_path, err);

  const DemandMatrix demand =
      opt.maximal_basis
          ? maximal_basis_demand(code.q(), code.redundancy, g.budget)
          : DemandMatrix(read_matrix_file(opt.demand_path, {.reduce = opt.reduce_entries}),
                         opt.allow_duplicates ? DuplicatePolicy::Allow : DuplicatePolicy::Reject);
  if (demand.has_duplicate_columns()) {
    err << "warning: demand matrix has duplicate columns; bounds are reported but not checked\n";
  }
  const ComputingScheme scheme = plan(demand, code, g.budget);
  const BoundReport bounds = evaluate_bounds(scheme, code, !demand.has_duplicate_columns());
  write_bundle(opt.out_dir, scheme, bounds);

  if (g.format == "csv") {
    out << "gamma,lambda,gamma_ub,lambda_ub\n"
        << scheme.gamma << ',' << scheme.lambda << ',' << bounds.gamma_ub << ',' << bounds.lambda_ub << '\n';
  } else {
    nlohmann::ordered_json j;
    j["gamma"] = scheme.gamma;
    j["lambda"] = scheme.lambda;
    j["bounds"] = bounds_to_json(bounds);
    out << j.dump() << '\n';
  }
  return kOk;
}

struct SimulateOptions {
  std::string scheme_dir;
  std::uint64_t trials = 100;
  std::string csv_path;
};

inline int cmd_simulate(const SimulateOptions& opt, const GlobalOptions& g, std::ostream& out) {
  if (opt.scheme_dir.empty()) throw ValidationError("simulate needs --scheme");
  const ComputingScheme scheme = read_bundle(opt.scheme_dir);
  const TrialSummary s = random_trials(scheme, opt.trials, g.seed, !opt.csv_path.empty());

  if (!opt.csv_path.empty()) {
    std::ostringstream csv;
    csv << "trial,pass,w,z,decoded,expected\n";
    for (std::size_t t = 0; t < s.reports.size(); ++t) {
      const auto& r = s.reports[t];
      csv << t << ',' << (r.pass ? 1 : 0) << ',' << detail::join(r.files) << ',' << detail::join(r.transmissions)
          << ',' << detail::join(r.decoded) << ',' << detail::join(r.expected) << '\n';
    }
    write_text_file(opt.csv_path, csv.str());
  }
  nlohmann::ordered_json j;
  j["trials"] = s.trials;
  j["passes"] = s.passes;
  j["pass_rate"] = s.pass_rate;
  j["lambda"] = s.lambda;
  j["message_count"] = s.message_count;
  j["seed"] = g.seed;
  out << j.dump() << '\n';
  return s.passes == s.trials ? kOk : kAssertion;
}

struct BenchOptions {
  CodeSelector code;
  std::vector<std::uint64_t> sweep;
  std::uint64_t trials = 1;
  bool timing = true;
};

/// L distinct syndromes drawn uniformly (partial Fisher-Yates over all q^K).
inline FieldMatrix random_distinct_demand(const LinearCode& code, std::uint64_t l, ResidueRng& rng) {
  const SyndromeTable& table = *code.table;
  if (l > table.size()) {
    throw ValidationError("L = " + std::to_string(l) + " exceeds the " + std::to_string(table.size()) +
                          " distinct syndromes");
  }
  std::vector<std::uint64_t> idx(table.size());
  std::iota(idx.begin(), idx.end(), 0);
  FieldMatrix f(code.parity_check.field(), code.redundancy, l);
  for (std::uint64_t c = 0; c < l; ++c) {
    std::swap(idx[c], idx[c + rng.below(idx.size() - c)]);
    const auto s = table.syndrome_of_index(idx[c]);
    for (std::size_t i = 0; i < s.size(); ++i) f.set(i, c, s[i]);
  }
  return f;
}

inline int cmd_bench(const BenchOptions& opt, const GlobalOptions& g, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  if (opt.sweep.empty()) throw ValidationError("bench needs a non-empty --L sweep");
  if (opt.trials == 0) throw ValidationError("bench needs --trials >= 1");

  const auto t0 = Clock::now();
  const LinearCode code = from_parity_check(selector_parity_check(opt.code), g.budget);
  const double build_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ResidueRng rng(g.seed);
  const bool json = g.format == "json";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!json) out << "L,trial,gamma,lambda,gamma_bound,lambda_bound,within_bounds,build_ms,plan_ms\n";
  int status = kOk;
  for (std::uint64_t l : opt.sweep) {
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      const DemandMatrix demand(random_distinct_demand(code, l, rng));
      const auto t1 = Clock::now();
      const ComputingScheme scheme = plan(demand, code, g.budget);
      const double plan_ms = std::chrono::duration<double, std::milli>(Clock::now() - t1).count();
      const BoundReport b = evaluate_bounds(scheme, code);
      const bool ok = b.violations().empty();
      if (!ok) status = kAssertion;
      const double bms = opt.timing ? build_ms : 0.0;
      const double pms = opt.timing ? plan_ms : 0.0;
      if (json) {
        nlohmann::ordered_json r;
        r["L"] = l;
        r["trial"] = t;
        r["gamma"] = scheme.gamma;
        r["lambda"] = scheme.lambda;
        r["gamma_bound"] = b.gamma_ub;
        r["lambda_bound"] = b.lambda_ub;
        r["within_bounds"] = ok;
        r["build_ms"] = bms;
        r["plan_ms"] = pms;
        rows.push_back(r);
      } else {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << l << ',' << t << ',' << scheme.gamma << ',' << scheme.lambda << ',' << b.gamma_ub << ','
             << b.lambda_ub << ',' << (ok ? 1 : 0) << ',' << bms << ',' << pms << '\n';
        out << line.str();
      }
    }
  }
  if (json) out << rows.dump() << '\n';
  return status;
}

/// Replans the embedded worked example and checks it against the published
/// matrices and sets. `corrupt_fixture` flips one expected entry to prove the
/// harness reports failures.
inline int cmd_reproduce_example(std::ostream& out, bool corrupt_fixture = false) {
  const auto start = std::chrono::steady_clock::now();
  FieldMatrix expected_e = example::encoding();
  if (corrupt_fixture) expected_e.set(0, 0, field_add(expected_e(0, 0), 1, expected_e.q()));

  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  const LinearCode code = golay_ternary();
  check("decoding matrix is the ternary Golay parity check", code.parity_check == example::decoding());
  check("code is perfect with tau = rho = 2", code.classification == CodeClass::Perfect && code.tau == 2);
  const ComputingScheme s = plan(DemandMatrix(example::demand()), code);
  check("D E = F", s.feasible());
  check("E matches the published matrix entry for entry", s.encoding == expected_e);
  check("gamma = 21", s.gamma == example::kGamma);
  check("lambda = 3", s.lambda == example::kLambda);
  check("job sets S_1..S_11 match", s.jobs == example::jobs());
  check("audiences T_1..T_11 match", s.audiences == example::audiences());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check("runtime under 5 s", secs < 5.0);
  out << (all ? "reproduce-example: PASS" : "reproduce-example: FAIL") << '\n';
  return all ? kOk : kAssertion;
}

/// Entry point shared by the decomp tool and the CLI tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plan and verify linearly-decomposable distributed computing schemes over GF(q)", "decomp"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--budget-table-entries", g.budget.max_table_entries, "Largest q^K syndrome table")
      ->capture_default_str();
  app.add_option("--budget-codewords", g.budget.max_codewords, "Largest q^(N-K) codeword enumeration")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "RNG seed (mt19937_64)")->capture_default_str();

  std::string code_token;
  auto* analyze = app.add_subcommand("analyze", "Print exact code parameters");
  analyze->add_option("code", code_token, "Code selector")->required();

  PlanOptions plan_opt;
  std::string plan_code;
  auto* plan_cmd = app.add_subcommand("plan", "Factor a demand matrix and write a scheme bundle");
  plan_cmd->add_option("--demand", plan_opt.demand_path, "Demand matrix F (text, or .json)");
  plan_cmd->add_option("--code", plan_code, "Code selector")->required();
  plan_cmd->add_option("--out", plan_opt.out_dir, "Output bundle directory")->required();
  plan_cmd->add_flag("--maximal-basis", plan_opt.maximal_basis, "Use every syndrome once as F (L = q^K)");
  plan_cmd->add_flag("--allow-duplicate-columns", plan_opt.allow_duplicates, "Plan even if F repeats a column");
  plan_cmd->add_flag("--reduce-entries", plan_opt.reduce_entries, "Reduce out-of-range entries of F mod q");
  plan_cmd->add_option("--cache-table", plan_opt.cache_path, "Syndrome table cache file");

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand("simulate", "Run seeded end-to-end trials of a scheme bundle");
  simulate->add_option("--scheme", sim_opt.scheme_dir, "Scheme bundle directory")->required();
  simulate->add_option("--trials", sim_opt.trials, "Number of trials")->capture_default_str();
  simulate->add_option("--csv", sim_opt.csv_path, "Write per-trial CSV here");

  BenchOptions bench_opt;
  std::string bench_code;
  std::string sweep;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Sweep L and compare measured costs against the bounds");
  bench->add_option("--code", bench_code, "Code selector")->required();
  bench->add_option("--L", sweep, "Comma-separated list of L values")->required();
  bench->add_option("--trials", bench_opt.trials, "Random demand matrices per L")->capture_default_str();
  bench->add_flag("--no-timing", no_timing, "Write zero timings for byte-stable output");

  bool corrupt = false;
  auto* reproduce = app.add_subcommand("reproduce-example", "Re-derive the q = 3, N = 11, K = 5 worked example");
  reproduce->add_flag("--corrupt-fixture", corrupt, "Test mode: perturb the expected E");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*analyze) return cmd_analyze(parse_selector(code_token), g, out);
    if (*plan_cmd) {
      plan_opt.code = parse_selector(plan_code);
      return cmd_plan(plan_opt, g, out, err);
    }
    if (*simulate) return cmd_simulate(sim_opt, g, out);
    if (*bench) {
      bench_opt.code = parse_selector(bench_code);
      for (const auto& tok : detail::split(sweep, ','))
        if (!tok.empty()) bench_opt.sweep.push_back(detail::parse_count(tok, "L"));
      bench_opt.timing = !no_timing;
      return cmd_bench(bench_opt, g, out);
    }
    if (*reproduce) return cmd_reproduce_example(out, corrupt);
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace decomp::cli
