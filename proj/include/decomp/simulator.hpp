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

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/field.hpp"
#include "decomp/matrix.hpp"
#include "decomp/rng.hpp"
#include "decomp/scheme.hpp"

namespace decomp {

struct Delivery {
  std::size_t server = 0;
  Residue value = 0;
  friend bool operator==(const Delivery&, const Delivery&) = default;
};

/// One execution of the three phases for a concrete file vector w.
struct SimulationReport {
  std::vector<Residue> files;                   // w
  std::vector<Residue> transmissions;           // z = E w, computed per server
  std::vector<std::vector<Delivery>> delivered;  // per user, in server order
  std::vector<Residue> decoded;                 // f' = D z, computed per user
  std::vector<Residue> expected;                // f = F w
  std::vector<std::vector<std::size_t>> reads;  // per server, files read
  bool pass = false;
  std::uint64_t delay = 0;
  std::uint64_t message_count = 0;

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

struct DelayAccounting {
  std::vector<std::uint64_t> per_server;
  std::uint64_t lambda = 0;
};

/// Per-server delay |S_n| under unit cost per subfunction, counted by a
/// column-wise scan of E.
inline DelayAccounting delay_accounting(const ComputingScheme& scheme) {
  DelayAccounting acc;
  acc.per_server.assign(scheme.servers(), 0);
  for (std::size_t l = 0; l < scheme.subfunctions(); ++l)
    for (std::size_t n = 0; n < scheme.servers(); ++n)
      if (scheme.encoding(n, l) != 0) ++acc.per_server[n];
  for (auto d : acc.per_server) acc.lambda = std::max(acc.lambda, d);
  return acc;
}

inline std::uint64_t message_count(const ComputingScheme& scheme) {
  std::uint64_t m = 0;
  for (const auto& a : scheme.audiences) m += a.size();
  return m;
}

namespace detail {

// Hands out file values to servers and records every read. A read outside the
// server's job set is a hard error.
class FileStore {
 public:
  FileStore(std::span<const Residue> files, const std::vector<std::vector<std::size_t>>& jobs)
      : files_(files), jobs_(jobs), log_(jobs.size()) {}

  Residue read(std::size_t server, std::size_t l) {
    const auto& job = jobs_[server];
    if (!std::binary_search(job.begin(), job.end(), l)) {
      throw std::logic_error("server " + std::to_string(server) + " read file " + std::to_string(l) +
                             " outside its job set");
    }
    log_[server].push_back(l);
    return files_[l];
  }

  std::vector<std::vector<std::size_t>> take_log() { return std::move(log_); }

 private:
  std::span<const Residue> files_;
  const std::vector<std::vector<std::size_t>>& jobs_;
  std::vector<std::vector<std::size_t>> log_;
};

}  // namespace detail

inline SimulationReport run_once(const ComputingScheme& scheme, std::span<const Residue> w) {
  if (w.size() != scheme.subfunctions()) {
    throw ValidationError("file vector length " + std::to_string(w.size()) + " does not match L = " +
                          std::to_string(scheme.subfunctions()));
  }
  const std::uint32_t q = scheme.q();
  for (Residue v : w)
    if (v >= q) throw ValidationError("file value out of range");

  SimulationReport rep;
  rep.files.assign(w.begin(), w.end());

  // Computation and encoding: server n touches only files in S_n.
  detail::FileStore store(w, scheme.jobs);
  rep.transmissions.assign(scheme.servers(), 0);
  for (std::size_t n = 0; n < scheme.servers(); ++n) {
    Residue z = 0;
    for (std::size_t l : scheme.jobs[n]) z = field_add(z, field_mul(scheme.encoding(n, l), store.read(n, l), q), q);
    rep.transmissions[n] = z;
  }
  rep.reads = store.take_log();
  if (rep.reads != scheme.jobs) throw std::logic_error("server access log differs from job sets");

  // Communication and decoding: user k hears server n iff k is in T_n.
  rep.delivered.assign(scheme.users(), {});
  for (std::size_t n = 0; n < scheme.servers(); ++n)
    for (std::size_t k : scheme.audiences[n]) rep.delivered[k].push_back({n, rep.transmissions[n]});
  rep.decoded.assign(scheme.users(), 0);
  for (std::size_t k = 0; k < scheme.users(); ++k)
    for (const auto& msg : rep.delivered[k])
      rep.decoded[k] = field_add(rep.decoded[k], field_mul(scheme.decoding(k, msg.server), msg.value, q), q);

  rep.expected = mat_mul(scheme.demand, FieldMatrix::column_vector(scheme.demand.field(), w)).column(0);
  rep.pass = rep.decoded == rep.expected;
  rep.delay = delay_accounting(scheme).lambda;
  rep.message_count = message_count(scheme);
  return rep;
}

struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double pass_rate = 0.0;
  std::uint64_t lambda = 0;
  std::uint64_t message_count = 0;
  std::vector<SimulationReport> reports;  // in trial order, when retained
};

/// Runs `trials` independent executions with w drawn uniformly from GF(q)^L.
inline TrialSummary random_trials(const ComputingScheme& scheme, std::uint64_t trials, std::uint64_t seed,
                                  bool keep_reports = false) {
  if (trials == 0) throw ValidationError("trials must be at least 1");
  ResidueRng rng(seed);
  TrialSummary s;
  s.trials = trials;
  s.lambda = delay_accounting(scheme).lambda;
  s.message_count = message_count(scheme);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto w = rng.vector(scheme.q(), scheme.subfunctions());
    auto rep = run_once(scheme, w);
    if (rep.pass) ++s.passes;
    if (keep_reports) s.reports.push_back(std::move(rep));
  }
  s.pass_rate = static_cast<double>(s.passes) / static_cast<double>(trials);
  return s;
}

}  // namespace decomp
