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
#include <set>
#include <string>
#include <vector>

#include "decomp/budget.hpp"
#include "decomp/codes.hpp"
#include "decomp/error.hpp"
#include "decomp/matrix.hpp"
#include "decomp/syndrome_table.hpp"

namespace decomp {

enum class DuplicatePolicy { Reject, Allow };

/// K x L demand matrix F. Columns must be pairwise distinct unless the
/// caller explicitly allows duplicates.
class DemandMatrix {
 public:
  explicit DemandMatrix(FieldMatrix f, DuplicatePolicy policy = DuplicatePolicy::Reject) : f_(std::move(f)) {
    std::set<std::vector<Residue>> seen;
    for (std::size_t l = 0; l < f_.cols(); ++l) {
      if (!seen.insert(f_.column(l)).second) {
        if (policy == DuplicatePolicy::Reject) {
          throw ValidationError("demand matrix column " + std::to_string(l) +
                                " duplicates an earlier column (use --allow-duplicate-columns)");
        }
        duplicates_ = true;
      }
    }
  }

  const FieldMatrix& matrix() const noexcept { return f_; }
  std::size_t users() const noexcept { return f_.rows(); }
  std::size_t subfunctions() const noexcept { return f_.cols(); }
  bool has_duplicate_columns() const noexcept { return duplicates_; }

 private:
  FieldMatrix f_;
  bool duplicates_ = false;
};

/// F whose columns are every vector of GF(q)^K once, in ascending
/// little-endian mixed-radix order.
inline DemandMatrix maximal_basis_demand(std::uint64_t q, std::size_t k, const Budget& budget = {}) {
  const FieldSpec field(q);
  budget.require_table(q, k);
  const std::uint64_t l = checked_pow(q, k);
  FieldMatrix f(field, k, l);
  for (std::uint64_t col = 0; col < l; ++col) {
    std::uint64_t idx = col;
    for (std::size_t i = 0; i < k; ++i) {
      f.set(i, col, static_cast<Residue>(idx % q));
      idx /= q;
    }
  }
  return DemandMatrix(std::move(f));
}

/**
 * A complete one-shot computing scheme F = D E.
 *
 * jobs[n] is S_n, the subfunctions server n evaluates (support of row n of
 * E); audiences[n] is T_n, the users server n transmits to (support of
 * column n of D). Indices are 0-based.
 */
struct ComputingScheme {
  FieldMatrix demand;
  FieldMatrix decoding;
  FieldMatrix encoding;
  std::vector<std::vector<std::size_t>> jobs{};
  std::vector<std::vector<std::size_t>> audiences{};
  std::uint64_t gamma = 0;
  std::uint64_t lambda = 0;

  std::size_t users() const noexcept { return decoding.rows(); }
  std::size_t servers() const noexcept { return decoding.cols(); }
  std::size_t subfunctions() const noexcept { return encoding.cols(); }
  std::uint32_t q() const noexcept { return decoding.q(); }

  /// True when D E reproduces F exactly.
  bool feasible() const { return mat_mul(decoding, encoding) == demand; }
};

/// Derives job sets, audiences and costs from (F, D, E). Does not require
/// D E = F, so defective schemes can be built for testing.
inline ComputingScheme assemble_scheme(FieldMatrix f, FieldMatrix d, FieldMatrix e) {
  require_same_field(f, d);
  require_same_field(d, e);
  if (d.rows() != f.rows() || d.cols() != e.rows() || e.cols() != f.cols()) {
    throw ValidationError("scheme dimensions inconsistent: F " + std::to_string(f.rows()) + "x" +
                          std::to_string(f.cols()) + ", D " + std::to_string(d.rows()) + "x" +
                          std::to_string(d.cols()) + ", E " + std::to_string(e.rows()) + "x" +
                          std::to_string(e.cols()));
  }
  ComputingScheme s{.demand = std::move(f), .decoding = std::move(d), .encoding = std::move(e)};
  s.jobs.resize(s.servers());
  s.audiences.resize(s.servers());
  for (std::size_t n = 0; n < s.servers(); ++n) {
    s.jobs[n] = support(s.encoding.row(n));
    for (std::size_t k = 0; k < s.users(); ++k)
      if (s.decoding(k, n) != 0) s.audiences[n].push_back(k);
  }

  // Costs from the job sets ...
  std::uint64_t gamma = 0, lambda = 0;
  for (const auto& job : s.jobs) {
    gamma += job.size();
    lambda = std::max<std::uint64_t>(lambda, job.size());
  }
  // ... and directly from E; the two must agree.
  const auto rw = row_weights(s.encoding);
  const std::uint64_t lambda_e = rw.empty() ? 0 : *std::max_element(rw.begin(), rw.end());
  if (gamma != total_weight(s.encoding) || lambda != lambda_e) {
    throw std::logic_error("cost cross-check failed between job sets and E");
  }
  s.gamma = gamma;
  s.lambda = lambda;
  return s;
}

/// Plans F = D E with D the code's parity-check matrix and each column of E
/// the coset leader of the matching column of F.
inline ComputingScheme plan(const DemandMatrix& demand, const LinearCode& code, const Budget& budget = {}) {
  const FieldMatrix& f = demand.matrix();
  if (f.field() != code.parity_check.field()) {
    throw ValidationError("field mismatch: demand over GF(" + std::to_string(f.q()) + "), code over GF(" +
                          std::to_string(code.q()) + ")");
  }
  if (f.rows() != code.redundancy) {
    throw ValidationError("demand has K = " + std::to_string(f.rows()) + " users but the code has " +
                          std::to_string(code.redundancy) + " parity checks");
  }
  std::shared_ptr<const SyndromeTable> table = code.table;
  if (!table) table = std::make_shared<const SyndromeTable>(SyndromeTable::build(code.parity_check, budget));

  FieldMatrix e(f.field(), code.n, f.cols());
  for (std::size_t l = 0; l < f.cols(); ++l) {
    const auto leader = table->decode(f.column(l));
    for (std::size_t n = 0; n < code.n; ++n) e.set(n, l, leader[n]);
  }
  ComputingScheme s = assemble_scheme(f, code.parity_check, std::move(e));
  if (!s.feasible()) throw std::logic_error("planned scheme violates D E = F");
  return s;
}

}  // namespace decomp
