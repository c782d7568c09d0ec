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
#include <optional>
#include <string>
#include <vector>

#include "decomp/codes.hpp"
#include "decomp/combinatorics.hpp"
#include "decomp/scheme.hpp"

namespace decomp {

// Closed-form cost bounds for schemes planned with D = parity check of a
// code of length N, K parity checks, packing radius tau, covering radius rho
// and packing density mu_tau.

/// Sum_{i=1..t} C(N-1, i-1) (q-1)^i: the most leaders of weight <= t that can
/// share a given non-zero position.
inline std::uint64_t per_row_leader_count(std::uint64_t q, std::uint64_t n, std::uint64_t t) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= t; ++i)
    sum = checked_add(sum, checked_mul(binomial(n - 1, i - 1), checked_pow(q - 1, i)));
  return sum;
}

/// Sum_{i=1..t} C(N, i) (q-1)^i i: total weight of all vectors of weight <= t.
inline std::uint64_t ball_weight_sum(std::uint64_t q, std::uint64_t n, std::uint64_t t) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= t; ++i)
    sum = checked_add(sum, checked_mul(checked_mul(binomial(n, i), checked_pow(q - 1, i)), i));
  return sum;
}

/// (1 - mu_tau) q^K: number of cosets whose leader is heavier than tau.
/// Evaluated as a rational and required to be integral.
inline std::uint64_t uncovered_cosets(const LinearCode& code) {
  const std::uint64_t qk = checked_pow(code.q(), code.redundancy);
  const Rational& mu = code.mu_tau;
  if (mu.den() == 0 || qk % mu.den() != 0) {
    throw std::logic_error("(1 - mu_tau) q^K is not integral; parameters inconsistent");
  }
  const std::uint64_t covered = qk / mu.den() * mu.num();
  if (covered > qk) throw std::logic_error("packing density exceeds 1");
  return qk - covered;
}

/// Upper bound on the delay: min{L, sum C(N-1,i-1)(q-1)^i + (1 - mu_tau) q^K}.
inline std::uint64_t bound_lambda(const LinearCode& code, std::uint64_t l) {
  const std::uint64_t b =
      checked_add(per_row_leader_count(code.q(), code.n, code.tau), uncovered_cosets(code));
  return std::min(l, b);
}

/// Upper bound on the cumulative cost: min{N L, sum C(N,i)(q-1)^i i + (1 - mu_tau) q^K rho}.
inline std::uint64_t bound_gamma(const LinearCode& code, std::uint64_t l) {
  const std::uint64_t b = checked_add(ball_weight_sum(code.q(), code.n, code.tau),
                                      checked_mul(uncovered_cosets(code), code.rho));
  return std::min(checked_mul(code.n, l), b);
}

struct CostPair {
  std::uint64_t lambda = 0;
  std::uint64_t gamma = 0;
  friend bool operator==(const CostPair&, const CostPair&) = default;
};

/// Lower bounds that hold when L = q^K (every syndrome demanded once).
inline CostPair lower_bounds_maximal(const LinearCode& code) {
  return {per_row_leader_count(code.q(), code.n, code.tau), ball_weight_sum(code.q(), code.n, code.tau)};
}

/// Strict upper bounds for quasi-perfect codes:
/// lambda < sum_{i<=tau} C(N-1,i-1)(q-1)^i + C(N,tau+1)(q-1)^(tau+1),
/// gamma  < sum_{i<=tau+1} C(N,i)(q-1)^i i.
inline CostPair quasi_perfect_bounds(const LinearCode& code) {
  if (code.classification != CodeClass::QuasiPerfect) {
    throw ValidationError("quasi-perfect bounds requested for a " + to_string(code.classification) + " code");
  }
  const std::uint64_t q = code.q();
  const std::uint64_t t = code.tau;
  const std::uint64_t extra = checked_mul(binomial(code.n, t + 1), checked_pow(q - 1, t + 1));
  return {checked_add(per_row_leader_count(q, code.n, t), extra), ball_weight_sum(q, code.n, t + 1)};
}

/// Every applicable bound for a planned scheme, next to its measured costs.
struct BoundReport {
  std::size_t tau = 0;
  std::size_t rho = 0;
  Rational mu_tau{1, 1};
  CodeClass classification = CodeClass::Other;
  std::uint64_t lambda_ub = 0;
  std::uint64_t gamma_ub = 0;
  std::optional<std::uint64_t> lambda_lb;
  std::optional<std::uint64_t> gamma_lb;
  std::optional<std::uint64_t> qp_lambda_ub;
  std::optional<std::uint64_t> qp_gamma_ub;
  std::uint64_t measured_lambda = 0;
  std::uint64_t measured_gamma = 0;
  bool distinct_columns = true;

  /// Names of violated bounds; empty when all applicable bounds hold. The
  /// bounds presume distinct demand columns, so nothing is checked otherwise.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (!distinct_columns) return out;
    if (measured_lambda > lambda_ub) out.emplace_back("lambda_ub");
    if (measured_gamma > gamma_ub) out.emplace_back("gamma_ub");
    if (lambda_lb && measured_lambda < *lambda_lb) out.emplace_back("lambda_lb");
    if (gamma_lb && measured_gamma < *gamma_lb) out.emplace_back("gamma_lb");
    if (qp_lambda_ub && measured_lambda >= *qp_lambda_ub) out.emplace_back("qp_lambda_ub");
    if (qp_gamma_ub && measured_gamma >= *qp_gamma_ub) out.emplace_back("qp_gamma_ub");
    return out;
  }
};

inline BoundReport evaluate_bounds(const ComputingScheme& scheme, const LinearCode& code,
                                   bool distinct_columns = true) {
  BoundReport r;
  r.tau = code.tau;
  r.rho = code.rho;
  r.mu_tau = code.mu_tau;
  r.classification = code.classification;
  const std::uint64_t l = scheme.subfunctions();
  r.lambda_ub = bound_lambda(code, l);
  r.gamma_ub = bound_gamma(code, l);
  r.distinct_columns = distinct_columns;
  if (distinct_columns && l == checked_pow(code.q(), code.redundancy)) {
    const auto lb = lower_bounds_maximal(code);
    r.lambda_lb = lb.lambda;
    r.gamma_lb = lb.gamma;
  }
  if (code.classification == CodeClass::QuasiPerfect) {
    const auto qp = quasi_perfect_bounds(code);
    r.qp_lambda_ub = qp.lambda;
    r.qp_gamma_ub = qp.gamma;
  }
  r.measured_lambda = scheme.lambda;
  r.measured_gamma = scheme.gamma;
  return r;
}

}  // namespace decomp
