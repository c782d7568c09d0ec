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
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "decomp/budget.hpp"
#include "decomp/combinatorics.hpp"
#include "decomp/error.hpp"
#include "decomp/matrix.hpp"
#include "decomp/syndrome_table.hpp"

namespace decomp {

enum class CodeClass { Perfect, QuasiPerfect, Other };

inline std::string to_string(CodeClass c) {
  switch (c) {
    case CodeClass::Perfect:
      return "Perfect";
    case CodeClass::QuasiPerfect:
      return "QuasiPerfect";
    case CodeClass::Other:
      return "Other";
  }
  return "Other";
}

/// Perfect iff rho == tau, quasi-perfect iff rho == tau + 1.
constexpr CodeClass classify(std::size_t tau, std::size_t rho) noexcept {
  if (rho == tau) return CodeClass::Perfect;
  if (rho == tau + 1) return CodeClass::QuasiPerfect;
  return CodeClass::Other;
}

/**
 * Linear code C_H given by a full-rank K x N parity-check matrix H, together
 * with its exactly computed parameters.
 *
 * `redundancy` is K (rows of H), `k_dim` is the dimension N - K. The packing
 * density mu_tau = q^(N-K) V_q(N, tau) / q^N = V_q(N, tau) / q^K is kept as
 * an exact rational. The syndrome table used to find rho is retained so that
 * planning does not rebuild it.
 */
struct LinearCode {
  FieldMatrix parity_check;
  std::size_t n = 0;
  std::size_t redundancy = 0;
  std::size_t k_dim = 0;
  std::size_t d = 0;
  std::size_t tau = 0;
  std::size_t rho = 0;
  Rational mu_tau{1, 1};
  CodeClass classification = CodeClass::Other;
  std::shared_ptr<const SyndromeTable> table{};

  std::uint32_t q() const noexcept { return parity_check.q(); }
};

/// Minimum weight over all non-zero codewords, by enumerating the null space of h.
inline std::size_t minimum_distance(const FieldMatrix& h, const Budget& budget = {}) {
  const FieldMatrix basis = null_space_basis(h);
  const std::size_t dim = basis.rows();
  const std::size_t n = h.cols();
  const std::uint32_t q = h.q();
  if (dim == 0) throw ValidationError("code has no non-zero codewords (N == K)");
  budget.require_codewords(q, dim);

  // Odometer over message digits; moving the counter by one adds basis rows
  // 0..i where i is the digit that increments (lower digits wrap to 0, which
  // also adds their row once since q * b == 0).
  std::vector<Residue> digits(dim, 0);
  std::vector<Residue> word(n, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (;;) {
    std::size_t i = 0;
    while (i < dim && digits[i] == q - 1) {
      digits[i] = 0;
      ++i;
    }
    if (i == dim) break;
    ++digits[i];
    for (std::size_t b = 0; b <= i; ++b) {
      const auto row = basis.row(b);
      for (std::size_t j = 0; j < n; ++j) word[j] = field_add(word[j], row[j], q);
    }
    best = std::min(best, weight(word));
  }
  return best;
}

/// Builds the code for parity-check h and computes d, tau, rho, mu_tau exactly.
/// A prebuilt syndrome table for the same h (e.g. loaded from a cache) is
/// reused instead of rebuilding it.
inline LinearCode from_parity_check(const FieldMatrix& h, const Budget& budget = {},
                                    std::shared_ptr<const SyndromeTable> prebuilt = nullptr) {
  if (h.rows() == 0) throw ValidationError("parity-check matrix has no rows");
  if (rank(h) != h.rows()) throw ValidationError("parity-check not full rank");
  if (h.cols() <= h.rows()) throw ValidationError("code has no non-zero codewords (N == K)");
  budget.require_codewords(h.q(), h.cols() - h.rows());
  budget.require_table(h.q(), h.rows());

  LinearCode code{.parity_check = h};
  code.n = h.cols();
  code.redundancy = h.rows();
  code.k_dim = code.n - code.redundancy;
  code.d = minimum_distance(h, budget);
  code.tau = (code.d - 1) / 2;
  if (prebuilt && prebuilt->parity_check() == h) {
    code.table = std::move(prebuilt);
  } else {
    code.table = std::make_shared<const SyndromeTable>(SyndromeTable::build(h, budget));
  }
  code.rho = code.table->covering_radius();
  code.mu_tau = Rational(ball_volume(h.q(), code.n, code.tau), checked_pow(h.q(), code.redundancy));
  code.classification = classify(code.tau, code.rho);
  return code;
}

/// q-ary Hamming code with r parity symbols: one column per projective point
/// of GF(q)^r, normalised to leading coefficient 1, in lexicographic order.
inline FieldMatrix hamming_parity_check(std::uint64_t q, std::size_t r) {
  const FieldSpec field(q);
  if (r < 2) throw ValidationError("Hamming code needs r >= 2");
  const std::uint64_t n = (checked_pow(q, r) - 1) / (q - 1);
  if (n > std::numeric_limits<std::uint32_t>::max()) throw BudgetError("Hamming code too long");
  FieldMatrix h(field, r, n);
  std::size_t col = 0;
  // Enumerate GF(q)^r lexicographically with row 0 most significant.
  std::vector<Residue> v(r, 0);
  for (;;) {
    std::size_t j = r;
    while (j-- > 0) {
      if (v[j] + 1 < q) {
        ++v[j];
        break;
      }
      v[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
    const auto lead = std::find_if(v.begin(), v.end(), [](Residue e) { return e != 0; });
    if (*lead != 1) continue;
    for (std::size_t i = 0; i < r; ++i) h.set(i, col, v[i]);
    ++col;
  }
  return h;
}

inline LinearCode hamming_code(std::uint64_t q, std::size_t r, const Budget& budget = {}) {
  return from_parity_check(hamming_parity_check(q, r), budget);
}

/// The 5 x 11 ternary Golay parity-check matrix of the worked example.
inline FieldMatrix golay_ternary_parity_check() {
  return FieldMatrix::from_rows(FieldSpec(3), {
                                                  {1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0},
                                                  {1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0},
                                                  {1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0},
                                                  {1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0},
                                                  {1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1},
                                              });
}

inline LinearCode golay_ternary(const Budget& budget = {}) {
  return from_parity_check(golay_ternary_parity_check(), budget);
}

/// Binary [23,12,7] Golay code as the cyclic code generated by
/// g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1. Column j of H holds the
/// coefficients of x^j mod g(x), so H c is the remainder of c(x) by g(x).
inline FieldMatrix golay_binary_parity_check() {
  constexpr std::uint32_t g = 0b110001110101;  // bit i = coefficient of x^i
  FieldMatrix h(FieldSpec(2), 11, 23);
  std::uint32_t rem = 1;
  for (std::size_t j = 0; j < 23; ++j) {
    for (std::size_t i = 0; i < 11; ++i) h.set(i, j, (rem >> i) & 1u);
    rem <<= 1;
    if (rem & (1u << 11)) rem ^= g;
  }
  return h;
}

inline LinearCode golay_binary(const Budget& budget = {}) {
  return from_parity_check(golay_binary_parity_check(), budget);
}

/// Repetition code of length n: rows enforce x_i = x_{n-1}.
inline FieldMatrix repetition_parity_check(std::uint64_t q, std::size_t n) {
  const FieldSpec field(q);
  if (n < 2) throw ValidationError("repetition code needs n >= 2");
  FieldMatrix h(field, n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h.set(i, i, 1);
    h.set(i, n - 1, field.q() - 1);
  }
  return h;
}

inline LinearCode repetition_code(std::uint64_t q, std::size_t n, const Budget& budget = {}) {
  return from_parity_check(repetition_parity_check(q, n), budget);
}

/// Binary extended Hamming code [2^r, 2^r - r - 1, 4]: the Hamming parity
/// check with an extra zero column, plus an all-ones overall parity row.
inline FieldMatrix extended_hamming_parity_check(std::size_t r) {
  const FieldMatrix base = hamming_parity_check(2, r);
  FieldMatrix h(base.field(), r + 1, base.cols() + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < base.cols(); ++j) h.set(i, j, base(i, j));
  for (std::size_t j = 0; j < h.cols(); ++j) h.set(r, j, 1);
  return h;
}

inline LinearCode extended_hamming(std::size_t r, const Budget& budget = {}) {
  return from_parity_check(extended_hamming_parity_check(r), budget);
}

}  // namespace decomp
