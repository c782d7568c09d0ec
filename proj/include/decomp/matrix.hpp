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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decomp/error.hpp"
#include "decomp/field.hpp"

namespace decomp {

/**
 * Dense row-major matrix over a prime field GF(q).
 *
 * Every stored entry is a reduced residue in [0, q). The modulus travels with
 * the matrix so operands from different fields are rejected rather than
 * silently combined. Vectors are represented as 1xn or nx1 matrices.
 */
class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  /// Takes ownership of row-major entries; each must already be in [0, q).
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ValidationError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (Residue e : entries_) {
      if (e >= field_.q()) {
        throw ValidationError("entry " + std::to_string(e) + " out of range for GF(" + std::to_string(field_.q()) +
                              ")");
      }
    }
  }

  /// Builds from nested rows; signed values are reduced mod q.
  static FieldMatrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r);
    return from_rows(field, tmp);
  }

  static FieldMatrix from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Residue> entries;
    entries.reserve(r * c);
    const auto q = static_cast<long long>(field.q());
    for (const auto& row : rows) {
      if (row.size() != c) throw ValidationError("ragged rows in matrix literal");
      for (long long v : row) entries.push_back(static_cast<Residue>(((v % q) + q) % q));
    }
    return FieldMatrix(field, r, c, std::move(entries));
  }

  static FieldMatrix column_vector(FieldSpec field, std::span<const Residue> values) {
    return FieldMatrix(field, values.size(), 1, std::vector<Residue>(values.begin(), values.end()));
  }

  static FieldMatrix identity(FieldSpec field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
  }

  FieldSpec field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_vector() const noexcept { return rows_ == 1 || cols_ == 1; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

  Residue at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
    return entries_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, Residue v) {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
    if (v >= q()) throw ValidationError("entry out of range for field");
    entries_[r * cols_ + c] = v;
  }

  std::span<const Residue> entries() const noexcept { return entries_; }

  std::span<const Residue> row(std::size_t r) const noexcept {
    return std::span<const Residue>(entries_).subspan(r * cols_, cols_);
  }

  std::vector<Residue> column(std::size_t c) const {
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = entries_[r * cols_ + c];
    return out;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
    return t;
  }

  /// Matrix formed by the given columns, in the given order.
  FieldMatrix select_columns(std::span<const std::size_t> idx) const {
    FieldMatrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) out.entries_[r * idx.size() + j] = at(r, idx[j]);
    return out;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

inline void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field() != b.field()) {
    throw ValidationError("field mismatch: GF(" + std::to_string(a.q()) + ") vs GF(" + std::to_string(b.q()) + ")");
  }
}

inline FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw ValidationError("dimension mismatch in product: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  const std::uint64_t q = a.q();
  std::vector<Residue> out(a.rows() * b.cols(), 0);
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * brow[j]) % q;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] = static_cast<Residue>(acc[j]);
  }
  return FieldMatrix(a.field(), a.rows(), b.cols(), std::move(out));
}

inline FieldMatrix mat_add(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("dimension mismatch in sum");
  std::vector<Residue> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_add(a.entries()[i], b.entries()[i], a.q());
  return FieldMatrix(a.field(), a.rows(), a.cols(), std::move(out));
}

inline std::size_t weight(std::span<const Residue> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue e) { return e != 0; }));
}

/// Hamming weight of a row or column vector.
inline std::size_t weight(const FieldMatrix& v) {
  if (!v.is_vector()) throw ValidationError("weight() expects a vector");
  return weight(v.entries());
}

inline std::vector<std::size_t> row_weights(const FieldMatrix& m) {
  std::vector<std::size_t> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = weight(m.row(r));
  return out;
}

inline std::size_t total_weight(const FieldMatrix& m) noexcept { return weight(m.entries()); }

/// Support (indices of non-zero entries) of a span, ascending.
inline std::vector<std::size_t> support(std::span<const Residue> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(i);
  return out;
}

/// Row reduction result: reduced row echelon form plus its pivot columns.
struct RowEchelon {
  FieldMatrix rref;
  std::vector<std::size_t> pivots;
};

inline RowEchelon row_reduce(const FieldMatrix& m) {
  const std::uint32_t q = m.q();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Residue> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Residue& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(sel, j), at(pivot_row, j));
    const Residue inv = field_inv(at(pivot_row, c), q);
    for (std::size_t j = 0; j < cols; ++j) at(pivot_row, j) = field_mul(at(pivot_row, j), inv, q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || at(r, c) == 0) continue;
      const Residue factor = at(r, c);
      for (std::size_t j = 0; j < cols; ++j)
        at(r, j) = field_sub(at(r, j), field_mul(factor, at(pivot_row, j), q), q);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {FieldMatrix(m.field(), rows, cols, std::move(a)), std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of the right null space {x : m x = 0}, one basis vector per row.
inline FieldMatrix null_space_basis(const FieldMatrix& m) {
  const auto [r, pivots] = row_reduce(m);
  const std::uint32_t q = m.q();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FieldMatrix basis(m.field(), free_cols.size(), n);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t f = free_cols[b];
    basis.set(b, f, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.set(b, pivots[i], field_neg(r(i, f), q));
  }
  return basis;
}

}  // namespace decomp
