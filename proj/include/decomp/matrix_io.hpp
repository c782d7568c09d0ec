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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "decomp/error.hpp"
#include "decomp/matrix.hpp"

// Matrix text format:
//
//   q rows cols\n
//   e e ... e\n          (rows lines, cols space-separated residues each)
//
// The JSON form is {"q":..,"rows":..,"cols":..,"entries":[[..],..]}.

namespace decomp {

enum class MatrixFormat { Text, Json };

struct ParseOptions {
  /// Reduce out-of-range (including negative) entries mod q instead of failing.
  bool reduce = false;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline long long parse_integer(std::string_view tok, const char* what) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
  }
  return v;
}

inline Residue to_residue(long long v, std::uint32_t q, const ParseOptions& opts) {
  const auto sq = static_cast<long long>(q);
  if (v >= 0 && v < sq) return static_cast<Residue>(v);
  if (!opts.reduce) {
    throw ValidationError("entry " + std::to_string(v) + " out of range for GF(" + std::to_string(q) + ")");
  }
  return static_cast<Residue>(((v % sq) + sq) % sq);
}

inline std::uint64_t checked_dim(long long v, const char* what) {
  if (v < 0) throw ValidationError(std::string("negative ") + what);
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

inline FieldMatrix parse_matrix(std::string_view text, const ParseOptions& opts = {}) {
  if (text.empty()) throw ValidationError("malformed header: empty input");
  if (text.back() != '\n') throw ValidationError("matrix text must end with a newline");

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  const auto header = detail::split_tokens(lines.front());
  if (header.size() != 3) throw ValidationError("malformed header: expected 'q rows cols'");
  const auto q = detail::checked_dim(detail::parse_integer(header[0], "header"), "modulus");
  const auto rows = detail::checked_dim(detail::parse_integer(header[1], "header"), "row count");
  const auto cols = detail::checked_dim(detail::parse_integer(header[2], "header"), "column count");
  const FieldSpec field(q);

  if (lines.size() < rows + 1) {
    throw ValidationError("wrong entry count: expected " + std::to_string(rows) + " rows, found " +
                          std::to_string(lines.size() - 1));
  }
  std::vector<Residue> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto toks = detail::split_tokens(lines[r + 1]);
    if (toks.size() != cols) {
      throw ValidationError("wrong entry count on row " + std::to_string(r + 1) + ": expected " +
                            std::to_string(cols) + ", found " + std::to_string(toks.size()));
    }
    for (auto t : toks) entries.push_back(detail::to_residue(detail::parse_integer(t, "entry"), field.q(), opts));
  }
  for (std::size_t i = rows + 1; i < lines.size(); ++i) {
    if (!detail::split_tokens(lines[i]).empty()) throw ValidationError("wrong entry count: trailing data");
  }
  return FieldMatrix(field, rows, cols, std::move(entries));
}

/// Canonical text form: single spaces, one row per line, trailing newline.
inline std::string serialize_matrix(const FieldMatrix& m) {
  std::string out = std::to_string(m.q()) + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json matrix_to_json(const FieldMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    entries.push_back(std::vector<Residue>(row.begin(), row.end()));
  }
  return {{"q", m.q()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline FieldMatrix matrix_from_json(const nlohmann::json& j, const ParseOptions& opts = {}) {
  try {
    const FieldSpec field(j.at("q").get<std::uint64_t>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("entries");
    if (!data.is_array() || data.size() != rows) throw ValidationError("wrong entry count: row count mismatch");
    std::vector<Residue> entries;
    entries.reserve(rows * cols);
    for (const auto& row : data) {
      if (!row.is_array() || row.size() != cols) throw ValidationError("wrong entry count: column count mismatch");
      for (const auto& v : row) entries.push_back(detail::to_residue(v.get<long long>(), field.q(), opts));
    }
    return FieldMatrix(field, rows, cols, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
  }
}

inline FieldMatrix parse_matrix_json(std::string_view text, const ParseOptions& opts = {}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(j, opts);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
}

/// Reads a matrix file; a ".json" extension selects the JSON form.
inline FieldMatrix read_matrix_file(const std::filesystem::path& path, const ParseOptions& opts = {}) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".json") return parse_matrix_json(text, opts);
  return parse_matrix(text, opts);
}

}  // namespace decomp
