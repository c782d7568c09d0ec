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

#include <filesystem>
#include <string>

#include "json.hpp"

#include "decomp/bounds.hpp"
#include "decomp/error.hpp"
#include "decomp/matrix_io.hpp"
#include "decomp/scheme.hpp"

// A scheme bundle is a directory holding D.txt, E.txt, F.txt (matrix text
// format) and scheme.json with the derived job sets, audiences, costs and
// bound report. Indices in scheme.json are 0-based.

namespace decomp {

inline nlohmann::ordered_json bounds_to_json(const BoundReport& b) {
  nlohmann::ordered_json j;
  j["tau"] = b.tau;
  j["rho"] = b.rho;
  j["mu_tau"] = b.mu_tau.str();
  j["class"] = to_string(b.classification);
  j["lambda_ub"] = b.lambda_ub;
  j["gamma_ub"] = b.gamma_ub;
  if (b.lambda_lb) j["lambda_lb"] = *b.lambda_lb;
  if (b.gamma_lb) j["gamma_lb"] = *b.gamma_lb;
  if (b.qp_lambda_ub) j["qp_lambda_ub"] = *b.qp_lambda_ub;
  if (b.qp_gamma_ub) j["qp_gamma_ub"] = *b.qp_gamma_ub;
  j["measured_lambda"] = b.measured_lambda;
  j["measured_gamma"] = b.measured_gamma;
  j["distinct_columns"] = b.distinct_columns;
  j["violations"] = b.violations();
  return j;
}

inline nlohmann::ordered_json scheme_to_json(const ComputingScheme& s, const BoundReport& b) {
  nlohmann::ordered_json j;
  j["q"] = s.q();
  j["users"] = s.users();
  j["servers"] = s.servers();
  j["subfunctions"] = s.subfunctions();
  j["gamma"] = s.gamma;
  j["lambda"] = s.lambda;
  j["jobs"] = s.jobs;
  j["audiences"] = s.audiences;
  j["bounds"] = bounds_to_json(b);
  return j;
}

inline void write_bundle(const std::filesystem::path& dir, const ComputingScheme& s, const BoundReport& b) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create " + dir.string() + ": " + ec.message());
  write_text_file(dir / "D.txt", serialize_matrix(s.decoding));
  write_text_file(dir / "E.txt", serialize_matrix(s.encoding));
  write_text_file(dir / "F.txt", serialize_matrix(s.demand));
  write_text_file(dir / "scheme.json", scheme_to_json(s, b).dump(2) + "\n");
}

/// Reloads a bundle. Job sets and costs are re-derived from the matrices and
/// checked against scheme.json.
inline ComputingScheme read_bundle(const std::filesystem::path& dir) {
  ComputingScheme s = assemble_scheme(read_matrix_file(dir / "F.txt"), read_matrix_file(dir / "D.txt"),
                                      read_matrix_file(dir / "E.txt"));
  const auto meta_path = dir / "scheme.json";
  if (std::filesystem::exists(meta_path)) {
    nlohmann::json meta;
    try {
      meta = nlohmann::json::parse(read_text_file(meta_path));
      if (meta.at("gamma").get<std::uint64_t>() != s.gamma || meta.at("lambda").get<std::uint64_t>() != s.lambda) {
        throw ValidationError("scheme.json costs disagree with E.txt");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("malformed scheme.json: ") + e.what());
    }
  }
  return s;
}

}  // namespace decomp
