// Copyright 2026 The switchgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sg::verify {

struct VerificationReport {
  std::string case_id;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // max_abs_error <= tolerance; false for NaN
  std::string lhs_source;
  std::string rhs_source;
  std::uint64_t seed = 0;
};

VerificationReport make_report(std::string case_id, double max_abs_error, double tolerance, std::string lhs_source,
                               std::string rhs_source, std::uint64_t seed = 0);

struct VerifyGrid {
  std::vector<int> qubits;
  std::vector<int> ks;
  std::vector<double> ts;
  std::vector<double> thetas;
  std::uint64_t seed = 20260417;
  /// Added to t on the closed-form side of every comparison; nonzero only for
  /// sensitivity checks.
  double t_jitter = 0.0;

  bool empty() const { return qubits.empty() || ks.empty() || ts.empty() || thetas.empty(); }
};

VerifyGrid quick_grid();
VerifyGrid full_grid();
/// "quick" or "full"; throws std::invalid_argument otherwise.
VerifyGrid preset(const std::string& name);

/// The complete cross-check matrix, one report per case, sorted by case_id.
std::vector<VerificationReport> verify_all(const VerifyGrid& grid);

/// Printed closed-form displays compared against the oracle. These are claims
/// under test and are reported separately from verify_all.
std::vector<VerificationReport> published_formula_claims(const VerifyGrid& grid);

bool all_passed(const std::vector<VerificationReport>& reports);
std::string format_report(const VerificationReport& report);

}  // namespace sg::verify
