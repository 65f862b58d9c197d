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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sg::sweep {

struct SweepConfig {
  int n = 4;
  std::vector<int> k_list{1, 2, 3};
  int noise_points = 101;
  double theta = 0.5;
  bool noisy = true;  // "none": no switch
  bool f1 = true;
  bool f2 = true;
  std::string output_path;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Parses "none,f1,f2" style lists into cfg; throws std::invalid_argument.
void set_frameworks(SweepConfig& cfg, const std::string& list);
/// Parses "1,2,3"; throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& list);
/// Applies key=value lines (n, k, noise_points, theta, frameworks, out) on top
/// of cfg. Blank lines and lines starting with '#' are ignored.
void apply_config_file(SweepConfig& cfg, std::istream& in);

struct SweepRow {
  std::size_t d = 0;
  int k = 0;
  double one_minus_t = 0.0;
  double theta = 0.5;
  double p_ideal = 0.0;
  std::optional<double> p_noisy;
  std::optional<double> p_f1;
  std::optional<double> p_f2;
};

double noise_value(int index, int noise_points);

/// One row per (k, noise point), ordered by k then noise.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

inline constexpr const char* kCsvHeader = "d,k,one_minus_t,theta,p_ideal,p_noisy,p_f1,p_f2";
std::string format_number(double v);
std::string format_row(const SweepRow& row);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace sg::sweep
