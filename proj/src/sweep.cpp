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

#include "switchgrover/sweep.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "switchgrover/channels.hpp"
#include "switchgrover/framework1.hpp"
#include "switchgrover/framework2.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/parallel.hpp"
#include "switchgrover/qswitch.hpp"

namespace sg::sweep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + s + "' is not an integer");
  }
  if (pos != s.size()) throw std::invalid_argument(what + ": '" + s + "' is not an integer");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + s + "' is not a number");
  }
  if (pos != s.size()) throw std::invalid_argument(what + ": '" + s + "' is not a number");
  return v;
}

double p_f2_value(int k, NoiseParams t, const ControlSpec& spec, const GroverConfig& cfg) {
  if ((std::size_t{1} << k) * cfg.dim() <= kMaxDenseDim) return p_framework2_sim(k, t, spec, cfg);
  return p_framework2_symbolic(k, t, spec, cfg.dim());
}

}  // namespace

void SweepConfig::validate() const {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxQubits) + "]");
  if (k_list.empty()) throw std::invalid_argument("k list must not be empty");
  for (int k : k_list) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (f2 && k > kMaxSwitchLevels) {
      throw std::invalid_argument("k must be at most " + std::to_string(kMaxSwitchLevels) + " when f2 is requested");
    }
  }
  if (noise_points < 2) throw std::invalid_argument("noise points must be at least 2");
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must be in [0, 1]");
}

void set_frameworks(SweepConfig& cfg, const std::string& list) {
  cfg.noisy = cfg.f1 = cfg.f2 = false;
  std::stringstream ss(list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "none") {
      cfg.noisy = true;
    } else if (item == "f1") {
      cfg.f1 = true;
    } else if (item == "f2") {
      cfg.f2 = true;
    } else {
      throw std::invalid_argument("unknown framework '" + item + "' (expected none, f1, f2)");
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("framework list must not be empty");
}

std::vector<int> parse_int_list(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item), "k"));
  return out;
}

void apply_config_file(SweepConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") {
      cfg.n = parse_int(value, "n");
    } else if (key == "k") {
      cfg.k_list = parse_int_list(value);
    } else if (key == "noise_points" || key == "noise-points") {
      cfg.noise_points = parse_int(value, "noise_points");
    } else if (key == "theta") {
      cfg.theta = parse_double(value, "theta");
    } else if (key == "frameworks") {
      set_frameworks(cfg, value);
    } else if (key == "out") {
      cfg.output_path = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

double noise_value(int index, int noise_points) {
  return static_cast<double>(index) / static_cast<double>(noise_points - 1);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const GroverConfig grover(cfg.n, 0);
  const std::size_t d = grover.dim();
  const ControlSpec spec(cfg.theta);
  const std::size_t per_k = static_cast<std::size_t>(cfg.noise_points);
  std::vector<SweepRow> rows(cfg.k_list.size() * per_k);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int k = cfg.k_list[idx / per_k];
    const int i = static_cast<int>(idx % per_k);
    SweepRow& row = rows[idx];
    row.d = d;
    row.k = k;
    row.one_minus_t = noise_value(i, cfg.noise_points);
    row.theta = cfg.theta;
    const NoiseParams t = NoiseParams::from_noise_strength(row.one_minus_t);
    row.p_ideal = ideal_success_probability(k, d);
    if (cfg.noisy) row.p_noisy = noisy_success_probability(k, t, d);
    if (cfg.f1) {
      row.p_f1 = cfg.theta == 0.5 ? p_framework1(k, t, d) : p_framework1_sim(k, t, spec, grover);
    }
    if (cfg.f2) row.p_f2 = p_f2_value(k, t, spec, grover);
  });
  return rows;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_row(const SweepRow& row) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  return std::to_string(row.d) + "," + std::to_string(row.k) + "," + format_number(row.one_minus_t) + "," +
         format_number(row.theta) + "," + format_number(row.p_ideal) + "," + opt(row.p_noisy) + "," + opt(row.p_f1) +
         "," + opt(row.p_f2);
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
}

}  // namespace sg::sweep
