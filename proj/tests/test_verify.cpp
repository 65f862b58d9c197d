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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "switchgrover/hooks.hpp"
#include "switchgrover/verify.hpp"

namespace sg::verify {
namespace {

VerifyGrid small_grid() {
  VerifyGrid g;
  g.qubits = {1, 2};
  g.ks = {0, 1, 2};
  g.ts = {0.0, 0.5, 1.0};
  g.thetas = {0.5, 0.25};
  return g;
}

TEST(MakeReport, PassedIffWithinTolerance) {
  EXPECT_TRUE(make_report("a", 1e-13, 1e-12, "l", "r").passed);
  EXPECT_TRUE(make_report("a", 1e-12, 1e-12, "l", "r").passed);
  EXPECT_FALSE(make_report("a", 2e-12, 1e-12, "l", "r").passed);
  EXPECT_FALSE(make_report("a", std::nan(""), 1e-12, "l", "r").passed);
}

TEST(VerifyAll, EmptyGridGivesNoReports) {
  EXPECT_TRUE(verify_all(VerifyGrid{}).empty());
  VerifyGrid g = small_grid();
  g.ts.clear();
  EXPECT_TRUE(verify_all(g).empty());
  EXPECT_TRUE(published_formula_claims(VerifyGrid{}).empty());
}

TEST(VerifyAll, SmallGridPassesAndIsSorted) {
  const auto reports = verify_all(small_grid());
  ASSERT_FALSE(reports.empty());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_TRUE(reports[i].passed) << format_report(reports[i]);
    EXPECT_EQ(reports[i].passed, reports[i].max_abs_error <= reports[i].tolerance);
    if (i > 0) EXPECT_LT(reports[i - 1].case_id, reports[i].case_id);
  }
}

TEST(VerifyAll, CoversEveryCaseFamily) {
  const auto reports = verify_all(small_grid());
  for (const char* prefix : {"grover.unitarity/", "channel.twirl/", "channel.semigroup/", "channel.kraus/",
                             "noisy.oracle/", "noisy.lower_bound/", "switch.closed_form/", "f1.f_xi/", "f1.p_xi/",
                             "f2.recursion/", "f2.symbolic/", "f2.oracle/", "f1f2.k1/", "f2.closed_k1/",
                             "f2.k2_expression/"}) {
    bool found = false;
    for (const auto& r : reports) found = found || r.case_id.rfind(prefix, 0) == 0;
    EXPECT_TRUE(found) << prefix;
  }
}

TEST(VerifyAll, BitReproducible) {
  const auto a = verify_all(small_grid());
  const auto b = verify_all(small_grid());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].case_id, b[i].case_id);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].max_abs_error, b[i].max_abs_error);
  }
}

TEST(VerifyAll, JitterIsDetected) {
  VerifyGrid g = small_grid();
  g.t_jitter = 1e-3;
  EXPECT_FALSE(all_passed(verify_all(g)));
}

TEST(VerifyAll, PoisonedClosedFormsFail) {
  hooks::ScopedClosedFormPoison poison;
  EXPECT_FALSE(all_passed(verify_all(small_grid())));
}

TEST(Presets, Names) {
  EXPECT_FALSE(preset("quick").empty());
  EXPECT_GT(full_grid().ts.size(), quick_grid().ts.size());
  EXPECT_THROW(preset("huge"), std::invalid_argument);
}

TEST(PublishedClaims, SecondIterationDisplayDiffersAtSixteen) {
  VerifyGrid g;
  g.qubits = {4};
  g.ks = {2};
  g.ts = {0.5};
  g.thetas = {0.5};
  const auto claims = published_formula_claims(g);
  ASSERT_EQ(claims.size(), 3u);
  for (const auto& c : claims) {
    EXPECT_FALSE(c.passed) << format_report(c);
    EXPECT_GT(c.max_abs_error, 1e-6);
  }
}

TEST(FormatReport, ContainsStatusAndCase) {
  const std::string s = format_report(make_report("x/y", 0.0, 1e-12, "lhs", "rhs", 7));
  EXPECT_EQ(s.rfind("PASS", 0), 0u);
  EXPECT_NE(s.find("x/y"), std::string::npos);
  EXPECT_NE(s.find("seed=7"), std::string::npos);
}

}  // namespace
}  // namespace sg::verify
