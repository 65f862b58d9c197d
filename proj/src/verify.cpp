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

#include "switchgrover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <utility>

#include "switchgrover/channels.hpp"
#include "switchgrover/framework1.hpp"
#include "switchgrover/framework2.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/oracle.hpp"
#include "switchgrover/parallel.hpp"
#include "switchgrover/qswitch.hpp"

namespace sg::verify {

namespace {

constexpr double kExact = 1e-12;
constexpr double kFramework = 1e-10;
constexpr double kPrinted = 1e-8;
constexpr double kRounding = 1e-15;

using Task = std::function<VerificationReport()>;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string tag(int n, int k, double t, double theta) {
  std::string s = "n" + std::to_string(n);
  if (k >= 0) s += "/k" + std::to_string(k);
  if (t >= 0.0) s += fmt("/t%g", t);
  if (theta >= 0.0) s += fmt("/theta%g", theta);
  return s;
}

NoiseParams jittered(double t, double jitter) {
  double v = t + jitter;
  if (v > 1.0) v = t - jitter;
  return NoiseParams(std::clamp(v, 0.0, 1.0));
}

std::size_t switch_dense_dim(int k, std::size_t d) { return (std::size_t{1} << k) * d; }

bool dense_ok(int k, std::size_t d) {
  return k >= 0 && k <= kMaxSwitchLevels && k <= oracle::kMaxIterations && switch_dense_dim(k, d) <= kMaxDenseDim;
}

class CaseBuilder {
 public:
  explicit CaseBuilder(const VerifyGrid& grid) : grid_(grid) {}

  std::uint64_t next_seed() { return grid_.seed + counter_++; }

  void add(Task task) { tasks_.push_back(std::move(task)); }

  std::vector<VerificationReport> run() {
    std::vector<VerificationReport> out(tasks_.size());
    parallel_for(tasks_.size(), [&](std::size_t i) {
      try {
        out[i] = tasks_[i]();
      } catch (const std::exception& e) {
        out[i] = make_report("error/" + std::to_string(i), std::nan(""), 0.0, "exception", e.what());
      }
    });
    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.case_id < b.case_id; });
    return out;
  }

 private:
  const VerifyGrid& grid_;
  std::uint64_t counter_ = 0;
  std::vector<Task> tasks_;
};

void add_channel_cases(CaseBuilder& b, const VerifyGrid& g) {
  for (int n : g.qubits) {
    const std::size_t d = std::size_t{1} << n;
    {
      const auto seed = b.next_seed();
      b.add([=] {
        const GroverConfig cfg(n, d - 1);
        const ComplexMatrix gu = grover_unitary(cfg);
        const double err = max_abs_diff(gu * gu.adjoint(), identity(d));
        return make_report("grover.unitarity/" + tag(n, -1, -1, -1), err, kExact, "G G^dagger", "I", seed);
      });
    }
    {
      const auto seed = b.next_seed();
      b.add([=] {
        const UnitaryBasis basis = pauli_basis(n);
        const ComplexMatrix m = random_matrix(d, seed);
        double err = max_abs_diff(twirl(m, basis), m.trace() * maximally_mixed(d));
        err = std::max(err, max_abs_diff(expand_in_basis(m, basis), m));
        return make_report("channel.twirl/" + tag(n, -1, -1, -1), err, kExact, "Pauli twirl and expansion",
                           "Tr(M) I/d and M", seed);
      });
    }
    for (std::size_t i = 0; i < g.ts.size(); ++i) {
      const double t1 = g.ts[i];
      const double t2 = g.ts[(i + 1) % g.ts.size()];
      const auto seed = b.next_seed();
      b.add([=] {
        const ComplexMatrix rho = random_density(d, seed);
        const KrausChannel a = depolarizing_kraus(NoiseParams(t1), KrausSplit::kPlain, d);
        const KrausChannel c = depolarizing_kraus(NoiseParams(t2), KrausSplit::kPlain, d);
        const KrausChannel ac = depolarizing_kraus(NoiseParams(t1 * t2), KrausSplit::kPlain, d);
        const ComplexMatrix lhs = apply_kraus_operator(a, apply_kraus_operator(c, rho));
        const ComplexMatrix rev = apply_kraus_operator(c, apply_kraus_operator(a, rho));
        const ComplexMatrix rhs = apply_kraus_operator(ac, rho);
        const double err = std::max(max_abs_diff(lhs, rhs), max_abs_diff(lhs, rev));
        return make_report(std::string("channel.semigroup/") + tag(n, -1, t1, -1) + fmt("/u%g", t2), err,
                           kExact, "D_t1 D_u and D_u D_t1", "D_(t1 u)", seed);
      });
    }
    for (double t : g.ts) {
      const auto seed = b.next_seed();
      b.add([=] {
        const NoiseParams p(t);
        const KrausChannel plain = depolarizing_kraus(p, KrausSplit::kPlain, d);
        const KrausChannel half = depolarizing_kraus(p, KrausSplit::kSqrtSplit, d);
        double err = std::max(plain.completeness_error(), half.completeness_error());
        const ComplexMatrix rho = random_density(d, seed);
        err = std::max(err, max_abs_diff(apply_kraus_operator(plain, rho), depolarize_operator(rho, p)));
        if (d <= kBruteForceMaxDim) {
          err = std::max(err, max_abs_diff(apply_kraus_operator(compose(half, half), rho), depolarize_operator(rho, p)));
          err = std::max(err, switch_kraus(half, half).completeness_error());
        }
        return make_report("channel.kraus/" + tag(n, -1, t, -1), err, kExact,
                           "Kraus sums and completeness", "affine depolarizing map", seed);
      });
    }
  }
}

void add_noisy_cases(CaseBuilder& b, const VerifyGrid& g) {
  for (int n : g.qubits) {
    const std::size_t d = std::size_t{1} << n;
    if (d > oracle::kMaxDim) continue;
    for (int k : g.ks) {
      if (k < 0 || k > oracle::kMaxIterations) continue;
      for (double t : g.ts) {
        const auto seed = b.next_seed();
        b.add([=] {
          const GroverConfig cfg(n, seed % d);
          const DensityMatrix sim = oracle::simulate_noisy_grover(k, NoiseParams(t), cfg);
          const double tk = std::pow(t, k);
          const ComplexMatrix expected = tk * ideal_state(k, cfg).mat() + (1.0 - tk) * maximally_mixed(d);
          double err = max_abs_diff(sim.mat(), expected);
          const double closed = noisy_success_probability(k, jittered(t, g.t_jitter), d);
          err = std::max(err, std::abs(sim.population(cfg.marked()) - closed));
          if (std::isnan(closed)) err = closed;
          return make_report("noisy.oracle/" + tag(n, k, t, -1), err, kExact, "Kraus-sum evolution",
                             "t^k rho(k) + (1 - t^k) I/d", seed);
        });
        b.add([=] {
          const double p = noisy_success_probability(k, jittered(t, g.t_jitter), d);
          const double angle = (2.0 * k + 1.0) * std::asin(1.0 / std::sqrt(static_cast<double>(d)));
          const double bound = std::pow(t, k) * std::sin(angle) * std::sin(angle);
          const double err = std::isnan(p) ? p : std::max(0.0, bound - p);
          return make_report("noisy.lower_bound/" + tag(n, k, t, -1), err, kRounding, "p_noisy",
                             "t^k sin^2((2k+1) asin(1/sqrt d))");
        });
      }
    }
  }
}

void add_switch_cases(CaseBuilder& b, const VerifyGrid& g) {
  for (int n : g.qubits) {
    const std::size_t d = std::size_t{1} << n;
    if (d > kBruteForceMaxDim) continue;
    for (double t : g.ts) {
      for (double theta : g.thetas) {
        const auto seed = b.next_seed();
        b.add([=] {
          const NoiseParams p(t);
          const ControlSpec spec(theta);
          const DensityMatrix rho(random_density(d, seed));
          const KrausChannel half = depolarizing_kraus(p, KrausSplit::kSqrtSplit, d);
          const JointState brute = apply_switch(rho, spec, switch_kraus(half, half));
          const JointState swapped = apply_switch(rho, spec, switch_kraus_swapped_indices(half, half));
          const JointState closed = apply_switch_closed_form(rho, spec, p);
          const double err = std::max(max_abs_diff(brute.mat(), closed.mat()), max_abs_diff(swapped.mat(), closed.mat()));
          return make_report("switch.closed_form/" + tag(n, -1, t, theta), err, kExact,
                             "explicit switch Kraus pairs", "closed-form switch blocks", seed);
        });
      }
    }
  }
}

void add_framework1_cases(CaseBuilder& b, const VerifyGrid& g) {
  for (int n : g.qubits) {
    const std::size_t d = std::size_t{1} << n;
    if (d > oracle::kMaxDim) continue;
    for (double t : g.ts) {
      for (double theta : g.thetas) {
        if (theta == 0.5) {
          const auto seed = b.next_seed();
          b.add([=] {
            const GroverConfig cfg(n, seed % d);
            const F1StepResult step =
                framework1_step(DensityMatrix(random_density(d, seed)), NoiseParams(t), ControlSpec(theta), cfg);
            const double err = std::abs(step.f_value - f_xi(jittered(t, g.t_jitter), d));
            return make_report("f1.f_xi/" + tag(n, -1, t, theta), err, kFramework, "fitted weight after one step",
                               "f_xi closed form", seed);
          });
        }
        for (int k : g.ks) {
          if (k < 0 || k > oracle::kMaxIterations) continue;
          b.add([=] {
            const GroverConfig cfg(n, 0);
            const ControlSpec spec(theta);
            const double sim = oracle::simulate_framework(oracle::Framework::kStepwise, k, NoiseParams(t), spec, cfg);
            const bool closed = theta == 0.5;
            const double other = closed ? p_framework1(k, jittered(t, g.t_jitter), d)
                                        : p_framework1_sim(k, jittered(t, g.t_jitter), spec, cfg);
            const double err = std::isnan(other) ? other : std::abs(sim - other);
            return make_report("f1.p_xi/" + tag(n, k, t, theta), err, kFramework, "oracle stepwise protocol",
                               closed ? "P_xi closed form" : "framework-1 simulation");
          });
        }
      }
    }
  }
}

void add_framework2_cases(CaseBuilder& b, const VerifyGrid& g) {
  for (int n : g.qubits) {
    const std::size_t d = std::size_t{1} << n;
    for (double t : g.ts) {
      for (double theta : g.thetas) {
        for (int k : g.ks) {
          if (!dense_ok(k, d)) continue;
          if (k >= 1) {
            b.add([=] {
              const GroverConfig cfg(n, 0);
              const auto traj = framework2_trajectory(k, NoiseParams(t), ControlSpec(theta), cfg);
              const double err = max_abs_diff(project_all_plus(traj.back()),
                                              project_all_plus_recursive(traj, jittered(t, g.t_jitter), cfg));
              return make_report("f2.recursion/" + tag(n, k, t, theta), err, kFramework, "direct |+>^k projection",
                                 "M_k recursion");
            });
          }
          b.add([=] {
            const GroverConfig cfg(n, 0);
            const ControlSpec spec(theta);
            const double dense = p_framework2_sim(k, NoiseParams(t), spec, cfg);
            const double sym = p_framework2_symbolic(k, jittered(t, g.t_jitter), spec, d);
            const double err = std::isnan(sym) ? sym : std::abs(dense - sym);
            return make_report("f2.symbolic/" + tag(n, k, t, theta), err, kFramework, "dense block register",
                               "symbolic (alpha, beta) grid");
          });
          if (d <= oracle::kMaxDim) {
            b.add([=] {
              const GroverConfig cfg(n, 0);
              const ControlSpec spec(theta);
              const double sim = oracle::simulate_framework(oracle::Framework::kDeferred, k, NoiseParams(t), spec, cfg);
              const double dense = p_framework2_sim(k, jittered(t, g.t_jitter), spec, cfg);
              return make_report("f2.oracle/" + tag(n, k, t, theta), std::abs(sim - dense), kFramework,
                                 "oracle deferred protocol", "dense block register");
            });
          }
        }
        if (d > oracle::kMaxDim) continue;
        b.add([=] {
          const GroverConfig cfg(n, 0);
          const ControlSpec spec(theta);
          const double f1 = oracle::simulate_framework(oracle::Framework::kStepwise, 1, NoiseParams(t), spec, cfg);
          const double f2 = oracle::simulate_framework(oracle::Framework::kDeferred, 1, NoiseParams(t), spec, cfg);
          return make_report("f1f2.k1/" + tag(n, 1, t, theta), std::abs(f1 - f2), kExact, "oracle stepwise k=1",
                             "oracle deferred k=1");
        });
        if (theta != 0.5) continue;
        b.add([=] {
          const GroverConfig cfg(n, 0);
          const double sim = oracle::simulate_framework(oracle::Framework::kDeferred, 1, NoiseParams(t),
                                                        ControlSpec(theta), cfg);
          const double closed = p_framework2_closed(1, jittered(t, g.t_jitter), d);
          const double err = std::isnan(closed) ? closed : std::abs(sim - closed);
          return make_report("f2.closed_k1/" + tag(n, 1, t, theta), err, kFramework, "oracle deferred protocol",
                             "P_omega k=1 closed form");
        });
        b.add([=] {
          const GroverConfig cfg(n, 0);
          const ControlSpec spec(theta);
          const double sim = oracle::simulate_framework(oracle::Framework::kDeferred, 2, NoiseParams(t), spec, cfg);
          const double expr = p_framework2_k2_expression(jittered(t, g.t_jitter), d, spec, K2Grouping::kResolved);
          const double err = std::isnan(expr) ? expr : std::abs(sim - expr);
          return make_report("f2.k2_expression/" + tag(n, 2, t, theta), err, kPrinted, "oracle deferred protocol",
                             "k=2 measurement expression");
        });
      }
    }
  }
}

}  // namespace

VerificationReport make_report(std::string case_id, double max_abs_error, double tolerance, std::string lhs_source,
                               std::string rhs_source, std::uint64_t seed) {
  VerificationReport r;
  r.case_id = std::move(case_id);
  r.max_abs_error = max_abs_error;
  r.tolerance = tolerance;
  r.passed = max_abs_error <= tolerance;
  r.lhs_source = std::move(lhs_source);
  r.rhs_source = std::move(rhs_source);
  r.seed = seed;
  return r;
}

VerifyGrid quick_grid() {
  VerifyGrid g;
  g.qubits = {1, 2, 4};
  g.ks = {0, 1, 2, 3};
  g.ts = {0.0, 0.25, 0.5, 0.75, 1.0};
  g.thetas = {0.5, 0.3};
  return g;
}

VerifyGrid full_grid() {
  VerifyGrid g;
  g.qubits = {1, 2, 3, 4};
  g.ks = {0, 1, 2, 3, 4};
  g.ts = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  g.thetas = {0.5, 0.0, 0.2, 0.8, 1.0};
  return g;
}

VerifyGrid preset(const std::string& name) {
  if (name == "quick") return quick_grid();
  if (name == "full") return full_grid();
  throw std::invalid_argument("unknown verification preset '" + name + "' (expected quick or full)");
}

std::vector<VerificationReport> verify_all(const VerifyGrid& grid) {
  if (grid.empty()) return {};
  CaseBuilder b(grid);
  add_channel_cases(b, grid);
  add_noisy_cases(b, grid);
  add_switch_cases(b, grid);
  add_framework1_cases(b, grid);
  add_framework2_cases(b, grid);
  return b.run();
}

std::vector<VerificationReport> published_formula_claims(const VerifyGrid& grid) {
  if (grid.empty()) return {};
  CaseBuilder b(grid);
  for (int n : grid.qubits) {
    const std::size_t d = std::size_t{1} << n;
    if (d > oracle::kMaxDim) continue;
    for (double t : grid.ts) {
      for (int k : {2, 3}) {
        b.add([=] {
          const double sim = oracle::simulate_framework(oracle::Framework::kDeferred, k, NoiseParams(t),
                                                        ControlSpec(0.5), GroverConfig(n, 0));
          const double closed = p_framework2_closed(k, NoiseParams(t), d);
          return make_report("claim.p_omega_display/" + tag(n, k, t, 0.5), std::abs(sim - closed), kPrinted,
                             "oracle deferred protocol", "printed P_omega display");
        });
      }
      b.add([=] {
        const double sim = oracle::simulate_framework(oracle::Framework::kDeferred, 2, NoiseParams(t),
                                                      ControlSpec(0.5), GroverConfig(n, 0));
        const double expr = p_framework2_k2_expression(NoiseParams(t), d, ControlSpec(0.5), K2Grouping::kAsTypeset);
        return make_report("claim.k2_as_typeset/" + tag(n, 2, t, 0.5), std::abs(sim - expr), kPrinted,
                           "oracle deferred protocol", "k=2 expression, typeset grouping");
      });
    }
  }
  return b.run();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
}

std::string format_report(const VerificationReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s %-44s err=%.3e tol=%.0e seed=%llu  [%s | %s]", r.passed ? "PASS" : "FAIL",
                r.case_id.c_str(), r.max_abs_error, r.tolerance, static_cast<unsigned long long>(r.seed),
                r.lhs_source.c_str(), r.rhs_source.c_str());
  return buf;
}

}  // namespace sg::verify
