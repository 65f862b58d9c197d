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

// Test hook: when armed, every closed-form success-probability function
// returns NaN. The brute-force oracle must produce identical results with
// the hook armed, which is how the suite shows it never calls them.

#pragma once

namespace sg::hooks {

void set_closed_form_poison(bool armed);
bool closed_form_poisoned();

/// Arms the hook for the lifetime of the guard.
class ScopedClosedFormPoison {
 public:
  ScopedClosedFormPoison();
  ~ScopedClosedFormPoison();
  ScopedClosedFormPoison(const ScopedClosedFormPoison&) = delete;
  ScopedClosedFormPoison& operator=(const ScopedClosedFormPoison&) = delete;

 private:
  bool previous_;
};

/// Returns NaN when armed, otherwise value.
double closed_form_result(double value);

}  // namespace sg::hooks
