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

#include "switchgrover/hooks.hpp"

#include <atomic>
#include <limits>

namespace sg::hooks {

namespace {
std::atomic<bool> g_poison{false};
}

void set_closed_form_poison(bool armed) { g_poison.store(armed); }

bool closed_form_poisoned() { return g_poison.load(); }

ScopedClosedFormPoison::ScopedClosedFormPoison() : previous_(g_poison.exchange(true)) {}

ScopedClosedFormPoison::~ScopedClosedFormPoison() { g_poison.store(previous_); }

double closed_form_result(double value) {
  return closed_form_poisoned() ? std::numeric_limits<double>::quiet_NaN() : value;
}

}  // namespace sg::hooks
