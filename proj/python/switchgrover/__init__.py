# Copyright 2026 The switchgrover Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Noisy Grover search with quantum-switch error mitigation."""

from switchgrover._core import (
    f_xi,
    framework1_state,
    ideal_success_probability,
    noisy_state,
    noisy_success_probability,
    optimal_iterations,
    oracle_framework,
    p_framework1,
    p_framework1_sim,
    p_framework2_closed,
    p_framework2_sim,
    p_framework2_symbolic,
    sweep,
    verify,
)

__all__ = [
    "f_xi",
    "framework1_state",
    "ideal_success_probability",
    "noisy_state",
    "noisy_success_probability",
    "optimal_iterations",
    "oracle_framework",
    "p_framework1",
    "p_framework1_sim",
    "p_framework2_closed",
    "p_framework2_sim",
    "p_framework2_symbolic",
    "sweep",
    "verify",
]
