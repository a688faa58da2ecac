# Copyright 2026 The Robsel Authors.
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
"""Robust subset selection over the worst case of several set functions."""

from ._robsel import (
    Ensemble,
    SetFunction,
    __version__,
    callable,
    concave_of_modular,
    correlation_ratio,
    coverage,
    default_iterations,
    eporss,
    exhaustive_optimum,
    greedy,
    greedy_evaluation_count,
    modified_greedy,
    modified_greedy_evaluation_count,
    modular,
    power_of_modular,
    run_experiment,
    saturate,
    submodularity_ratio,
    table,
    verify,
)

__all__ = [
    "Ensemble",
    "SetFunction",
    "__version__",
    "callable",
    "concave_of_modular",
    "correlation_ratio",
    "coverage",
    "default_iterations",
    "eporss",
    "exhaustive_optimum",
    "greedy",
    "greedy_evaluation_count",
    "modified_greedy",
    "modified_greedy_evaluation_count",
    "modular",
    "power_of_modular",
    "run_experiment",
    "saturate",
    "submodularity_ratio",
    "table",
    "verify",
]
