# Copyright 2026 The qsdcluster Authors.
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

"""Semi-supervised community detection on partially labeled block models
via quasi-stationary distributions of absorbing random walks."""

from ._core import (  # noqa: F401
    BenchConfig,
    BenchResult,
    ComponentView,
    DisconnectedPolicy,
    EigenPair,
    LabeledGraph,
    MeanFieldConstants,
    Method,
    MethodStats,
    Prediction,
    Regime,
    SbmParams,
    ScoreVector,
    TransitionView,
    TrialResult,
    build_transition_view,
    classify,
    evaluate,
    generate_plsbm,
    giant_component,
    load_edge_list,
    mean_field_constants,
    mean_field_eigenvector,
    mixed_score,
    principal_left_eigenvector,
    principal_right_eigenpair,
    qsd_score,
    rate_function,
    rate_report,
    run_bench,
    run_single,
    save_graph,
    second_adjacency_eigenvector,
    simple_vote_score,
    spectral_baseline,
)

__version__ = "0.1.0"
