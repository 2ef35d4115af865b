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

import math

import pytest

import qsdcluster as qc


@pytest.fixture(scope="module")
def graph():
    params = qc.SbmParams(n=200, a=6.0, b=1.0, delta=0.2)
    return params, qc.generate_plsbm(params, seed=12)


def test_generate_and_inspect(graph):
    params, g = graph
    assert g.n == 200
    assert sum(1 for s in g.sigma if s == 1) == 100
    assert len(g.revealed(1)) == 20
    assert g.edge_count() > 0
    u, v = g.edges[0]
    assert g.has_edge(u, v) and g.has_edge(v, u)


def test_giant_component(graph):
    _, g = graph
    giant = qc.giant_component(g)
    assert 0 < giant.size() <= g.n
    sub = giant.induced_subgraph()
    assert sub.n == giant.size()


def test_scores_and_classification(graph):
    params, g = graph
    giant = qc.giant_component(g).induced_subgraph()
    q = qc.qsd_score(giant)
    s = qc.simple_vote_score(giant)
    m = qc.mixed_score(giant, params)
    assert len(q.scores) == len(s.scores) == len(m.scores)
    pred = qc.classify(q)
    err = qc.evaluate(pred, giant)
    assert 0.0 <= err <= 0.25  # strong signal at these parameters

    base = qc.spectral_baseline(giant)
    assert qc.evaluate(base, giant) <= 0.25


def test_rates():
    report = qc.rate_report(4.0, 1.0, 0.1)
    assert math.isclose(report["I_vote"], 0.05, abs_tol=1e-9)
    assert math.isclose(report["I_mixed"], 0.5, abs_tol=1e-9)
    assert math.isclose(report["constants"].rho, 1.169536, abs_tol=1e-6)
    value, theta, boundary = qc.rate_function(4.0, 1.0, 0.1, 0.0, 1.0)
    assert math.isclose(value, 0.05, abs_tol=1e-9)
    assert not boundary


def test_bench_roundtrip():
    params = qc.SbmParams(n=150, a=6.0, b=1.0, delta=0.2)
    cfg = qc.BenchConfig(params, trials=2, base_seed=4,
                         methods=[qc.Method.SimpleVote, qc.Method.QSD],
                         workers=2)
    result = qc.run_bench(cfg)
    stats = result.aggregate()
    assert stats[qc.Method.QSD].count == 2
    assert 0.0 <= stats[qc.Method.QSD].mean <= 1.0
    csv = result.csv()
    assert csv.splitlines()[1] == (
        "trial,method,recovery_rate,error_rate,giant_component_size,seconds")
    assert "aggregates" in result.summary_json()


def test_invalid_params_raise():
    with pytest.raises(ValueError):
        qc.SbmParams(n=0, a=4.0, b=1.0, delta=0.1)
    with pytest.raises(ValueError):
        qc.mean_field_constants(4.0, 1.0, 0.0)
