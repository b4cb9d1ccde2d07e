"""Gate census, closed-form model, and success-probability tests."""
from __future__ import annotations

import math

import numpy as np
import pytest

from quditwalk import (
    DEFAULT_NOISE,
    Hadamard2,
    NoiseParams,
    ResourceEstimate,
    Scheme,
    ValidationError,
    WalkConfig,
    build_walk,
    closed_form_estimate,
    compare_schemes,
    count_resources,
    intermediate_qudit_closed_form,
    layer_assignment,
    mct_two_qubit_cost,
    projected_two_qubit_count,
    success_probability,
)
from quditwalk.walks import build_enhanced_step, build_naive_step, make_layout
from oracles import dag_depth
from reference_tables import (
    CLOSED_ENHANCED_N3_T1,
    CLOSED_NAIVE_N3_T1,
    INTERMEDIATE_CLOSED,
    MCT_TWO_QUBIT_COSTS,
    SUCCESS_EXAMPLE,
)
from test_simulator import _random_circuit


# ---------------------------------------------------------------------------
# Census of concrete circuits


def test_enhanced_even_step_census():
    layout = make_layout((2, 2, 2))
    gates = build_enhanced_step(layout, parity=0, coin_kind=Hadamard2())
    circuit = build_walk(
        WalkConfig(scheme=Scheme.ENHANCED, position_dims=(2, 2, 2), steps=1)
    )
    assert tuple(circuit.gates) == tuple(gates)
    est = count_resources(circuit)
    assert est.count_1q == 2
    assert est.controls_dict == {1: 1, 2: 1}
    assert est.highest_control == 2
    assert est.depth == 3


def test_naive_step_census():
    layout = make_layout((2, 2, 2))
    gates = build_naive_step(layout)
    est = count_resources(
        build_walk(WalkConfig(scheme=Scheme.NAIVE, position_dims=(2, 2, 2), steps=1))
    )
    assert len(gates) == 9
    assert est.count_1q == 3
    assert est.controls_dict == {1: 2, 2: 2, 3: 2}
    assert est.highest_control == 3
    assert est.depth == 9


def test_layer_assignment_against_dag_oracle():
    rng = np.random.default_rng(23)
    for _ in range(12):
        dims = tuple(int(rng.integers(2, 5)) for _ in range(int(rng.integers(2, 5))))
        circuit = _random_circuit(rng, dims)
        layers = layer_assignment(circuit.gates)
        assert len(layers) == len(circuit.gates)
        # layers are 1-based; the deepest layer equals the DAG longest chain
        assert max(layers) == dag_depth(circuit.gates)
        # layers are consistent: no two gates in one layer share a wire
        seen = {}
        for gate, layer in zip(circuit.gates, layers):
            for w in gate.wires:
                assert seen.get((layer, w)) is None
                seen[(layer, w)] = gate


def test_layer_assignment_empty():
    assert layer_assignment(()) == []


# ---------------------------------------------------------------------------
# Closed-form models


def test_projected_cost_values():
    for controls, cost in MCT_TWO_QUBIT_COSTS.items():
        assert mct_two_qubit_cost(controls + 1) == cost


def test_closed_form_pins():
    enh = closed_form_estimate(Scheme.ENHANCED, 3, 1)
    for key, val in CLOSED_ENHANCED_N3_T1.items():
        assert getattr(enh, key) == val, key
    nai = closed_form_estimate(Scheme.NAIVE, 3, 1)
    for key, val in CLOSED_NAIVE_N3_T1.items():
        assert getattr(nai, key) == val, key


@pytest.mark.parametrize("scheme", [Scheme.ENHANCED, Scheme.NAIVE])
@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_closed_form_matches_projected_census(scheme, n, t):
    closed = closed_form_estimate(scheme, n, t)
    circuit = build_walk(WalkConfig(scheme=scheme, position_dims=(2,) * n, steps=t))
    measured = count_resources(circuit)
    assert closed.count_2q == projected_two_qubit_count(circuit)
    assert closed.controls_dict == measured.controls_dict
    assert closed.highest_control == measured.highest_control
    if scheme is Scheme.NAIVE:
        assert closed.count_1q == measured.count_1q
    else:
        # the enhanced step alternates parity; odd steps carry one extra
        # single-wire gate, even steps one fewer, exact at even t
        assert abs(closed.count_1q - measured.count_1q) <= t
        if t % 2 == 0:
            assert closed.count_1q == measured.count_1q


def test_closed_form_validates():
    with pytest.raises(ValidationError):
        closed_form_estimate(Scheme.ENHANCED, 2, 1)
    with pytest.raises(ValidationError):
        closed_form_estimate(Scheme.ENHANCED, 3, 0)
    with pytest.raises(ValidationError):
        closed_form_estimate(Scheme.QUDIT_DIRECT, 3, 1)


def test_intermediate_closed_form_pins():
    for n, (depth, gates) in INTERMEDIATE_CLOSED.items():
        est = intermediate_qudit_closed_form(n)
        assert est.depth == depth
        assert est.count_2q == gates
        assert est.count_1q == 0
        assert est.highest_control == 1
    with pytest.raises(ValidationError):
        intermediate_qudit_closed_form(2)


# ---------------------------------------------------------------------------
# Success probability


def test_success_probability_example():
    est = ResourceEstimate(
        count_1q=2, count_2q=0, count_by_controls=(), depth=2, highest_control=0
    )
    params = NoiseParams(p_success_1q=0.9, p_success_2q=0.99, t1=100.0)
    assert success_probability(est, params) == pytest.approx(SUCCESS_EXAMPLE, abs=1e-15)
    # hand check: 0.9^2 * exp(-2/100)
    assert success_probability(est, params) == pytest.approx(
        0.81 * math.exp(-0.02), abs=1e-15
    )


def test_success_probability_decreases_with_size():
    params = DEFAULT_NOISE
    values = [
        success_probability(closed_form_estimate(Scheme.ENHANCED, n, 1), params)
        for n in range(3, 8)
    ]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_noise_params_validated():
    with pytest.raises(ValidationError):
        NoiseParams(p_success_1q=0.0, p_success_2q=0.9, t1=100.0)
    with pytest.raises(ValidationError):
        NoiseParams(p_success_1q=0.9, p_success_2q=1.1, t1=100.0)
    with pytest.raises(ValidationError):
        NoiseParams(p_success_1q=0.9, p_success_2q=0.9, t1=0.0)


def test_default_noise_is_marked_illustrative():
    assert "illustrative" in DEFAULT_NOISE.source


def test_resource_estimate_validated():
    with pytest.raises(ValidationError):
        ResourceEstimate(
            count_1q=-1, count_2q=0, count_by_controls=(), depth=0, highest_control=0
        )
    with pytest.raises(ValidationError):
        ResourceEstimate(
            count_1q=0,
            count_2q=1,
            count_by_controls=((1, 1), (3, 1)),
            depth=1,
            highest_control=2,
        )


# ---------------------------------------------------------------------------
# Scheme comparison series


def test_compare_schemes_rows():
    rows = compare_schemes(range(3, 7), 1, DEFAULT_NOISE)
    assert [row["n"] for row in rows] == [3, 4, 5, 6]
    for row in rows:
        assert row["enhanced_2q"] < row["naive_2q"]
        assert row["enhanced_depth"] < row["naive_depth"]
        assert row["enhanced_success"] > row["naive_success"]
