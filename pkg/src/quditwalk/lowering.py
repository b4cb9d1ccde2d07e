"""Multi-controlled gate lowering: Clifford+T for binary Toffolis, and an
ancilla-free route that borrows one or two extra levels per control wire.

The intermediate-qudit route is a three-phase network. Preparation folds the
controls pairwise into a single wire whose top level encodes "all controls
satisfied": joining a summary at level L bumps its partner wire from L to
L+1 with a +1 cycle over levels 0..L+1. The target operation fires on the
final summary level, and Correction is the exact inverse of Preparation, so
no ancilla wires are added and every wire returns to its base range.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .core import (
    Circuit,
    CyclicShift,
    GateApplication,
    Hadamard2,
    PauliX,
    RegisterLayout,
    TDagger,
    TGate,
    digits_of,
    state_space,
)
from .errors import UnsupportedError, ValidationError
from .simulator import StateVector

EQUIV_TOL = 1e-9
LEAK_TOL = 1e-10


class LoweringStrategy(str, Enum):
    CLIFFORD_T = "clifford-t"
    INTERMEDIATE_QUDIT = "intermediate"


# ---------------------------------------------------------------------------
# Clifford+T network for the binary 2-control case


def decompose_toffoli_clifford_t(app: GateApplication) -> list[GateApplication]:
    """The 15-gate H/T/CX network for a binary 2-control NOT."""
    if app.n_controls != 2 or not isinstance(app.kind, PauliX):
        raise UnsupportedError("clifford-t lowering covers 2-control NOT gates only")
    if any(level != 1 for _, level in app.controls):
        raise UnsupportedError("clifford-t lowering requires level-1 triggers")
    (a, _), (b, _) = app.controls
    t = app.target

    def cx(ctrl, tgt):
        return GateApplication(kind=PauliX(), target=tgt, controls=((ctrl, 1),))

    return [
        GateApplication(kind=Hadamard2(), target=t),
        cx(b, t),
        GateApplication(kind=TDagger(), target=t),
        cx(a, t),
        GateApplication(kind=TGate(), target=t),
        cx(b, t),
        GateApplication(kind=TDagger(), target=t),
        cx(a, t),
        cx(a, b),
        GateApplication(kind=TDagger(), target=b),
        cx(a, b),
        GateApplication(kind=TGate(), target=a),
        GateApplication(kind=TGate(), target=b),
        GateApplication(kind=TGate(), target=t),
        GateApplication(kind=Hadamard2(), target=t),
    ]


# ---------------------------------------------------------------------------
# Intermediate-qudit lowering


@lru_cache(maxsize=None)
def _depths(k: int) -> tuple[int, int]:
    """(unrestricted, once-bumped-only) optimal preparation depths for k controls."""
    if k == 1:
        return 0, 0
    low = _depths(k - 1)[0] + 1
    best = low
    for b in range(2, k):
        cand = max(_depths(k - b)[0], _depths(b)[1]) + 1
        best = min(best, cand)
    return best, low


@lru_cache(maxsize=None)
def _split_point(k: int) -> int:
    """Size of the right subtree for k controls (smallest size achieving the
    optimal depth; 1 means a chain join with a fresh leaf)."""
    target = _depths(k)[0]
    for b in range(1, k):
        depth_b = _depths(b)[1] if b > 1 else 0
        if max(_depths(k - b)[0], depth_b) + 1 == target:
            return b
    raise AssertionError("split search cannot fail")


def preparation_depth(n_controls: int) -> int:
    """Layers in the preparation phase under the two-extra-levels cap."""
    if n_controls < 1:
        raise ValidationError("need at least one control")
    return _depths(n_controls)[0]


def _lower_mct(app: GateApplication, dims) -> tuple[list[GateApplication], dict[int, int]]:
    """Lower one >=2-control gate; returns (gates, wire -> needed dimension)."""
    for w, level in app.controls:
        if level != dims[w] - 1:
            raise UnsupportedError(
                "intermediate-qudit lowering requires top-level control triggers"
            )
    needed: dict[int, int] = {}
    prep: list[GateApplication] = []

    def join(left, right):
        w, level = right
        bumped = level + 1
        needed[w] = max(needed.get(w, 0), bumped + 1)
        prep.append(
            GateApplication(
                kind=CyclicShift(k=1, d=bumped + 1), target=w, controls=(left,)
            )
        )
        return (w, bumped)

    def combine_any(ctrls):
        if len(ctrls) == 1:
            return ctrls[0]
        b = _split_point(len(ctrls))
        left = combine_any(ctrls[: len(ctrls) - b])
        right = combine_low(ctrls[len(ctrls) - b :])
        return join(left, right)

    def combine_low(ctrls):
        if len(ctrls) == 1:
            return ctrls[0]
        left = combine_any(ctrls[:-1])
        return join(left, ctrls[-1])

    summary = combine_any(list(app.controls))
    fire = GateApplication(kind=app.kind, target=app.target, controls=(summary,))
    correction = [
        GateApplication(
            kind=CyclicShift(k=g.kind.d - 1, d=g.kind.d),
            target=g.target,
            controls=g.controls,
        )
        for g in reversed(prep)
    ]
    return prep + [fire] + correction, needed


def decompose_mct_intermediate(n_controls: int, base_d: int) -> Circuit:
    """Standalone lowering of an n-control NOT over base-d wires.

    Wires 0..n_controls-1 are the controls (triggering on their top level),
    the last wire is the target; no ancillas.
    """
    if n_controls < 2:
        raise ValidationError("need at least 2 controls")
    if base_d < 2:
        raise ValidationError("base dimension must be >= 2")
    layout = RegisterLayout(dims=(base_d,) * (n_controls + 1), coin_wire=None)
    kind = PauliX() if base_d == 2 else CyclicShift(k=1, d=base_d)
    original = GateApplication(
        kind=kind,
        target=n_controls,
        controls=tuple((w, base_d - 1) for w in range(n_controls)),
    )
    gates, needed = _lower_mct(original, layout.dims)
    overrides = tuple(sorted(needed.items()))
    return Circuit(layout=layout, gates=tuple(gates), dim_overrides=overrides)


def lower_circuit(circuit: Circuit, strategy: LoweringStrategy) -> Circuit:
    """Replace every gate with >= 2 controls by its lowering."""
    strategy = LoweringStrategy(strategy)
    dims = circuit.effective_dims
    out: list[GateApplication] = []
    needed: dict[int, int] = dict(circuit.dim_overrides)
    for gate in circuit.gates:
        if gate.n_controls < 2:
            out.append(gate)
            continue
        if strategy == LoweringStrategy.CLIFFORD_T:
            wires = [w for w, _ in gate.controls] + [gate.target]
            if gate.n_controls > 2:
                raise UnsupportedError(
                    f"clifford-t lowering cannot handle {gate.n_controls} controls"
                )
            if any(dims[w] != 2 for w in wires):
                raise UnsupportedError("clifford-t lowering requires binary wires")
            out.extend(decompose_toffoli_clifford_t(gate))
        else:
            block, block_needed = _lower_mct(gate, dims)
            out.extend(block)
            for w, d in block_needed.items():
                needed[w] = max(needed.get(w, 0), d)
    overrides = tuple(
        (w, d) for w, d in sorted(needed.items()) if d > circuit.layout.dims[w]
    )
    return Circuit(layout=circuit.layout, gates=tuple(out), dim_overrides=overrides)


# ---------------------------------------------------------------------------
# Equivalence checking


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    max_deviation: float
    leakage: float
    failing_input: tuple[int, ...] | None = None


_PERMUTATION_KINDS = (PauliX, CyclicShift)


def _is_permutation_circuit(circuit: Circuit) -> bool:
    return all(isinstance(g.kind, _PERMUTATION_KINDS) for g in circuit.gates)


def _track_permutation(circuit: Circuit, base_dims) -> np.ndarray:
    """Outputs of every base-subspace basis input under a permutation circuit."""
    dims = circuit.effective_dims
    n = state_space(base_dims)
    arr = np.empty((n, len(dims)), dtype=np.int64)
    for i in range(n):
        arr[i] = digits_of(base_dims, i)
    for g in circuit.gates:
        mask = np.ones(n, dtype=bool)
        for w, level in g.controls:
            mask &= arr[:, w] == level
        if not mask.any():
            continue
        col = arr[mask, g.target]
        if isinstance(g.kind, PauliX):
            low = col < 2
            col[low] = 1 - col[low]
        else:
            low = col < g.kind.d
            col[low] = (col[low] + g.kind.k) % g.kind.d
        arr[mask, g.target] = col
    return arr


def verify_equivalence(
    original: Circuit, lowered: Circuit, phase_exact: bool = False
) -> EquivalenceReport:
    """Compare two circuits on every basis input of the original's space.

    Lowered circuits may visit elevated levels mid-flight but must return all
    probability to the base subspace; any residue counts as leakage. In the
    default mode a global phase is factored out; ``phase_exact`` compares raw
    amplitudes.
    """
    if original.layout.dims != lowered.layout.dims:
        raise ValidationError("circuits must share a register layout")
    base_dims = original.effective_dims
    if _is_permutation_circuit(original) and _is_permutation_circuit(lowered):
        out_o = _track_permutation(original, base_dims)
        out_l = _track_permutation(lowered, base_dims)
        leaked = (out_l >= np.array(base_dims)).any(axis=1)
        mismatch = (out_o != out_l).any(axis=1) | leaked
        if mismatch.any():
            first = int(np.argmax(mismatch))
            return EquivalenceReport(
                equivalent=False,
                max_deviation=0.0 if bool(leaked[first]) else 1.0,
                leakage=1.0 if leaked.any() else 0.0,
                failing_input=digits_of(base_dims, first),
            )
        return EquivalenceReport(equivalent=True, max_deviation=0.0, leakage=0.0)

    # dense route: simulate both sides input by input
    eff_dims = lowered.effective_dims
    base_mask = np.zeros(state_space(eff_dims), dtype=bool)
    embed = np.empty(state_space(base_dims), dtype=np.int64)
    for i in range(state_space(base_dims)):
        j = 0
        stride = 1
        for w, (dg, d) in enumerate(zip(digits_of(base_dims, i), eff_dims)):
            j += dg * stride
            stride *= d
        embed[i] = j
        base_mask[j] = True
    worst_dev = 0.0
    worst_leak = 0.0
    failing = None
    for i in range(state_space(base_dims)):
        digits = digits_of(base_dims, i)
        sv_o = StateVector.from_basis(base_dims, digits)
        for g in original.gates:
            sv_o.apply(g)
        sv_l = StateVector.from_basis(eff_dims, digits)
        for g in lowered.gates:
            sv_l.apply(g)
        vec_o = np.zeros_like(sv_l.amplitudes)
        vec_o[embed] = sv_o.amplitudes
        leak = float(np.sum(np.abs(sv_l.amplitudes[~base_mask]) ** 2))
        if not phase_exact:
            overlap = np.vdot(vec_o, sv_l.amplitudes)
            if abs(overlap) > 1e-12:
                vec_o = vec_o * (overlap / abs(overlap))
        dev = float(np.max(np.abs(sv_l.amplitudes - vec_o)))
        if dev > worst_dev or leak > worst_leak:
            if failing is None or dev > max(worst_dev, EQUIV_TOL):
                failing = digits
        worst_dev = max(worst_dev, dev)
        worst_leak = max(worst_leak, leak)
    equivalent = worst_dev <= EQUIV_TOL and worst_leak <= LEAK_TOL
    return EquivalenceReport(
        equivalent=equivalent,
        max_deviation=worst_dev,
        leakage=worst_leak,
        failing_input=None if equivalent else failing,
    )
