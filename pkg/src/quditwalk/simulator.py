"""Dense statevector simulation over mixed-radix registers.

Gates are applied conditionally: the state tensor is sliced at each control's
trigger level and the target unitary acts on that slice only. A full
controlled matrix is never formed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BasisState,
    Circuit,
    GateApplication,
    basis_index,
    gate_unitary,
    state_space,
)
from .errors import ValidationError

NORM_TOL = 1e-10


class StateVector:
    """Complex amplitudes over a register, wire 0 least significant.

    The owner of a StateVector is the only writer; apply() mutates in place.
    """

    def __init__(self, dims, amplitudes=None):
        self.dims = tuple(int(d) for d in dims)
        n = state_space(self.dims)
        if amplitudes is None:
            self.amplitudes = np.zeros(n, dtype=np.complex128)
            self.amplitudes[0] = 1.0
        else:
            amp = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
            if amp.shape[0] != n:
                raise ValidationError("amplitude vector length does not match dims")
            self.amplitudes = amp.copy()

    @classmethod
    def from_basis(cls, dims, digits) -> "StateVector":
        sv = cls(dims)
        sv.amplitudes[0] = 0.0
        sv.amplitudes[basis_index(dims, digits)] = 1.0
        return sv

    @property
    def n_wires(self) -> int:
        return len(self.dims)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.dims, self.amplitudes)

    def _axis(self, wire: int) -> int:
        # reshape uses most-significant wire first, so wire w sits on axis n-1-w
        return self.n_wires - 1 - wire

    def apply(self, app: GateApplication) -> None:
        """Apply one gate in place (conditional on its control levels)."""
        d_t = self.dims[app.target]
        mat = gate_unitary(app.kind, d_t)
        tensor = self.amplitudes.reshape(tuple(reversed(self.dims)))
        slicer = [slice(None)] * self.n_wires
        for wire, level in app.controls:
            if not 0 <= level < self.dims[wire]:
                raise ValidationError(
                    f"control level {level} out of range for wire {wire}"
                )
            slicer[self._axis(wire)] = level
        sub = tensor[tuple(slicer)]  # a view: controls use basic indexing
        t_ax = self._axis(app.target)
        t_ax -= sum(1 for w, _ in app.controls if self._axis(w) < t_ax)
        moved = np.moveaxis(sub, t_ax, -1)
        moved[...] = moved @ mat.T

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def apply_gate(state: StateVector, app: GateApplication) -> StateVector:
    state.apply(app)
    return state


def run(circuit: Circuit, initial=None, check_norm: bool = True) -> StateVector:
    """Run a circuit from ``initial`` (a BasisState, StateVector, or None = |0..0>)."""
    dims = circuit.effective_dims
    if initial is None:
        state = StateVector(dims)
    elif isinstance(initial, BasisState):
        state = StateVector.from_basis(dims, initial.digits)
    elif isinstance(initial, StateVector):
        if initial.dims != dims:
            raise ValidationError("initial state dims do not match circuit")
        state = initial.copy()
    else:
        state = StateVector.from_basis(dims, tuple(initial))
    for gate in circuit.gates:
        state.apply(gate)
        if check_norm and abs(state.norm() - 1.0) > NORM_TOL:
            raise RuntimeError("state norm drifted past tolerance; non-unitary gate?")
    return state


# ---------------------------------------------------------------------------
# Measurement-side containers


@dataclass(frozen=True)
class Distribution:
    """Position probabilities plus the probability mass left unmapped.

    At a boundary collision two positions share one digit string; the shared
    mass appears once per label in ``entries`` but is counted once in the
    total, so ``mapped_mass + residual == 1`` still holds.
    """

    entries: tuple[tuple[int, float], ...]
    residual: float
    digit_strings: tuple[tuple[int, str], ...] = ()

    @property
    def mapped_mass(self) -> float:
        strings = dict(self.digit_strings)
        if strings and len(set(strings.values())) < len(strings):
            seen, total = set(), 0.0
            for x, p in self.entries:
                key = strings.get(x)
                if key in seen:
                    continue
                seen.add(key)
                total += p
            return total
        return float(sum(p for _, p in self.entries))

    def probability(self, position: int) -> float:
        for x, p in self.entries:
            if x == position:
                return p
        return 0.0


@dataclass(frozen=True)
class ShotCounts:
    """Multinomial sample of a Distribution; counts sum to ``shots``."""

    counts: tuple[tuple[int, int], ...]
    shots: int
    seed: int
    unmapped: int = 0

    def count(self, position: int) -> int:
        for x, c in self.counts:
            if x == position:
                return c
        return 0


def position_distribution(state: StateVector, mapping) -> Distribution:
    """Marginalize the coin and read probabilities through a position mapping.

    ``mapping`` is a PositionMapping (walk_builder) or any object with
    ``entries`` of (position, digits) pairs over the position wires.
    """
    layout = mapping.layout
    coin = layout.coin_wire
    probs = state.probabilities().reshape(tuple(reversed(state.dims)))
    if coin is not None:
        probs = probs.sum(axis=state.n_wires - 1 - coin)
    flat = probs.reshape(-1)
    pos_dims = tuple(state.dims[w] for w in layout.position_wires)
    entries = []
    strings = []
    seen_strings = set()
    mapped = 0.0
    for x, digits in mapping.entries:
        p = float(flat[basis_index(pos_dims, digits)])
        entries.append((x, p))
        label = "".join(str(v) for v in reversed(digits))
        strings.append((x, label))
        if label not in seen_strings:
            seen_strings.add(label)
            mapped += p
    total = float(flat.sum())
    return Distribution(
        entries=tuple(entries),
        residual=max(total - mapped, 0.0),
        digit_strings=tuple(strings),
    )


def sample(distribution: Distribution, shots: int, seed: int) -> ShotCounts:
    """Deterministic multinomial sampling.

    Uses the Philox counter-based generator (64-bit words) keyed by ``seed``,
    drawing one uniform double per shot and locating it in the cumulative
    distribution (inverse-CDF). Identical seeds give identical counts on any
    platform.
    """
    if shots < 0:
        raise ValidationError("shots must be nonnegative")
    labels = dict(distribution.digit_strings)
    if len(set(labels.values())) < len(labels):
        raise ValidationError("cannot sample a distribution with colliding digit strings")
    positions = [x for x, _ in distribution.entries]
    probs = np.array([p for _, p in distribution.entries], dtype=np.float64)
    total = probs.sum() + distribution.residual
    if abs(total - 1.0) > NORM_TOL:
        raise ValidationError("distribution does not sum to 1")
    cdf = np.cumsum(probs)
    rng = np.random.Generator(np.random.Philox(key=seed))
    u = rng.random(shots)
    idx = np.searchsorted(cdf, u, side="right")
    binned = np.bincount(idx, minlength=len(positions) + 1)
    counts = tuple((x, int(binned[i])) for i, x in enumerate(positions))
    return ShotCounts(
        counts=counts, shots=shots, seed=seed, unmapped=int(binned[len(positions)])
    )
