"""Step-circuit builders for the walk schemes and the derived position mapping.

Four schemes share one shape: toss the coin, then move the position register
up on coin |1> and down on coin |0>. They differ in how the shift is wired:

  naive           separate increment and decrement ladders each step
  enhanced        one alternating-parity ladder; the LSB flips unconditionally
  qudit-direct    enhanced shape with d-level wires above a binary LSB
  qudit-modified  even-dimension LSB plus a midpoint block that steers the
                  two branches apart where they would otherwise collide

Positive positions follow the coin-|1> branch; the ladder's control triggers
sit at each wire's top level (the carry/borrow condition).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import (
    BasisState,
    Circuit,
    CyclicShift,
    GateApplication,
    GeneralCoin,
    Hadamard2,
    PauliX,
    RegisterLayout,
    make_layout,
)
from .errors import ValidationError


class Scheme(str, Enum):
    NAIVE = "naive"
    ENHANCED = "enhanced"
    QUDIT_DIRECT = "qudit-direct"
    QUDIT_MODIFIED = "qudit-modified"


@dataclass(frozen=True)
class WalkConfig:
    """Everything needed to build a walk circuit.

    ``initial`` of None means the standard start: positions all zero, coin at
    level 1 (the branch convention that biases the walk rightward).
    """

    scheme: Scheme
    position_dims: tuple[int, ...]
    steps: int
    coin: object = Hadamard2()
    initial: BasisState | None = None


def default_initial(layout: RegisterLayout) -> BasisState:
    digits = [0] * layout.n_wires
    digits[layout.coin_wire] = 1
    return BasisState(layout=layout, digits=tuple(digits))


# ---------------------------------------------------------------------------
# Scheme validation


def _position_dims(layout: RegisterLayout) -> tuple[int, ...]:
    if layout.coin_wire is None:
        raise ValidationError("walk circuits need a coin wire")
    return layout.position_dims


def _require_binary(layout: RegisterLayout, n_min: int = 2) -> int:
    dims = _position_dims(layout)
    if len(dims) < n_min:
        raise ValidationError(f"need at least {n_min} position wires")
    if any(d != 2 for d in dims):
        raise ValidationError("binary schemes require all position dimensions = 2")
    return len(dims)


def _require_direct(layout: RegisterLayout) -> tuple[int, int]:
    dims = _position_dims(layout)
    if len(dims) < 2:
        raise ValidationError("need at least 2 position wires")
    if dims[0] != 2:
        raise ValidationError("qudit-direct requires a binary least significant wire")
    upper = set(dims[1:])
    if len(upper) != 1 or min(upper) < 3:
        raise ValidationError(
            "qudit-direct requires equal upper dimensions of at least 3"
        )
    return len(dims), dims[1]


def _require_modified(layout: RegisterLayout) -> tuple[int, int, int]:
    dims = _position_dims(layout)
    if len(dims) < 2:
        raise ValidationError("need at least 2 position wires")
    if dims[0] % 2 != 0 or dims[0] < 4:
        raise ValidationError(
            "qudit-modified requires an even least significant dimension >= 4"
        )
    upper = set(dims[1:])
    if len(upper) != 1:
        raise ValidationError("qudit-modified requires equal upper dimensions")
    return len(dims), dims[0], dims[1]


# ---------------------------------------------------------------------------
# Binary building blocks


def build_increment(layout: RegisterLayout) -> list[GateApplication]:
    """Two's-complement +1 controlled on the coin: the descending carry ladder."""
    n = _require_binary(layout)
    coin = layout.coin_wire
    gates = []
    for j in range(n - 1, 0, -1):
        controls = tuple((q, 1) for q in range(j)) + ((coin, 1),)
        gates.append(GateApplication(kind=PauliX(), target=j, controls=controls))
    gates.append(GateApplication(kind=PauliX(), target=0, controls=((coin, 1),)))
    return gates


def build_decrement(layout: RegisterLayout) -> list[GateApplication]:
    """-1 on the coin-|0> branch: the increment conjugated by X on the coin."""
    n = _require_binary(layout)
    coin = layout.coin_wire
    gates = [GateApplication(kind=PauliX(), target=coin)]
    gates.append(GateApplication(kind=PauliX(), target=0, controls=((coin, 1),)))
    for j in range(1, n):
        controls = tuple((q, 1) for q in range(j)) + ((coin, 1),)
        gates.append(GateApplication(kind=PauliX(), target=j, controls=controls))
    gates.append(GateApplication(kind=PauliX(), target=coin))
    return gates


def build_naive_step(layout: RegisterLayout, coin_kind=Hadamard2()) -> list[GateApplication]:
    coin = layout.coin_wire
    toss = GateApplication(kind=coin_kind, target=coin)
    return [toss] + build_increment(layout) + build_decrement(layout)


def build_enhanced_step(
    layout: RegisterLayout, parity: int, coin_kind=Hadamard2()
) -> list[GateApplication]:
    """One alternating step: the LSB flips unconditionally, the ladder above
    it only carries (even parity) or borrows (odd parity)."""
    n = _require_binary(layout)
    coin = layout.coin_wire

    def ladder_gate(j):
        controls = tuple((q, 1) for q in range(1, j)) + ((coin, 1),)
        return GateApplication(kind=PauliX(), target=j, controls=controls)

    gates = [GateApplication(kind=coin_kind, target=coin)]
    gates.append(GateApplication(kind=PauliX(), target=0))
    if parity % 2 == 0:
        gates += [ladder_gate(j) for j in range(n - 1, 0, -1)]
    else:
        gates.append(GateApplication(kind=PauliX(), target=coin))
        gates += [ladder_gate(j) for j in range(1, n)]
        gates.append(GateApplication(kind=PauliX(), target=coin))
    return gates


# ---------------------------------------------------------------------------
# Qudit schemes


def build_qudit_step_direct(
    layout: RegisterLayout, parity: int, coin_kind=Hadamard2()
) -> list[GateApplication]:
    """Enhanced shape over a binary LSB and equal d-level upper wires."""
    n, d = _require_direct(layout)
    coin = layout.coin_wire

    def ladder_gate(j, amount):
        controls = tuple((q, d - 1) for q in range(1, j)) + ((coin, 1),)
        return GateApplication(
            kind=CyclicShift(k=amount, d=d), target=j, controls=controls
        )

    gates = [GateApplication(kind=coin_kind, target=coin)]
    gates.append(GateApplication(kind=PauliX(), target=0))
    if parity % 2 == 0:
        gates += [ladder_gate(j, 1) for j in range(n - 1, 0, -1)]
    else:
        gates.append(GateApplication(kind=PauliX(), target=coin))
        gates += [ladder_gate(j, d - 1) for j in range(1, n)]
        gates.append(GateApplication(kind=PauliX(), target=coin))
    return gates


def _midpoint_pattern(d: int, n_upper: int) -> list[int]:
    """Digits (least significant first) of ceil(M/2) over the upper wires."""
    mid = (d**n_upper + 1) // 2
    out = []
    for _ in range(n_upper):
        out.append(mid % d)
        mid //= d
    return out


def build_qudit_step_modified(
    layout: RegisterLayout, parity: int, coin_kind=Hadamard2()
) -> list[GateApplication]:
    """Direct scheme generalized to an even-dimension LSB.

    The midpoint block bumps the LSB by +-2 exactly where the two walk
    branches would meet, so the full state space is traversed. Its control
    pattern is the digit expansion of the midpoint position, reached on the
    wire tops through a conjugation by per-wire shifts.
    """
    n, d0, d = _require_modified(layout)
    coin = layout.coin_wire
    uppers = list(range(1, n))
    m = _midpoint_pattern(d, n - 1)
    conj_in = [(d - 1 - mi) % d for mi in m]

    def shifts(offsets):
        return [
            GateApplication(kind=CyclicShift(k=off, d=d), target=q)
            for q, off in zip(uppers, offsets)
            if off
        ]

    def midpoint_block(amount):
        controls = tuple((q, d - 1) for q in uppers) + ((coin, 1),)
        return GateApplication(
            kind=CyclicShift(k=amount, d=d0), target=0, controls=controls
        )

    def ladder_gate(j, amount):
        controls = tuple((q, d - 1) for q in range(1, j)) + ((coin, 1),)
        return GateApplication(
            kind=CyclicShift(k=amount, d=d), target=j, controls=controls
        )

    flip = GateApplication(kind=PauliX(), target=coin)
    gates = [GateApplication(kind=coin_kind, target=coin)]
    if parity % 2 == 0:
        # the conjugated midpoint block serves the coin-|0> branch
        gates += shifts(conj_in) + [flip]
        gates.append(midpoint_block(2))
        gates += shifts([(d - c) % d for c in conj_in]) + [flip]
        gates.append(GateApplication(kind=CyclicShift(k=1, d=d0), target=0))
        gates += [ladder_gate(j, 1) for j in range(n - 1, 0, -1)]
    else:
        gates.append(GateApplication(kind=CyclicShift(k=d0 - 1, d=d0), target=0))
        gates.append(flip)
        gates += [ladder_gate(j, d - 1) for j in range(1, n)]
        gates += shifts(conj_in) + [flip]  # this X restores the coin
        gates.append(midpoint_block(d0 - 2))
        gates += shifts([(d - c) % d for c in conj_in])
    return gates


# ---------------------------------------------------------------------------
# Walk assembly


def _build_step(scheme: Scheme, layout, parity: int, coin_kind) -> list[GateApplication]:
    if scheme == Scheme.NAIVE:
        return build_naive_step(layout, coin_kind)
    if scheme == Scheme.ENHANCED:
        return build_enhanced_step(layout, parity, coin_kind)
    if scheme == Scheme.QUDIT_DIRECT:
        return build_qudit_step_direct(layout, parity, coin_kind)
    if scheme == Scheme.QUDIT_MODIFIED:
        return build_qudit_step_modified(layout, parity, coin_kind)
    raise ValidationError(f"unknown scheme {scheme!r}")


def derive_max_steps(scheme: Scheme, position_dims) -> int:
    """Largest step count before the two branches collide."""
    dims = tuple(position_dims)
    layout = make_layout(dims)
    if scheme in (Scheme.NAIVE, Scheme.ENHANCED):
        n = _require_binary(layout)
        return 2 ** (n - 1) - 1
    if scheme == Scheme.QUDIT_DIRECT:
        n, d = _require_direct(layout)
        return d ** (n - 1) - 1
    if scheme == Scheme.QUDIT_MODIFIED:
        _require_modified(layout)
        return math.prod(dims) // 2 - 1
    raise ValidationError(f"unknown scheme {scheme!r}")


def build_walk(config: WalkConfig) -> Circuit:
    """Concatenate ``steps`` step circuits (parity alternates, even first)."""
    scheme = Scheme(config.scheme)
    layout = make_layout(config.position_dims)
    max_steps = derive_max_steps(scheme, config.position_dims)
    if config.steps < 0:
        raise ValidationError("steps must be nonnegative")
    if config.steps > max_steps:
        raise ValidationError(
            f"steps {config.steps} exceeds the scheme's maximum {max_steps}"
        )
    gates = []
    for i in range(config.steps):
        gates += _build_step(scheme, layout, i % 2, config.coin)
    return Circuit(layout=layout, gates=tuple(gates))


# ---------------------------------------------------------------------------
# Position mapping


@dataclass(frozen=True)
class PositionMapping:
    """positions -> digit tuples, with any boundary collisions reported."""

    layout: RegisterLayout
    entries: tuple[tuple[int, tuple[int, ...]], ...]
    collisions: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def injective(self) -> bool:
        return not self.collisions

    def digits(self, position: int) -> tuple[int, ...]:
        for x, dg in self.entries:
            if x == position:
                return dg
        raise ValidationError(f"position {position} not in mapping")

    def label(self, position: int) -> str:
        return "".join(str(v) for v in reversed(self.digits(position)))

    def rows(self):
        """(position, digit string) pairs, most significant digit first."""
        for x, dg in self.entries:
            yield x, "".join(str(v) for v in reversed(dg))


def _apply_classical(gates, digits: list[int]) -> None:
    for g in gates:
        if any(digits[w] != level for w, level in g.controls):
            continue
        v = digits[g.target]
        kind = g.kind
        if isinstance(kind, PauliX):
            if v < 2:
                digits[g.target] = 1 - v
        elif isinstance(kind, CyclicShift):
            if v < kind.d:
                digits[g.target] = (v + kind.k) % kind.d
        else:
            raise ValidationError("mapping requires permutation gates only")


def derive_position_mapping(
    scheme: Scheme, position_dims, steps: int, coin_kind=Hadamard2()
) -> PositionMapping:
    """Track both walk branches classically through the step permutations.

    Step i applies the parity-i circuit (coin toss stripped) to the negative
    frontier with coin 0 and the positive frontier with coin 1. The allowed
    range extends one past derive_max_steps so the first colliding row can be
    inspected.
    """
    scheme = Scheme(scheme)
    layout = make_layout(position_dims)
    max_steps = derive_max_steps(scheme, position_dims)
    if steps < 0:
        raise ValidationError("steps must be nonnegative")
    if steps > max_steps + 1:
        raise ValidationError(
            f"steps {steps} out of range (maximum {max_steps}, +1 to view the collision)"
        )
    n_pos = len(layout.position_wires)
    coin = layout.coin_wire
    neg, pos = [0] * n_pos, [0] * n_pos
    entries = [(0, tuple(neg))]
    for i in range(steps):
        step = _build_step(scheme, layout, i % 2, coin_kind)
        moving = [g for g in step if not isinstance(g.kind, (Hadamard2, GeneralCoin))]
        for branch, frontier in ((0, neg), (1, pos)):
            digits = list(frontier) + [branch]
            _apply_classical(moving, digits)
            if digits[coin] != branch:
                raise RuntimeError("step permutation failed to restore the coin")
            frontier[:] = digits[:n_pos]
        entries.append((-(i + 1), tuple(neg)))
        entries.append((i + 1, tuple(pos)))
    entries.sort(key=lambda e: e[0])
    by_label: dict[str, list[int]] = {}
    for x, dg in entries:
        label = "".join(str(v) for v in reversed(dg))
        by_label.setdefault(label, []).append(x)
    collisions = tuple(
        (label, tuple(xs)) for label, xs in sorted(by_label.items()) if len(xs) > 1
    )
    return PositionMapping(
        layout=layout, entries=tuple(entries), collisions=collisions
    )
