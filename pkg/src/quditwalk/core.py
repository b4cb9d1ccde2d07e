"""Mixed-radix register layouts, gate primitives, circuits, and their JSON form.

Wire 0 is the least significant digit of the position register; the binary
coin wire, when present, is appended as the most significant wire. Basis
indices follow the mixed-radix positional convention: wire w has stride
prod(dims[:w]).
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

# Hard cap on the full state-space size (product of all wire dimensions).
STATE_SPACE_CAP = 1 << 26


# ---------------------------------------------------------------------------
# Register layout


@dataclass(frozen=True)
class RegisterLayout:
    """A register of qudit wires; ``coin_wire`` is None for bare registers."""

    dims: tuple[int, ...]
    coin_wire: int | None = None

    def __post_init__(self):
        if not self.dims:
            raise ValidationError("layout needs at least one wire")
        for d in self.dims:
            if d < 2:
                raise ValidationError(f"wire dimension {d} < 2")
        if self.coin_wire is not None:
            if not 0 <= self.coin_wire < len(self.dims):
                raise ValidationError(f"coin wire {self.coin_wire} out of range")
            if self.dims[self.coin_wire] != 2:
                raise ValidationError("coin wire must be binary")
        if state_space(self.dims) > STATE_SPACE_CAP:
            raise ValidationError(
                f"state space {state_space(self.dims)} exceeds cap {STATE_SPACE_CAP}"
            )

    @property
    def n_wires(self) -> int:
        return len(self.dims)

    @property
    def position_wires(self) -> tuple[int, ...]:
        return tuple(w for w in range(len(self.dims)) if w != self.coin_wire)

    @property
    def position_dims(self) -> tuple[int, ...]:
        return tuple(self.dims[w] for w in self.position_wires)


def make_layout(position_dims) -> RegisterLayout:
    """Build a walk register: position wires in order plus a binary coin on top."""
    dims = tuple(int(d) for d in position_dims)
    if not dims:
        raise ValidationError("need at least one position wire")
    return RegisterLayout(dims=dims + (2,), coin_wire=len(dims))


def state_space(dims) -> int:
    out = 1
    for d in dims:
        out *= d
    return out


def basis_index(dims, digits) -> int:
    """Mixed-radix index of a digit tuple (wire 0 = least significant)."""
    dims = tuple(dims)
    digits = tuple(digits)
    if len(dims) != len(digits):
        raise ValidationError("digit count does not match wire count")
    idx = 0
    stride = 1
    for d, v in zip(dims, digits):
        if not 0 <= v < d:
            raise ValidationError(f"digit {v} out of range for dimension {d}")
        idx += v * stride
        stride *= d
    return idx


def digits_of(dims, index: int) -> tuple[int, ...]:
    """Inverse of :func:`basis_index`."""
    dims = tuple(dims)
    if not 0 <= index < state_space(dims):
        raise ValidationError(f"basis index {index} out of range")
    out = []
    for d in dims:
        out.append(index % d)
        index //= d
    return tuple(out)


@dataclass(frozen=True)
class BasisState:
    """A computational basis state: one digit per wire, wire 0 first."""

    layout: RegisterLayout
    digits: tuple[int, ...]

    def __post_init__(self):
        basis_index(self.layout.dims, self.digits)  # validates

    @property
    def index(self) -> int:
        return basis_index(self.layout.dims, self.digits)

    def label(self) -> str:
        """Digit string printed most-significant wire first."""
        return "".join(str(v) for v in reversed(self.digits))


# ---------------------------------------------------------------------------
# Gate kinds


@dataclass(frozen=True)
class CyclicShift:
    """Adds ``k`` modulo ``d`` on the first ``d`` levels of a wire.

    On a wire whose effective dimension exceeds ``d`` the shift acts on
    levels 0..d-1 and leaves the higher levels alone.
    """

    k: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValidationError("cyclic shift modulus must be >= 2")
        if not 0 <= self.k < self.d:
            raise ValidationError("shift amount must satisfy 0 <= k < d")


@dataclass(frozen=True)
class Hadamard2:
    """Balanced two-level mixing gate (identity above level 1)."""


@dataclass(frozen=True)
class GeneralCoin:
    """Parametrized two-level coin; theta=pi/4, phi1=phi2=0 is Hadamard2."""

    theta: float
    phi1: float = 0.0
    phi2: float = 0.0


@dataclass(frozen=True)
class PauliX:
    """Swap of levels 0 and 1 (identity above level 1)."""


@dataclass(frozen=True)
class TGate:
    """pi/8 phase on level 1; identity elsewhere."""


@dataclass(frozen=True)
class TDagger:
    """Inverse of TGate."""


GateKind = (CyclicShift, Hadamard2, GeneralCoin, PauliX, TGate, TDagger)


def gate_unitary(kind, d: int) -> np.ndarray:
    """Dense unitary of ``kind`` on a wire of dimension ``d``.

    Two-level kinds embed as their 2x2 block plus identity on levels >= 2;
    a CyclicShift embeds its modulus-``kind.d`` cycle on the low levels.
    """
    if d < 2:
        raise ValidationError("wire dimension must be >= 2")
    if isinstance(kind, CyclicShift):
        if kind.d > d:
            raise ValidationError(
                f"cyclic shift modulus {kind.d} exceeds wire dimension {d}"
            )
        mat = np.zeros((d, d), dtype=np.complex128)
        for v in range(kind.d):
            mat[(v + kind.k) % kind.d, v] = 1.0
        for v in range(kind.d, d):
            mat[v, v] = 1.0
        return mat
    mat = np.eye(d, dtype=np.complex128)
    if isinstance(kind, Hadamard2):
        s = 1.0 / math.sqrt(2.0)
        mat[:2, :2] = [[s, s], [s, -s]]
    elif isinstance(kind, GeneralCoin):
        c, s = math.cos(kind.theta), math.sin(kind.theta)
        e1 = cmath.exp(1j * kind.phi1)
        e2 = cmath.exp(1j * kind.phi2)
        mat[:2, :2] = [[c, e1 * s], [e2 * s, -e1 * e2 * c]]
    elif isinstance(kind, PauliX):
        mat[0, 0] = mat[1, 1] = 0.0
        mat[0, 1] = mat[1, 0] = 1.0
    elif isinstance(kind, TGate):
        mat[1, 1] = cmath.exp(1j * math.pi / 4)
    elif isinstance(kind, TDagger):
        mat[1, 1] = cmath.exp(-1j * math.pi / 4)
    else:
        raise ValidationError(f"unknown gate kind {kind!r}")
    return mat


def is_unitary(mat: np.ndarray, tol: float = 1e-12) -> bool:
    n = mat.shape[0]
    return bool(np.max(np.abs(mat.conj().T @ mat - np.eye(n))) <= tol)


# ---------------------------------------------------------------------------
# Gate applications and circuits


@dataclass(frozen=True)
class GateApplication:
    """One gate instance: a kind, a target wire, and (wire, trigger level) controls."""

    kind: object
    target: int
    controls: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        norm = tuple((int(w), int(l)) for w, l in self.controls)
        object.__setattr__(self, "controls", norm)
        seen = set()
        for w, _ in norm:
            if w == self.target:
                raise ValidationError("control wire equals target wire")
            if w in seen:
                raise ValidationError(f"duplicate control wire {w}")
            seen.add(w)

    @property
    def wires(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.controls) + (self.target,)

    @property
    def n_controls(self) -> int:
        return len(self.controls)


def controlled(kind, target: int, *controls) -> GateApplication:
    """Convenience builder; each control is a wire index or a (wire, level) pair."""
    ctl = tuple(
        (c, 1) if isinstance(c, int) else (int(c[0]), int(c[1])) for c in controls
    )
    return GateApplication(kind=kind, target=target, controls=ctl)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over a layout, plus optional wire elevations.

    ``dim_overrides`` maps a wire to a temporarily larger dimension (d+1 or
    d+2) used by ancilla-free multi-control lowerings.
    """

    layout: RegisterLayout
    gates: tuple[GateApplication, ...] = ()
    dim_overrides: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        over = tuple(sorted((int(w), int(d)) for w, d in dict(self.dim_overrides).items()))
        object.__setattr__(self, "dim_overrides", over)
        dims = self.layout.dims
        for w, d in over:
            if not 0 <= w < len(dims):
                raise ValidationError(f"override wire {w} out of range")
            if d not in (dims[w] + 1, dims[w] + 2):
                raise ValidationError(
                    f"override on wire {w} must raise dimension to {dims[w]+1} or {dims[w]+2}"
                )
        eff = self.effective_dims
        if state_space(eff) > STATE_SPACE_CAP:
            raise ValidationError("effective state space exceeds cap")
        for g in self.gates:
            if not 0 <= g.target < len(eff):
                raise ValidationError(f"target wire {g.target} out of range")
            for w, level in g.controls:
                if not 0 <= w < len(eff):
                    raise ValidationError(f"control wire {w} out of range")
                if not 0 <= level < eff[w]:
                    raise ValidationError(
                        f"control level {level} out of range for wire {w} (dim {eff[w]})"
                    )
            gate_unitary(g.kind, eff[g.target])  # validates kind/dimension fit

    @property
    def effective_dims(self) -> tuple[int, ...]:
        dims = list(self.layout.dims)
        for w, d in self.dim_overrides:
            dims[w] = d
        return tuple(dims)

    @property
    def n_wires(self) -> int:
        return self.layout.n_wires

    def extended(self, gates, dim_overrides=()) -> Circuit:
        """New circuit with gates appended and overrides merged (max wins)."""
        merged = dict(self.dim_overrides)
        for w, d in dict(dim_overrides).items():
            merged[w] = max(merged.get(w, 0), d)
        return Circuit(
            layout=self.layout,
            gates=self.gates + tuple(gates),
            dim_overrides=tuple(merged.items()),
        )


# ---------------------------------------------------------------------------
# JSON serialization

_KIND_NAMES = {
    CyclicShift: "cyclic_shift",
    Hadamard2: "hadamard",
    GeneralCoin: "coin",
    PauliX: "x",
    TGate: "t",
    TDagger: "tdg",
}


def _gate_to_obj(gate: GateApplication) -> dict:
    kind = gate.kind
    obj: dict = {"kind": _KIND_NAMES[type(kind)]}
    if isinstance(kind, CyclicShift):
        obj["k"] = kind.k
        obj["d"] = kind.d
    elif isinstance(kind, GeneralCoin):
        obj["params"] = {"theta": kind.theta, "phi1": kind.phi1, "phi2": kind.phi2}
    obj["target"] = gate.target
    obj["controls"] = [{"wire": w, "level": l} for w, l in gate.controls]
    return obj


def _gate_from_obj(obj: dict) -> GateApplication:
    name = obj.get("kind")
    if name == "cyclic_shift":
        kind = CyclicShift(k=int(obj["k"]), d=int(obj["d"]))
    elif name == "hadamard":
        kind = Hadamard2()
    elif name == "coin":
        p = obj.get("params", {})
        kind = GeneralCoin(
            theta=float(p["theta"]), phi1=float(p["phi1"]), phi2=float(p["phi2"])
        )
    elif name == "x":
        kind = PauliX()
    elif name == "t":
        kind = TGate()
    elif name == "tdg":
        kind = TDagger()
    else:
        raise ValidationError(f"unknown gate kind {name!r}")
    controls = tuple((int(c["wire"]), int(c["level"])) for c in obj.get("controls", []))
    return GateApplication(kind=kind, target=int(obj["target"]), controls=controls)


def circuit_to_json(circuit: Circuit) -> str:
    """Serialize a circuit. Floats keep full round-trip precision."""
    obj: dict = {
        "dims": list(circuit.layout.dims),
        "coin_wire": circuit.layout.coin_wire,
        "gates": [_gate_to_obj(g) for g in circuit.gates],
    }
    if circuit.dim_overrides:
        obj["dim_overrides"] = {str(w): d for w, d in circuit.dim_overrides}
    return json.dumps(obj, separators=(",", ":"))


def circuit_from_json(text: str) -> Circuit:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed circuit JSON: {exc}") from None
    dims = tuple(int(d) for d in obj["dims"])
    coin = obj.get("coin_wire")
    layout = RegisterLayout(dims=dims, coin_wire=None if coin is None else int(coin))
    gates = tuple(_gate_from_obj(g) for g in obj.get("gates", []))
    overrides = tuple(
        (int(w), int(d)) for w, d in obj.get("dim_overrides", {}).items()
    )
    return Circuit(layout=layout, gates=gates, dim_overrides=overrides)
