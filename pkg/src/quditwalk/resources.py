"""Gate census, layered depth, closed-form resource models, and the noisy
success-probability comparison between the naive and enhanced schemes.

The closed forms price an (x-1)-control Toffoli on x wires at 2x^2-6x+5
two-qubit gates (a bare CX costs 1) and 8x-20 depth, then sum those kernels
over each step's ladder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Circuit
from .errors import ValidationError
from .walks import Scheme


@dataclass(frozen=True)
class ResourceEstimate:
    count_1q: int
    count_2q: int
    count_by_controls: tuple[tuple[int, int], ...]
    depth: int
    highest_control: int

    def __post_init__(self):
        if min(
            (self.count_1q, self.count_2q, self.depth, self.highest_control), default=0
        ) < 0:
            raise ValidationError("resource counts must be nonnegative")
        keys = [c for c, _ in self.count_by_controls]
        if keys and self.highest_control != max(keys):
            raise ValidationError("highest_control inconsistent with count_by_controls")

    @property
    def controls_dict(self) -> dict[int, int]:
        return dict(self.count_by_controls)


@dataclass(frozen=True)
class NoiseParams:
    """Per-gate success probabilities and the relaxation-time scale.

    ``source`` records where the numbers came from; the defaults below are
    illustrative placeholders, not hardware facts.
    """

    p_success_1q: float
    p_success_2q: float
    t1: float
    source: str = ""

    def __post_init__(self):
        for p in (self.p_success_1q, self.p_success_2q):
            if not 0.0 < p <= 1.0:
                raise ValidationError("success probabilities must lie in (0, 1]")
        if self.t1 <= 0:
            raise ValidationError("t1 must be positive")


DEFAULT_NOISE = NoiseParams(
    p_success_1q=0.999,
    p_success_2q=0.99,
    t1=1000.0,
    source="illustrative defaults; supply calibrated values for real estimates",
)


# ---------------------------------------------------------------------------
# Measured counts


def layer_assignment(gates) -> list[int]:
    """Greedy as-soon-as-possible layer per gate (disjoint wire sets share)."""
    last: dict[int, int] = {}
    layers = []
    for g in gates:
        layer = 1 + max((last.get(w, 0) for w in g.wires), default=0)
        layers.append(layer)
        for w in g.wires:
            last[w] = layer
    return layers


def count_resources(circuit: Circuit) -> ResourceEstimate:
    """Census of a concrete gate list plus its greedy layered depth."""
    count_1q = 0
    by_controls: dict[int, int] = {}
    for g in circuit.gates:
        if g.n_controls == 0:
            count_1q += 1
        else:
            by_controls[g.n_controls] = by_controls.get(g.n_controls, 0) + 1
    layers = layer_assignment(circuit.gates)
    return ResourceEstimate(
        count_1q=count_1q,
        count_2q=by_controls.get(1, 0),
        count_by_controls=tuple(sorted(by_controls.items())),
        depth=max(layers, default=0),
        highest_control=max(by_controls, default=0),
    )


def mct_two_qubit_cost(width: int) -> int:
    """Two-qubit gates in the referenced synthesis of a (width-1)-control NOT."""
    if width < 2:
        raise ValidationError("a controlled gate spans at least 2 wires")
    return 2 * width * width - 6 * width + 5


def projected_two_qubit_count(circuit: Circuit) -> int:
    """Total 2-qubit cost of a circuit once every MCT is synthesized."""
    return sum(
        mct_two_qubit_cost(g.n_controls + 1)
        for g in circuit.gates
        if g.n_controls >= 1
    )


# ---------------------------------------------------------------------------
# Closed forms


def closed_form_estimate(scheme: Scheme, n: int, t: int) -> ResourceEstimate:
    """Resource model of an n-qubit, t-step binary walk.

    The 1-qubit count 3t is exact for the naive scheme; the enhanced scheme
    alternates 2 and 4 per step, so 3t holds exactly at even t and overcounts
    by one at odd t.
    """
    scheme = Scheme(scheme)
    if n < 3:
        raise ValidationError("closed forms need n >= 3")
    if t < 1:
        raise ValidationError("closed forms need t >= 1")
    if scheme == Scheme.ENHANCED:
        cost_sum = sum(mct_two_qubit_cost(x) for x in range(3, n + 1))
        depth_sum = sum(8 * x - 20 for x in range(3, n + 1))
        even_steps, odd_steps = (t + 1) // 2, t // 2
        return ResourceEstimate(
            count_1q=3 * t,
            count_2q=t * (cost_sum + 1),
            count_by_controls=tuple((c, t) for c in range(1, n)),
            depth=even_steps * (depth_sum + 2) + odd_steps * (depth_sum + 4),
            highest_control=n - 1,
        )
    if scheme == Scheme.NAIVE:
        cost_sum = sum(mct_two_qubit_cost(x) for x in range(3, n + 2))
        depth_sum = sum(8 * x - 20 for x in range(3, n + 2))
        return ResourceEstimate(
            count_1q=3 * t,
            count_2q=2 * t * (cost_sum + 1),
            count_by_controls=tuple((c, 2 * t) for c in range(1, n + 1)),
            depth=t * (2 * depth_sum + 3),
            highest_control=n,
        )
    raise ValidationError("closed forms cover the naive and enhanced schemes")


def intermediate_qudit_closed_form(n_qubits: int) -> ResourceEstimate:
    """Depth and gate count model for the fully lowered n-qubit walk.

    Per block, a k-control gate lowers to 2k-1 two-wire gates (the 2x-3
    summand at x=k+1) with a ceil(log2 k)-layer preparation tree.
    """
    if n_qubits < 3:
        raise ValidationError("model needs at least 3 qubits")
    n = n_qubits
    depth = 2 ** (n - 1) * (
        sum(math.ceil(math.log2(x)) for x in range(2, n)) + 1
    ) + 3 * 2 ** (n - 2) + 2 ** (n - 2)
    gates = 2 ** (n - 1) * (sum(2 * x - 3 for x in range(2, n)) + 1) + 3 * 2 ** (n - 2)
    return ResourceEstimate(
        count_1q=0,
        count_2q=gates,
        count_by_controls=((1, gates),),
        depth=depth,
        highest_control=1,
    )


# ---------------------------------------------------------------------------
# Success probability


def success_probability(estimate: ResourceEstimate, params: NoiseParams) -> float:
    """P = p1^count_1q * p2^count_2q * exp(-depth/t1), depth factor once."""
    return (
        params.p_success_1q**estimate.count_1q
        * params.p_success_2q**estimate.count_2q
        * math.exp(-estimate.depth / params.t1)
    )


def compare_schemes(n_values, t: int, params: NoiseParams) -> list[dict]:
    """Closed-form naive-vs-enhanced series for plotting or CSV export."""
    rows = []
    for n in n_values:
        naive = closed_form_estimate(Scheme.NAIVE, n, t)
        enhanced = closed_form_estimate(Scheme.ENHANCED, n, t)
        rows.append(
            {
                "n": n,
                "naive_2q": naive.count_2q,
                "enhanced_2q": enhanced.count_2q,
                "naive_depth": naive.depth,
                "enhanced_depth": enhanced.depth,
                "naive_success": success_probability(naive, params),
                "enhanced_success": success_probability(enhanced, params),
            }
        )
    return rows
