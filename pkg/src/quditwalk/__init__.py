"""Quantum-walk circuit synthesis on mixed-radix qudit registers.

Builds shift-coin walk circuits under four encoding schemes, simulates them
exactly, lowers multi-controlled gates, and estimates hardware cost.
"""
from .core import (
    BasisState,
    Circuit,
    CyclicShift,
    GateApplication,
    GeneralCoin,
    Hadamard2,
    PauliX,
    RegisterLayout,
    TDagger,
    TGate,
    basis_index,
    circuit_from_json,
    circuit_to_json,
    controlled,
    digits_of,
    gate_unitary,
    make_layout,
    state_space,
)
from .errors import UnsupportedError, ValidationError
from .lowering import (
    EquivalenceReport,
    LoweringStrategy,
    decompose_mct_intermediate,
    decompose_toffoli_clifford_t,
    lower_circuit,
    preparation_depth,
    verify_equivalence,
)
from .resources import (
    DEFAULT_NOISE,
    NoiseParams,
    ResourceEstimate,
    closed_form_estimate,
    compare_schemes,
    count_resources,
    intermediate_qudit_closed_form,
    layer_assignment,
    mct_two_qubit_cost,
    projected_two_qubit_count,
    success_probability,
)
from .simulator import (
    Distribution,
    ShotCounts,
    StateVector,
    apply_gate,
    position_distribution,
    run,
    sample,
)
from .walks import (
    PositionMapping,
    Scheme,
    WalkConfig,
    build_walk,
    default_initial,
    derive_max_steps,
    derive_position_mapping,
)

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "Circuit",
    "CyclicShift",
    "DEFAULT_NOISE",
    "Distribution",
    "EquivalenceReport",
    "GateApplication",
    "GeneralCoin",
    "Hadamard2",
    "LoweringStrategy",
    "NoiseParams",
    "PauliX",
    "PositionMapping",
    "RegisterLayout",
    "ResourceEstimate",
    "Scheme",
    "ShotCounts",
    "StateVector",
    "TDagger",
    "TGate",
    "UnsupportedError",
    "ValidationError",
    "WalkConfig",
    "apply_gate",
    "basis_index",
    "build_walk",
    "circuit_from_json",
    "circuit_to_json",
    "closed_form_estimate",
    "compare_schemes",
    "controlled",
    "count_resources",
    "decompose_mct_intermediate",
    "decompose_toffoli_clifford_t",
    "default_initial",
    "derive_max_steps",
    "derive_position_mapping",
    "digits_of",
    "gate_unitary",
    "intermediate_qudit_closed_form",
    "layer_assignment",
    "lower_circuit",
    "make_layout",
    "mct_two_qubit_cost",
    "position_distribution",
    "preparation_depth",
    "projected_two_qubit_count",
    "run",
    "sample",
    "state_space",
    "success_probability",
    "verify_equivalence",
]
