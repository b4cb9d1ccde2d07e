"""Frozen reference values for the test suite.

Every constant here was produced by an independent oracle route (classical
two-frontier tracking for the mappings, a 2x2 transfer-matrix walk for the
distributions, direct closed-form evaluation for the counts) and frozen.
Tests compare live package output against these constants; nothing in here
is generated by the code under test.

Digit strings read most-significant wire first, so "311" on dims (2,4,4)
means q2=3, q1=1, q0=1.
"""

# Position -> digit-string mappings ----------------------------------------

# naive scheme, three binary wires, 3 steps
MAPPING_NAIVE_LINE8 = {
    0: "000",
    -1: "111",
    1: "001",
    -2: "110",
    2: "010",
    -3: "101",
    3: "011",
}

# enhanced scheme, three binary wires, 3 steps
MAPPING_ENHANCED_LINE8 = {
    0: "000",
    -1: "001",
    1: "011",
    -2: "110",
    2: "010",
    -3: "111",
    3: "101",
}

# enhanced scheme, four binary wires, 7 steps
MAPPING_ENHANCED_LINE16 = {
    0: "0000",
    -1: "0001",
    1: "0011",
    -2: "1110",
    2: "0010",
    -3: "1111",
    3: "0101",
    -4: "1100",
    4: "0100",
    -5: "1101",
    5: "0111",
    -6: "1010",
    6: "0110",
    -7: "1011",
    7: "1001",
}

# qudit-direct scheme on dims (2,4,4), 16 steps: the two frontiers meet at
# |200>, so x=-16 and x=+16 share a label.  The x=-7 row is the
# oracle-derived value |311> (cross-checked against the forward walk on
# both frontier parities).
MAPPING_DIRECT_244 = {
    0: "000",
    -1: "001",
    1: "011",
    -2: "330",
    2: "010",
    -3: "331",
    3: "021",
    -4: "320",
    4: "020",
    -5: "321",
    5: "031",
    -6: "310",
    6: "030",
    -7: "311",
    7: "101",
    -8: "300",
    8: "100",
    -9: "301",
    9: "111",
    -10: "230",
    10: "110",
    -11: "231",
    11: "121",
    -12: "220",
    12: "120",
    -13: "221",
    13: "131",
    -14: "210",
    14: "130",
    -15: "211",
    15: "201",
    -16: "200",
    16: "200",
}

COLLISION_DIRECT_244 = ("200", (-16, 16))

# qudit-modified scheme on dims (4,4,4), 32 steps: identical to the direct
# table for |x| <= 15, then continues through the wrapped least-significant
# wire until the frontiers meet at |002>.
_MODIFIED_444_TAIL = {
    -16: "200",
    16: "202",
    -17: "203",
    17: "213",
    -18: "132",
    18: "212",
    -19: "133",
    19: "223",
    -20: "122",
    20: "222",
    -21: "123",
    21: "233",
    -22: "112",
    22: "232",
    -23: "113",
    23: "303",
    -24: "102",
    24: "302",
    -25: "103",
    25: "313",
    -26: "032",
    26: "312",
    -27: "033",
    27: "323",
    -28: "022",
    28: "322",
    -29: "023",
    29: "333",
    -30: "012",
    30: "332",
    -31: "013",
    31: "003",
    -32: "002",
    32: "002",
}

MAPPING_MODIFIED_444 = {
    **{x: label for x, label in MAPPING_DIRECT_244.items() if abs(x) <= 15},
    **_MODIFIED_444_TAIL,
}

COLLISION_MODIFIED_444 = ("002", (-32, 32))

# qudit-modified scheme on dims (4,3,3), 18 steps
MAPPING_MODIFIED_433 = {
    0: "000",
    -1: "001",
    1: "011",
    -2: "220",
    2: "010",
    -3: "221",
    3: "021",
    -4: "210",
    4: "020",
    -5: "211",
    5: "101",
    -6: "200",
    6: "100",
    -7: "201",
    7: "111",
    -8: "120",
    8: "110",
    -9: "123",
    9: "121",
    -10: "112",
    10: "122",
    -11: "113",
    11: "203",
    -12: "102",
    12: "202",
    -13: "103",
    13: "213",
    -14: "022",
    14: "212",
    -15: "023",
    15: "223",
    -16: "012",
    16: "222",
    -17: "013",
    17: "003",
    -18: "002",
    18: "002",
}

COLLISION_MODIFIED_433 = ("002", (-18, 18))

# Exact walk distributions (coin starts in |1>, Hadamard coin) -------------

EXACT_DIST_LINE8_T3 = {-3: 1 / 8, -1: 1 / 8, 1: 5 / 8, 3: 1 / 8}

EXACT_DIST_LINE16_T7 = {
    -7: 1 / 128,
    -5: 17 / 128,
    -3: 5 / 128,
    -1: 9 / 128,
    1: 17 / 128,
    3: 41 / 128,
    5: 37 / 128,
    7: 1 / 128,
}

# Published 1024-shot histogram bars; exact probabilities must sit within
# 0.05 of every bar.
SHOT_BARS_LINE8_T3 = {-3: 0.1221, -1: 0.1348, 1: 0.6328, 3: 0.1104}
SHOT_BARS_LINE16_T7 = {3: 0.3408, 5: 0.28125}

# Deterministic sampling pin: enhanced three-wire walk, 3 steps, 1024 shots,
# seed 42 (counter-based generator keyed by the seed).
SAMPLE_COUNTS_SEED42 = {-3: 134, -1: 120, 1: 670, 3: 100}

# Gate-lowering pins --------------------------------------------------------

# Ancilla-free lowering chains, frozen gate for gate as
# (kind-name, shift, modulus, target, controls).

# Two binary controls via one borrowed third level on the middle wire.
TWO_CONTROL_CHAIN = (
    ("cyclic_shift", 1, 3, 1, ((0, 1),)),
    ("x", None, None, 2, ((1, 2),)),
    ("cyclic_shift", 2, 3, 1, ((0, 1),)),
)
TWO_CONTROL_OVERRIDES = ((1, 3),)

# Three qutrit controls: both summary wires borrow a fourth level.
THREE_CONTROL_QUTRIT_CHAIN = (
    ("cyclic_shift", 1, 4, 1, ((0, 2),)),
    ("cyclic_shift", 1, 4, 2, ((1, 3),)),
    ("cyclic_shift", 1, 3, 3, ((2, 3),)),
    ("cyclic_shift", 3, 4, 2, ((1, 3),)),
    ("cyclic_shift", 3, 4, 1, ((0, 2),)),
)
THREE_CONTROL_QUTRIT_OVERRIDES = ((1, 4), (2, 4))

# Seven binary controls: 13 gates, preparation depth 3, elevated wires.
SEVEN_CONTROL_OVERRIDES = ((1, 3), (3, 4), (5, 3), (6, 4))

# Clifford+T lowering of the doubly-controlled NOT: gate census and depth.
TOFFOLI_T_FAMILY = 7  # 4 T + 3 T-dagger
TOFFOLI_T_COUNT = 4
TOFFOLI_TDG_COUNT = 3
TOFFOLI_CX_COUNT = 6
TOFFOLI_H_COUNT = 2
TOFFOLI_DEPTH = 12

# Optimal preparation-phase depths under the two-extra-levels cap.
PREPARATION_DEPTHS = {
    2: 1,
    3: 2,
    4: 2,
    5: 3,
    6: 3,
    7: 3,
    8: 4,
    9: 4,
    10: 4,
    11: 4,
    12: 4,
    13: 5,
    14: 5,
    15: 5,
    16: 5,
}

# Resource-model pins -------------------------------------------------------

# closed_form_estimate("enhanced", n=3, t=1)
CLOSED_ENHANCED_N3_T1 = {"count_1q": 3, "count_2q": 6, "depth": 6, "highest_control": 2}
# closed_form_estimate("naive", n=3, t=1)
CLOSED_NAIVE_N3_T1 = {"count_1q": 3, "count_2q": 38, "depth": 35, "highest_control": 3}

# Projected two-qubit cost of one multi-controlled NOT by control count.
MCT_TWO_QUBIT_COSTS = {1: 1, 2: 5, 3: 13, 4: 25, 5: 41}

# intermediate_qudit_closed_form pins: walk register width -> (depth, gates)
INTERMEDIATE_CLOSED = {3: (16, 14), 4: (48, 52)}

# success_probability(count_1q=2, count_2q=0, depth=2) with p1=0.9, t1=100
SUCCESS_EXAMPLE = 0.7939609253784718

# Mixed-radix indexing pin: dims (4,3,3,2) LSB-first, digits (3,2,2,1)
INDEX_PIN = ((4, 3, 3, 2), (3, 2, 2, 1), 71)
