"""
Published matrices, vectors and eigen-facts for the three worked examples.

Entries are copied exactly as printed; nothing here is derived from the
library so the reproduction runner compares against independent data.
"""
from typing import Dict, List, Tuple

Rows = List[List[int]]

# Example 1: Fano plane against the 28-block (7, 28, 12, 3, 4) design.
EX1_M: Rows = [
    [2, 2, 1, 1, 1, 2, 1, 1, 0, 0, 1, 0, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 2, 2, 1, 1, 0, 1],
    [1, 0, 1, 0, 2, 1, 2, 1, 2, 1, 0, 1, 2, 2, 1, 1, 2, 1, 1, 0, 2, 2, 2, 1, 2, 2, 2, 1],
    [0, 1, 0, 1, 1, 1, 0, 2, 1, 2, 2, 1, 1, 0, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2],
    [1, 2, 2, 1, 1, 2, 2, 2, 2, 1, 2, 2, 0, 1, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1, 2, 1, 2],
    [1, 1, 2, 2, 0, 0, 1, 0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 2, 0, 1, 1, 1, 2, 1, 2, 2],
    [2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 0, 0, 1, 0, 1, 1, 2, 1, 2, 2, 0, 1, 1],
    [2, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0],
]

EX1_MMT_DIAGONAL = 60
EX1_MMT_OFF_DIAGONAL = 44
EX1_EIGENVALUES: Tuple[int, int] = (324, 16)
EX1_MULTIPLICITIES: Tuple[int, int] = (1, 6)

# Fano plane against itself, also printed with the first example.
EX1_SELF_DIAGONAL = 3
EX1_SELF_OFF_DIAGONAL = 1
EX1_SELF_MMT_DIAGONAL = 15
EX1_SELF_MMT_OFF_DIAGONAL = 11
EX1_SELF_EIGENVALUES: Tuple[int, int] = (81, 4)
EX1_SELF_MULTIPLICITIES: Tuple[int, int] = (1, 6)

EX1_Z_VECTORS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (1, 2): (0, -1, 0, 0, 1, -1, 1),
    (1, 3): (1, -1, -1, 0, 1, 0, 0),
}

# Example 2: trivial design against the Fano plane.
EX2_MMT_DIAGONAL = 3
EX2_MMT_OFF_DIAGONAL = 1
EX2_EIGENVALUES: Tuple[int, int] = (9, 2)
EX2_MULTIPLICITIES: Tuple[int, int] = (1, 6)
EX2_RANK = 7

# Example 3: a (6, 10, 5, 3, 2) design against all 2-subsets of {1..6}.
EX3_M: Rows = [
    [2, 1, 1, 2, 1, 1, 1, 2, 1, 0, 1, 0, 1, 0, 1],
    [2, 1, 1, 1, 2, 1, 1, 1, 2, 0, 0, 1, 0, 1, 1],
    [1, 2, 2, 1, 1, 1, 1, 0, 0, 2, 1, 1, 1, 1, 0],
    [1, 2, 1, 2, 1, 1, 0, 1, 0, 1, 2, 1, 1, 0, 1],
    [1, 1, 2, 1, 2, 0, 1, 0, 1, 1, 0, 1, 1, 2, 1],
    [1, 1, 1, 0, 0, 2, 2, 1, 1, 2, 1, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 2, 1, 1, 2, 1, 1, 2, 0, 1, 1],
    [1, 0, 1, 1, 0, 1, 2, 2, 1, 1, 1, 0, 2, 1, 1],
    [0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 2, 2, 1, 1, 2],
    [0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2],
]

EX3_MMT: Rows = [
    [21, 17, 13, 17, 13, 13, 13, 17, 13, 13],
    [17, 21, 13, 13, 17, 13, 17, 13, 13, 13],
    [13, 13, 21, 17, 17, 17, 13, 13, 13, 13],
    [17, 13, 17, 21, 13, 13, 13, 13, 17, 13],
    [13, 17, 17, 13, 21, 13, 13, 13, 13, 17],
    [13, 13, 17, 13, 13, 21, 17, 17, 13, 13],
    [13, 17, 13, 13, 13, 17, 21, 13, 17, 13],
    [17, 13, 13, 13, 13, 17, 13, 21, 13, 17],
    [13, 13, 13, 17, 13, 13, 17, 13, 21, 17],
    [13, 13, 13, 13, 17, 13, 13, 17, 17, 21],
]

EX3_MTM: Rows = [
    [14, 11, 11, 11, 11, 11, 11, 11, 11, 8, 8, 8, 8, 8, 8],
    [11, 14, 11, 11, 11, 11, 8, 8, 8, 11, 11, 11, 8, 8, 8],
    [11, 11, 14, 11, 11, 8, 11, 8, 8, 11, 8, 8, 11, 11, 8],
    [11, 11, 11, 14, 11, 8, 8, 11, 8, 8, 11, 8, 11, 8, 11],
    [11, 11, 11, 11, 14, 8, 8, 8, 11, 8, 8, 11, 8, 11, 11],
    [11, 11, 8, 8, 8, 14, 11, 11, 11, 11, 11, 11, 8, 8, 8],
    [11, 8, 11, 8, 8, 11, 14, 11, 11, 11, 8, 8, 11, 11, 8],
    [11, 8, 8, 11, 8, 11, 11, 14, 11, 8, 11, 8, 11, 8, 11],
    [11, 8, 8, 8, 11, 11, 11, 11, 14, 8, 8, 11, 8, 11, 11],
    [8, 11, 11, 8, 8, 11, 11, 8, 8, 14, 11, 11, 11, 11, 8],
    [8, 11, 8, 11, 8, 11, 8, 11, 8, 11, 14, 11, 11, 8, 11],
    [8, 11, 8, 8, 11, 11, 8, 8, 11, 11, 11, 14, 8, 11, 11],
    [8, 8, 11, 11, 8, 8, 11, 11, 8, 11, 11, 8, 14, 11, 11],
    [8, 8, 11, 8, 11, 8, 11, 8, 11, 11, 8, 11, 11, 14, 11],
    [8, 8, 8, 11, 11, 8, 8, 11, 11, 8, 11, 11, 11, 11, 14],
]

EX3_MMT_VALUES = frozenset({21, 17, 13})
EX3_MTM_VALUES = frozenset({14, 11, 8})
EX3_EIGENVALUES: Tuple[int, int] = (150, 12)
EX3_MMT_KERNEL_DIM = 4
EX3_MTM_KERNEL_DIM = 9
EX3_MU2_MULTIPLICITY = 5

EX3_Z_VECTORS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (1, 2): (1, 1, -1, -1, 0, 0, 0, 1, -1, 0),
    (3, 4): (-1, 0, 1, -1, 1, 1, 0, 0, -1, 0),
}

EX3_KERNEL_VECTORS: List[Tuple[int, ...]] = [
    (1, -1, 1, -1, 0, -1, 1, 0, 0, 0),
    (-1, 1, 1, 0, -1, -1, 0, 1, 0, 0),
    (1, 0, 2, -2, -1, -1, 0, 0, 1, 0),
    (0, 1, 2, -1, -2, -1, 0, 0, 0, 1),
]
