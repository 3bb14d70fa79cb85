"""
Pytest configuration, shared designs and independent oracles.

The oracles here (schoolbook product, cofactor expansion, brute-force pair
counting) deliberately share no code with src so they can cross-check it.
"""
import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import pytest

from src.designs.constructions import (
    complement_design,
    complete_design,
    cyclic_design,
    multiset_difference,
    trivial_design,
    union_design,
)
from src.designs.fixtures import fixture
from src.models.design import Design
from src.models.difference_set import DifferenceSetSpec


@pytest.fixture(autouse=True)
def restore_root_logger():
    """configure_logging replaces the root handlers; put them back after each test."""
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


@pytest.fixture(scope='session')
def fano() -> Design:
    return fixture('fano')


@pytest.fixture(scope='session')
def ex1_d2() -> Design:
    return fixture('ex1_d2')


@pytest.fixture(scope='session')
def ex3_d1() -> Design:
    return fixture('ex3_d1')


@pytest.fixture(scope='session')
def ex3_d2() -> Design:
    return fixture('ex3_d2')


def build_corpus() -> Dict[str, Design]:
    """Designs on v = 4, 6, 7, 8 and 11 used by the theorem sweeps."""
    fano = fixture('fano')
    ex3_d1 = fixture('ex3_d1')
    return {
        'trivial4': trivial_design(4),
        'complete4_2': complete_design(4, 2),
        'complete4_3': complete_design(4, 3),
        'trivial6': trivial_design(6),
        'ex3_d1': ex3_d1,
        'ex3_d2': fixture('ex3_d2'),
        'complete6_3': complete_design(6, 3),
        'ex3_d1_partner': multiset_difference(complete_design(6, 3), ex3_d1),
        'trivial7': trivial_design(7),
        'fano': fano,
        'fano_complement': complement_design(fano),
        'fano_doubled': union_design(fano, fano),
        'cyclic7': cyclic_design(DifferenceSetSpec.create_new(7, [1, 2, 4])),
        'ex1_d2': fixture('ex1_d2'),
        'complete7_2': complete_design(7, 2),
        'complete7_3': complete_design(7, 3),
        'trivial8': trivial_design(8),
        'complete8_2': complete_design(8, 2),
        'complete8_3': complete_design(8, 3),
        'complete8_7': complete_design(8, 7),
        'cyclic11': cyclic_design(DifferenceSetSpec.create_new(11, [1, 3, 4, 5, 9])),
        'cyclic11_complement': complement_design(
            cyclic_design(DifferenceSetSpec.create_new(11, [1, 3, 4, 5, 9]))
        ),
    }


CORPUS = build_corpus()

CORPUS_PAIRS: List[Tuple[str, str]] = [
    (a, b) for a in CORPUS for b in CORPUS if CORPUS[a].v == CORPUS[b].v
]


@pytest.fixture(scope='session')
def corpus() -> Dict[str, Design]:
    return CORPUS


# Independent oracles

def schoolbook_product(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> List[List[int]]:
    """Triple-loop matrix product."""
    n, m, p = len(a), len(b), len(b[0])
    result = [[0] * p for _ in range(n)]
    for i in range(n):
        for j in range(p):
            total = 0
            for k in range(m):
                total += a[i][k] * b[k][j]
            result[i][j] = total
    return result


def cofactor_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_determinant(minor)
    return total


def det_shifted(rows: Sequence[Sequence[int]], t: int) -> int:
    """det(A - tI) by cofactor expansion."""
    n = len(rows)
    shifted = [[rows[i][j] - (t if i == j else 0) for j in range(n)] for i in range(n)]
    return cofactor_determinant(shifted)


def brute_pair_counts(v: int, blocks: Sequence[Sequence[int]]) -> Dict[Tuple[int, int], int]:
    """Number of blocks containing each unordered pair of distinct points."""
    return {
        (x, y): sum(1 for block in blocks if x in block and y in block)
        for x, y in combinations(range(1, v + 1), 2)
    }


def brute_params(v: int, blocks: Sequence[Sequence[int]]) -> Tuple[int, int, int, int, int]:
    """(v, b, r, k, lambda) by direct enumeration, assuming the design is balanced."""
    r = sum(1 for block in blocks if 1 in block)
    pairs = brute_pair_counts(v, blocks)
    lam = pairs[(1, 2)] if pairs else 0
    return v, len(blocks), r, len(blocks[0]), lam
