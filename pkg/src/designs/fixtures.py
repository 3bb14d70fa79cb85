"""
Hard-coded designs from the published examples.

Block lists are kept exactly as printed, including block order and the
printed order of points inside each block (points are sorted on ingestion).
They are not derived from constructions so golden data cannot drift.
"""
from typing import Dict, List

from src.errors import UnknownFixture
from src.models.design import Design

FANO_BLOCKS: List[List[int]] = [
    [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [1, 5, 6], [2, 6, 7], [1, 3, 7],
]

EX1_D2_BLOCKS: List[List[int]] = [
    [7, 1, 2], [7, 1, 4], [7, 1, 5], [7, 1, 6], [7, 2, 3], [7, 2, 4],
    [7, 2, 5], [7, 3, 4], [7, 3, 5], [7, 3, 6], [7, 4, 6], [7, 5, 6],
    [1, 2, 3], [1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 3, 6],
    [1, 4, 5], [1, 4, 6], [2, 3, 4], [2, 3, 6], [2, 4, 5], [2, 4, 6],
    [2, 5, 6], [3, 4, 5], [3, 5, 6], [4, 5, 6],
]

EX3_D1_BLOCKS: List[List[int]] = [
    [6, 1, 4], [6, 1, 5], [6, 2, 3], [6, 2, 4], [6, 3, 5],
    [1, 2, 3], [1, 2, 5], [1, 3, 4], [2, 4, 5], [3, 4, 5],
]

EX3_D2_BLOCKS: List[List[int]] = [
    [6, 1], [6, 2], [6, 3], [6, 4], [6, 5],
    [1, 2], [1, 3], [1, 4], [1, 5], [2, 3],
    [2, 4], [2, 5], [3, 4], [3, 5], [4, 5],
]

FIXTURES: Dict[str, tuple] = {
    'fano': (7, FANO_BLOCKS),
    'ex1_d2': (7, EX1_D2_BLOCKS),
    'ex3_d1': (6, EX3_D1_BLOCKS),
    'ex3_d2': (6, EX3_D2_BLOCKS),
}


def fixture(name: str) -> Design:
    """
    Return a published example design.

    Args:
        name: One of fano, ex1_d2, ex3_d1, ex3_d2

    Returns:
        The design with blocks in the published order

    Raises:
        UnknownFixture: If the name is not known
    """
    try:
        v, blocks = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture '{name}', expected one of {', '.join(sorted(FIXTURES))}"
        ) from None
    return Design.create_new(v, blocks)
