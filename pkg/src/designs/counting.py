"""
Point and pair counting over block lists, and derivation of design parameters.

These functions work on plain (v, blocks) data so the Design model can call
them while validating itself.
"""
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from src.errors import (
    DuplicatePointInBlock,
    EmptyDesign,
    NonUniformBlockSize,
    NonUniformPairCount,
    NonUniformReplication,
    PointOutOfRange,
)
from src.models.design_params import DesignParams

Block = Tuple[int, ...]


def canonical_block(points: Iterable[int], v: int, block_index: int = 0) -> Block:
    """
    Check a raw block against 1..v and return it sorted ascending.

    Args:
        points: Points of the block in any order
        v: Number of points of the ambient design
        block_index: Zero-based position of the block (for error messages)

    Returns:
        The block as a strictly increasing tuple

    Raises:
        PointOutOfRange: If a point is not an integer in 1..v
        DuplicatePointInBlock: If a point is listed twice
    """
    seen = set()
    for point in points:
        if isinstance(point, bool) or not isinstance(point, int) or not 1 <= point <= v:
            raise PointOutOfRange(point, v, block_index)
        if point in seen:
            raise DuplicatePointInBlock(point, block_index)
        seen.add(point)
    return tuple(sorted(seen))


def replication_counts_of(v: int, blocks: Sequence[Block]) -> List[int]:
    """Number of blocks containing each point 1..v (index 0 is point 1)."""
    counts = [0] * v
    for block in blocks:
        for point in block:
            counts[point - 1] += 1
    return counts


def pair_counts_of(v: int, blocks: Sequence[Block]) -> List[List[int]]:
    """
    Symmetric v x v matrix of pair co-occurrence counts.

    The diagonal holds the replication count of each point.
    """
    counts = [[0] * v for _ in range(v)]
    for block in blocks:
        for point in block:
            counts[point - 1][point - 1] += 1
        for x, y in combinations(block, 2):
            counts[x - 1][y - 1] += 1
            counts[y - 1][x - 1] += 1
    return counts


def derive_params(v: int, blocks: Sequence[Iterable[int]]) -> DesignParams:
    """
    Check the BIBD axioms on a block list and derive (v, b, r, k, lambda).

    Args:
        v: Number of points
        blocks: Blocks in order; each is canonicalized before counting

    Returns:
        The derived DesignParams (whose constructor re-checks bk = vr and
        r(k-1) = lambda(v-1))

    Raises:
        EmptyDesign: If v < 1 or there are no blocks
        PointOutOfRange, DuplicatePointInBlock: On malformed blocks
        NonUniformBlockSize, NonUniformReplication, NonUniformPairCount:
            On the first block, point or pair that breaks uniformity
        InvalidParameters: If the derived tuple breaks a parameter relation
    """
    if v < 1:
        raise EmptyDesign(f"v must be positive, got {v}")
    canonical = [canonical_block(block, v, i) for i, block in enumerate(blocks)]
    if not canonical:
        raise EmptyDesign("a design needs at least one block")

    k = len(canonical[0])
    for i, block in enumerate(canonical):
        if len(block) != k:
            raise NonUniformBlockSize(i, len(block), k)
    if k == 0:
        raise EmptyDesign("blocks must not be empty")

    replication = replication_counts_of(v, canonical)
    r = replication[0]
    for point, count in enumerate(replication, start=1):
        if count != r:
            raise NonUniformReplication(point, count, r, replication)

    lambda_ = 0
    if v > 1:
        pairs = pair_counts_of(v, canonical)
        lambda_ = pairs[0][1]
        for x, y in combinations(range(1, v + 1), 2):
            count = pairs[x - 1][y - 1]
            if count != lambda_:
                raise NonUniformPairCount((x, y), count, lambda_)

    return DesignParams(v=v, b=len(canonical), r=r, k=k, lambda_=lambda_)
