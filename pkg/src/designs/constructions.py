"""
Design family generators.

Every generator returns a validated Design; block order is documented per
generator because matrices depend on it even though spectra do not.
"""
import logging
from collections import Counter
from itertools import combinations
from typing import List

from src.errors import (
    BlockNotPresent,
    ComplementTooSmall,
    DesignValidationError,
    InvalidK,
    MixedBlockSize,
    MixedV,
    NotABibd,
)
from src.models.design import Design
from src.models.difference_set import DifferenceSetSpec

logger = logging.getLogger(__name__)


def trivial_design(v: int) -> Design:
    """
    The design whose blocks are the singletons [1], [2], ..., [v].

    Args:
        v: Number of points

    Returns:
        Design with parameters (v, v, 1, 1, 0)
    """
    return Design.create_new(v, [[point] for point in range(1, v + 1)])


def complete_design(v: int, k: int) -> Design:
    """
    All k-subsets of {1..v} in lexicographic order.

    Args:
        v: Number of points
        k: Block size, 1 <= k < v

    Returns:
        Design with parameters (v, C(v,k), C(v-1,k-1), k, C(v-2,k-2))

    Raises:
        InvalidK: If k is outside 1..v-1
    """
    if k < 1 or k >= v:
        raise InvalidK(f"k must satisfy 1 <= k < v, got k={k}, v={v}")
    design = Design.create_new(v, combinations(range(1, v + 1), k))
    logger.debug("Complete design built", extra={'params': design.params.to_dict()})
    return design


def complement_design(design: Design) -> Design:
    """
    Replace every block B by V minus B, keeping the block order.

    Args:
        design: Design with k <= v-2

    Returns:
        Design with parameters (v, b, b-r, v-k, b-2r+lambda)

    Raises:
        ComplementTooSmall: If complement blocks would have fewer than 2 points
        NotABibd: If the complement pair count b-2r+lambda is below 1
    """
    params = design.params
    if params.v - params.k < 2:
        raise ComplementTooSmall(
            f"complement blocks would have {params.v - params.k} point(s); at least 2 are needed"
        )
    complement_lambda = params.b - 2 * params.r + params.lambda_
    if complement_lambda < 1:
        raise NotABibd(f"complement pair count b-2r+lambda={complement_lambda} is below 1")
    everything = set(range(1, design.v + 1))
    return Design.create_new(design.v, [sorted(everything - set(block)) for block in design.blocks])


def multiset_difference(big: Design, sub: Design) -> Design:
    """
    Remove the blocks of sub from big, with multiplicity.

    The earliest occurrences in big are removed; the remaining blocks keep
    their original order.

    Args:
        big: Design to remove from
        sub: Design whose blocks are removed

    Returns:
        Design with parameters (v, b1-b2, r1-r2, k, lambda1-lambda2)

    Raises:
        MixedV: If the designs are on different point sets
        BlockNotPresent: If a block of sub does not occur often enough in big
        NotABibd: If the remainder is empty or not balanced
    """
    if big.v != sub.v:
        raise MixedV(f"cannot subtract a design on v={sub.v} from one on v={big.v}")
    to_remove = Counter(sub.blocks)
    available = big.block_multiset()
    for block, count in to_remove.items():
        if available[block] < count:
            raise BlockNotPresent(block)

    remaining: List[tuple] = []
    for block in big.blocks:
        if to_remove[block] > 0:
            to_remove[block] -= 1
        else:
            remaining.append(block)

    if not remaining:
        raise NotABibd("difference leaves no blocks")
    try:
        return Design.create_new(big.v, remaining)
    except DesignValidationError as exc:
        raise NotABibd(f"difference is not a BIBD: {exc}") from exc


def cyclic_design(spec: DifferenceSetSpec) -> Design:
    """
    Develop a difference set: blocks base + i (mod v) for i = 0..v-1.

    Args:
        spec: Validated difference set

    Returns:
        Design with parameters (v, v, k, k, lambda)
    """
    design = Design.create_new(spec.modulus, [spec.shifted(i) for i in range(spec.modulus)])
    logger.debug("Cyclic design built", extra={
        'base_block': sorted(spec.base_block),
        'params': design.params.to_dict()
    })
    return design


def union_design(first: Design, second: Design) -> Design:
    """
    Concatenate the block lists of two designs.

    Args:
        first: Design whose blocks come first
        second: Design whose blocks follow

    Returns:
        Design with parameters (v, b1+b2, r1+r2, k, lambda1+lambda2)

    Raises:
        MixedV: If the point sets differ
        MixedBlockSize: If the block sizes differ
    """
    if first.v != second.v:
        raise MixedV(f"cannot join designs on v={first.v} and v={second.v}")
    if first.k != second.k:
        raise MixedBlockSize(f"cannot join designs with k={first.k} and k={second.k}")
    return Design.create_new(first.v, first.blocks + second.blocks)
