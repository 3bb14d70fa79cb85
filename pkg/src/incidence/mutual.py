"""
Mutual incidence matrix and the point-block embedding.
"""
import logging
from typing import Sequence

from src.errors import MismatchedPointSets
from src.linalg.matrix import IntMatrix
from src.models.design import Design
from src.models.incidence import MutualIncidenceMatrix

logger = logging.getLogger(__name__)


def intersection_size(first: Sequence[int], second: Sequence[int]) -> int:
    """
    Size of the intersection of two ascending point sequences by merge walk.

    Args:
        first: Strictly increasing points
        second: Strictly increasing points

    Returns:
        Number of common points
    """
    i = j = common = 0
    while i < len(first) and j < len(second):
        a, b = first[i], second[j]
        if a == b:
            common += 1
            i += 1
            j += 1
        elif a < b:
            i += 1
        else:
            j += 1
    return common


def require_same_points(d1: Design, d2: Design) -> None:
    """Raise MismatchedPointSets unless both designs live on 1..v for the same v."""
    if d1.v != d2.v:
        raise MismatchedPointSets(d1.v, d2.v)


def mutual_matrix(d1: Design, d2: Design) -> MutualIncidenceMatrix:
    """
    Build M(d1, d2) with M[i][j] = |B1^i ∩ B2^j|.

    Args:
        d1: Row design
        d2: Column design on the same points

    Returns:
        MutualIncidenceMatrix of shape b1 x b2

    Raises:
        MismatchedPointSets: If the designs have different v
    """
    require_same_points(d1, d2)
    entries = tuple(
        intersection_size(row_block, col_block)
        for row_block in d1.blocks
        for col_block in d2.blocks
    )
    logger.debug("Mutual incidence matrix built", extra={
        'd1_params': d1.params.as_tuple(),
        'd2_params': d2.params.as_tuple(),
    })
    return MutualIncidenceMatrix(d1.params, d2.params, IntMatrix(d1.b, d2.b, entries))


def phi_embedding(d: Design) -> IntMatrix:
    """
    The v x b 0/1 matrix whose column j is the indicator vector of block j.

    Args:
        d: Design

    Returns:
        Point-block incidence matrix
    """
    entries = [0] * (d.v * d.b)
    for j, block in enumerate(d.blocks):
        for point in block:
            entries[(point - 1) * d.b + j] = 1
    return IntMatrix(d.v, d.b, tuple(entries))


def gram_factorization_check(d1: Design, d2: Design) -> bool:
    """
    Whether M equals the Gram matrix of the block indicator vectors.

    Checks A1^T A2' = M and A2 A1 = M^T where A1 = phi(d1) and A2 = phi(d2)^T.

    Raises:
        MismatchedPointSets: If the designs have different v
    """
    m = mutual_matrix(d1, d2).m
    a1 = phi_embedding(d1)
    a2 = phi_embedding(d2).T
    return a1.T @ a2.T == m and a2 @ a1 == m.T


def classical_gram_check(d: Design) -> bool:
    """Whether phi(d) phi(d)^T = (r - lambda) I + lambda J."""
    phi = phi_embedding(d)
    expected = IntMatrix.all_ones(d.v, d.v).scale(d.lambda_).shift_diagonal(d.r - d.lambda_)
    return phi @ phi.T == expected
