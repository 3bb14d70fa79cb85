"""
Z vectors of a design and the relations M intertwines between them.

For points x and y the blocks of a design split into four classes: blocks
containing both, only x, only y, or neither. Z(x, y) is +1 on the second
class, -1 on the third and 0 elsewhere.
"""
import logging
from itertools import combinations
from typing import List, Optional, Tuple

from src.designs.constructions import trivial_design
from src.errors import DegenerateSpan, PointOutOfRange
from src.linalg.elimination import span_rank
from src.models.design import Design, PointId
from src.models.incidence import MutualIncidenceMatrix, ZVector
from .mutual import mutual_matrix, require_same_points

logger = logging.getLogger(__name__)


def _require_point(d: Design, point: PointId) -> None:
    if isinstance(point, bool) or not isinstance(point, int) or not 1 <= point <= d.v:
        raise PointOutOfRange(point, d.v)


def pair_partition(d: Design, x: PointId, y: PointId) -> Tuple[List[int], List[int], List[int], List[int]]:
    """
    Split block indices by which of x and y they contain.

    For x != y the class sizes are (lambda, r - lambda, r - lambda, b - 2r + lambda).

    Args:
        d: Design
        x: First point
        y: Second point

    Returns:
        Zero-based block indices as (both, x only, y only, neither)

    Raises:
        PointOutOfRange: If x or y is outside 1..v
    """
    _require_point(d, x)
    _require_point(d, y)
    both: List[int] = []
    x_only: List[int] = []
    y_only: List[int] = []
    neither: List[int] = []
    for j, block in enumerate(d.blocks):
        has_x = x in block
        has_y = y in block
        if has_x and has_y:
            both.append(j)
        elif has_x:
            x_only.append(j)
        elif has_y:
            y_only.append(j)
        else:
            neither.append(j)
    return both, x_only, y_only, neither


def z_vector(d: Design, x: PointId, y: PointId) -> ZVector:
    """
    Z(x, y) over the blocks of d; the zero vector when x = y.

    Raises:
        PointOutOfRange: If x or y is outside 1..v
    """
    _, x_only, y_only, _ = pair_partition(d, x, y)
    entries = [0] * d.b
    for j in x_only:
        entries[j] = 1
    for j in y_only:
        entries[j] = -1
    return ZVector(d.params, x, y, tuple(entries))


def vd_basis(d: Design) -> List[ZVector]:
    """
    The v - 1 vectors Z(n, n + 1), n = 1..v-1, a basis of the span of all Z vectors.

    Args:
        d: Design

    Returns:
        Linearly independent Z vectors

    Raises:
        DegenerateSpan: If their rank is below v - 1
    """
    basis = [z_vector(d, n, n + 1) for n in range(1, d.v)]
    found = span_rank([z.entries for z in basis], d.b)
    if found != d.v - 1:
        raise DegenerateSpan(f"consecutive Z vectors have rank {found}, expected {d.v - 1}")
    return basis


def intertwining_check(d1: Design, d2: Design, x: PointId, y: PointId,
                       mim: Optional[MutualIncidenceMatrix] = None) -> Tuple[bool, bool]:
    """
    Check both intertwining relations for the pair (x, y).

    Args:
        d1: Row design
        d2: Column design on the same points
        x: First point
        y: Second point
        mim: Precomputed M(d1, d2), built when omitted

    Returns:
        (M^T Z1 = (r1 - lambda1) Z2, M Z2 = (r2 - lambda2) Z1)
    """
    require_same_points(d1, d2)
    m = (mim or mutual_matrix(d1, d2)).m
    z1 = z_vector(d1, x, y)
    z2 = z_vector(d2, x, y)
    forward = m.T.apply(z1.entries) == z2.scaled(d1.r - d1.lambda_)
    backward = m.apply(z2.entries) == z1.scaled(d2.r - d2.lambda_)
    return forward, backward


def bijection_check(d: Design) -> bool:
    """
    Check that M(V, d) and its transpose map Z vectors of the trivial design
    V onto those of d and back, up to the factor r - lambda.

    Args:
        d: Design

    Returns:
        True iff M^T Z_V(x, y) = Z_d(x, y) and M Z_d(x, y) = (r - lambda) Z_V(x, y)
        for every pair x < y
    """
    trivial = trivial_design(d.v)
    m = mutual_matrix(trivial, d).m
    for x, y in combinations(range(1, d.v + 1), 2):
        z_trivial = z_vector(trivial, x, y)
        z_design = z_vector(d, x, y)
        if m.T.apply(z_trivial.entries) != z_design.entries:
            logger.warning("Bijection fails", extra={'pair': [x, y], 'direction': 'forward'})
            return False
        if m.apply(z_design.entries) != z_trivial.scaled(d.r - d.lambda_):
            logger.warning("Bijection fails", extra={'pair': [x, y], 'direction': 'backward'})
            return False
    return True
