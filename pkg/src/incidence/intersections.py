"""
Counting identities relating block intersections to point replication.
"""
from typing import Iterable, Optional, Sequence, Tuple

from src.errors import PointOutOfRange
from src.models.design import Design, PointId
from src.models.incidence import DeltaProfile


def _largest_point(blocks: Iterable[Sequence[int]]) -> Optional[int]:
    return max((point for block in blocks for point in block), default=None)


def t_count(blocks: Sequence[Sequence[int]], x: PointId, v: Optional[int] = None) -> int:
    """
    Number of listed blocks containing x.

    Args:
        blocks: Block list Q
        x: Point
        v: Size of the point set; the largest listed point when omitted

    Raises:
        PointOutOfRange: If x is not an integer in 1..v
    """
    bound = _largest_point(blocks) if v is None else v
    if isinstance(x, bool) or not isinstance(x, int) or x < 1 or (bound is not None and x > bound):
        raise PointOutOfRange(x, bound if bound is not None else 0)
    return sum(1 for block in blocks if x in block)


def counting_identity_check(blocks: Sequence[Sequence[int]], subset: Iterable[int],
                            v: Optional[int] = None) -> bool:
    """
    Whether sum over blocks of |Q_j ∩ X| equals sum over x in X of t_Q(x).

    Args:
        blocks: Block list Q
        subset: Point set X
        v: Size of the point set; the largest point of Q and X when omitted

    Returns:
        True iff both sides agree

    Raises:
        PointOutOfRange: If X has a point outside 1..v
    """
    points = set(subset)
    if v is None:
        v = max(_largest_point(blocks) or 0, max(points, default=0))
    left = sum(len(points.intersection(block)) for block in blocks)
    right = sum(t_count(blocks, x, v) for x in points)
    return left == right


def _subset_of(d: Design, subset: Iterable[int]) -> frozenset:
    points = frozenset(subset)
    for point in sorted(points):
        if not 1 <= point <= d.v:
            raise PointOutOfRange(point, d.v)
    return points


def delta_profile(subset: Iterable[int], d: Design) -> DeltaProfile:
    """
    Count the blocks of d by the size of their intersection with S.

    Args:
        subset: Point set S, any subset of 1..v
        d: Design

    Returns:
        DeltaProfile with counts indexed 0..min(|S|, k)

    Raises:
        PointOutOfRange: If S has a point outside 1..v
    """
    points = _subset_of(d, subset)
    counts = [0] * (min(len(points), d.k) + 1)
    for block in d.blocks:
        counts[len(points.intersection(block))] += 1
    return DeltaProfile(len(points), tuple(counts))


def delta_identities(subset: Iterable[int], d: Design) -> Tuple[bool, bool, bool]:
    """
    Evaluate the three moment identities of the intersection profile.

    With s = |S|: sum j delta_j = r s; sum j^2 delta_j = (lambda s - lambda + r) s;
    sum C(j, 2) delta_j = C(s, 2) lambda.

    Returns:
        One flag per identity, in that order
    """
    profile = delta_profile(subset, d)
    s = profile.subset_size
    return (
        profile.moment(1) == d.r * s,
        profile.moment(2) == (d.lambda_ * s - d.lambda_ + d.r) * s,
        profile.pair_moment() == s * (s - 1) // 2 * d.lambda_,
    )
