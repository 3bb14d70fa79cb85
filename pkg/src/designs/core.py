"""
Design construction, axiom reporting and the per-design counting operations.
"""
import logging
from typing import Iterable, List, Sequence

from src.errors import DesignValidationError
from src.models.design import Design
from src.models.design_params import DesignParams
from src.models.validation_report import ValidationReport
from .counting import canonical_block, derive_params, pair_counts_of, replication_counts_of

logger = logging.getLogger(__name__)


def new_design(v: int, blocks: Iterable[Iterable[int]]) -> Design:
    """
    Build a validated design.

    Args:
        v: Number of points
        blocks: Blocks as lists of points; order is preserved, points are sorted

    Returns:
        Design with derived parameters

    Raises:
        DesignValidationError: Subclass naming the first violated axiom
    """
    design = Design.create_new(v, blocks)
    params = design.params
    if params.is_trivial:
        logger.debug("Trivial design accepted with lambda=0", extra={'params': params.to_dict()})
    return design


def replication_counts(design: Design) -> List[int]:
    """
    Count the blocks containing each point.

    Args:
        design: Design to count in

    Returns:
        List of length v; entry x-1 is the number of blocks containing x
    """
    return replication_counts_of(design.v, design.blocks)


def pair_counts(design: Design) -> List[List[int]]:
    """
    Count the blocks containing each pair of points.

    The diagonal entry (x, x) is the replication number of x, since a point
    co-occurs with itself in each of its blocks.

    Args:
        design: Design to count in

    Returns:
        Symmetric v x v list of lists
    """
    return pair_counts_of(design.v, design.blocks)


def validate_design(v: int, blocks: Sequence[Iterable[int]]) -> ValidationReport:
    """
    Check a raw block list and report instead of raising.

    Args:
        v: Number of points
        blocks: Raw blocks

    Returns:
        ValidationReport; ok is True iff new_design would succeed
    """
    raw = [tuple(block) for block in blocks]
    replication: List[int] = []
    pairs: List[List[int]] = []
    try:
        canonical = [canonical_block(block, v, i) for i, block in enumerate(raw)]
        replication = replication_counts_of(v, canonical)
        pairs = pair_counts_of(v, canonical)
    except DesignValidationError:
        # malformed blocks: counts stay empty, derive_params reports the cause
        pass

    try:
        params: DesignParams = derive_params(v, raw)
    except DesignValidationError as exc:
        logger.info("Design rejected", extra={'violation': type(exc).__name__, 'detail': str(exc)})
        return ValidationReport(
            ok=False,
            v=v,
            b=len(raw),
            replication_counts=list(replication),
            pair_counts=pairs,
            violation=type(exc).__name__,
            message=str(exc)
        )

    return ValidationReport(
        ok=True,
        v=v,
        b=params.b,
        replication_counts=list(replication),
        pair_counts=pairs,
        params=params,
        fisher_ok=params.satisfies_fisher,
        fisher_flagged=params.is_trivial
    )


def designs_equal(first: Design, second: Design) -> bool:
    """Same v and the same block multiset, ignoring block order."""
    return first.same_blocks_as(second)


def designs_ordered_equal(first: Design, second: Design) -> bool:
    """Same v and the same block sequence."""
    return first == second
