"""
Graph constructions over the blocks of one or two designs.
"""
import logging
from typing import AbstractSet, Iterable, Tuple

from src.errors import EmptySizeSet
from src.incidence.mutual import mutual_matrix
from src.linalg.matrix import IntMatrix
from src.models.design import Design
from src.models.graph import Multigraph, SimpleGraph

logger = logging.getLogger(__name__)


def block_labels(count: int, prefix: str = '') -> Tuple[str, ...]:
    """Vertex names B1..B<count>, optionally prefixed (e.g. "D1_")."""
    return tuple(f"{prefix}B{i}" for i in range(1, count + 1))


def mutual_incidence_graph(d1: Design, d2: Design) -> Multigraph:
    """
    Bipartite multigraph joining B1^i and B2^j by |B1^i ∩ B2^j| parallel edges.

    Raises:
        MismatchedPointSets: If the designs have different v
    """
    m = mutual_matrix(d1, d2).m
    return Multigraph(block_labels(d1.b, 'D1_'), block_labels(d2.b, 'D2_'), m)


def merged_self_graph(d: Design) -> Multigraph:
    """
    The mutual incidence graph of d with itself after merging each block with
    its copy and deleting the k edges between them.

    Returns:
        Self-graph on b vertices; multiplicity |B^i ∩ B^j| for i != j, zero diagonal
    """
    m = mutual_matrix(d, d).m.shift_diagonal(-d.k)
    return Multigraph(block_labels(d.b), None, m)


def s_block_intersection_graph(d: Design, sizes: Iterable[int]) -> SimpleGraph:
    """
    Simple graph on the blocks, i ~ j iff |B^i ∩ B^j| lies in sizes.

    Args:
        d: Design
        sizes: Nonempty set S of admissible intersection sizes

    Returns:
        SimpleGraph with zero diagonal

    Raises:
        EmptySizeSet: If sizes is empty
    """
    admissible: AbstractSet[int] = frozenset(sizes)
    if not admissible:
        raise EmptySizeSet("the set of intersection sizes must not be empty")
    m = mutual_matrix(d, d).m
    entries = tuple(
        1 if i != j and m[i, j] in admissible else 0
        for i in range(d.b)
        for j in range(d.b)
    )
    logger.debug("S-block intersection graph built", extra={'sizes': sorted(admissible), 'b': d.b})
    return SimpleGraph(block_labels(d.b), IntMatrix(d.b, d.b, entries))


def block_intersection_graph(d: Design) -> SimpleGraph:
    """Simple graph on the blocks, i ~ j iff the blocks meet."""
    return s_block_intersection_graph(d, range(1, d.k + 1))
