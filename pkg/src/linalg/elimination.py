"""
Fraction-free (Bareiss) elimination: rank, determinant, kernel, span comparison.

After step s every entry below the pivot rows is an (s+1)-minor of the input,
so each division by the previous pivot is exact and intermediates stay integral.
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.errors import DimensionMismatch, NotSquare
from .matrix import IntMatrix, Number, RatVector, as_rat_vector, primitive_integer_vector

logger = logging.getLogger(__name__)


def bareiss_echelon(a: IntMatrix) -> Tuple[List[List[int]], List[int], int]:
    """
    Reduce a matrix to row echelon form without fractions.

    The pivot of each column is the first nonzero entry at or below the
    current pivot row, so the result is deterministic.

    Args:
        a: Matrix to reduce

    Returns:
        Tuple of (echelon rows, pivot columns in order, sign of the row permutation)
    """
    m = a.to_rows()
    n_rows, n_cols = a.rows, a.cols
    previous = 1
    pivot_row = 0
    pivots: List[int] = []
    sign = 1

    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        found = next((i for i in range(pivot_row, n_rows) if m[i][col]), None)
        if found is None:
            continue
        if found != pivot_row:
            m[found], m[pivot_row] = m[pivot_row], m[found]
            sign = -sign

        top = m[pivot_row]
        p = top[col]
        for i in range(pivot_row + 1, n_rows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (p * row[j] - f * top[j]) // previous
            row[col] = 0

        previous = p
        pivots.append(col)
        pivot_row += 1

    return m, pivots, sign


def rank(a: IntMatrix) -> int:
    """
    Rank over the rationals.

    Args:
        a: Integer matrix

    Returns:
        Exact rank
    """
    if a.rows == 0 or a.cols == 0:
        return 0
    _, pivots, _ = bareiss_echelon(a)
    logger.debug("Rank computed", extra={'shape': [a.rows, a.cols], 'rank': len(pivots)})
    return len(pivots)


def determinant(a: IntMatrix) -> int:
    """
    Exact determinant by Bareiss elimination.

    Args:
        a: Square integer matrix

    Returns:
        det(a)

    Raises:
        NotSquare: If a is not square
    """
    if not a.is_square:
        raise NotSquare(f"determinant of a {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return 1
    m, pivots, sign = bareiss_echelon(a)
    if len(pivots) < n:
        return 0
    return sign * m[n - 1][n - 1]


def kernel_basis(a: IntMatrix) -> List[RatVector]:
    """
    Basis of the right null space {x : a x = 0}.

    One vector per free column, in ascending order of free columns; each is
    scaled to a primitive integer vector whose first nonzero entry is positive.

    Args:
        a: Integer matrix

    Returns:
        List of cols - rank(a) vectors with integral Fraction entries
    """
    n_cols = a.cols
    if a.rows == 0:
        echelon: List[List[int]] = []
        pivots: List[int] = []
    else:
        echelon, pivots, _ = bareiss_echelon(a)
    pivot_set = set(pivots)
    free_columns = [c for c in range(n_cols) if c not in pivot_set]

    basis: List[RatVector] = []
    for free in free_columns:
        x: List[Fraction] = [Fraction(0)] * n_cols
        x[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = echelon[r]
            total = sum((row[j] * x[j] for j in range(pc + 1, n_cols) if row[j] and x[j]), Fraction(0))
            x[pc] = -total / row[pc]
        basis.append(as_rat_vector(primitive_integer_vector(x)))

    logger.debug("Kernel computed", extra={'shape': [a.rows, a.cols], 'dimension': len(basis)})
    return basis


def vectors_to_matrix(vectors: Sequence[Sequence[Number]], length: int) -> IntMatrix:
    """Stack rational vectors as rows, each scaled to a primitive integer vector."""
    for vector in vectors:
        if len(vector) != length:
            raise DimensionMismatch(f"vector of length {len(vector)}, expected {length}")
    rows = [list(primitive_integer_vector(vector)) for vector in vectors]
    return IntMatrix.from_rows(rows, cols=length)


def span_rank(vectors: Sequence[Sequence[Number]], length: int) -> int:
    """Dimension of the span of the given vectors."""
    if not vectors:
        return 0
    return rank(vectors_to_matrix(vectors, length))


def same_span(first: Sequence[Sequence[Number]], second: Sequence[Sequence[Number]], length: int) -> bool:
    """
    Whether two families of vectors span the same subspace.

    Args:
        first: Vectors of the given length
        second: Vectors of the given length
        length: Ambient dimension

    Returns:
        True iff rank(first) = rank(second) = rank(first + second)
    """
    rank_first = span_rank(first, length)
    rank_second = span_rank(second, length)
    if rank_first != rank_second:
        return False
    return span_rank(list(first) + list(second), length) == rank_first


def in_span(vector: Sequence[Number], basis: Sequence[Sequence[Number]], length: int) -> bool:
    """Whether vector lies in the span of basis."""
    return span_rank(list(basis) + [vector], length) == span_rank(basis, length)
