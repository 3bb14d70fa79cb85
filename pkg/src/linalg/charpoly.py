"""
Characteristic polynomials and polynomial evaluation in the matrix ring.
"""
import logging
from fractions import Fraction
from typing import List, Sequence

from src.errors import DimensionMismatch, LinalgError, NotSquare, ZeroVector
from .matrix import IntMatrix, Number, mat_mul
from .polynomial import IntPolynomial

logger = logging.getLogger(__name__)


def char_poly(a: IntMatrix) -> IntPolynomial:
    """
    Characteristic polynomial det(a - tI) by the Faddeev-LeVerrier recurrence.

    With c_n = 1 and M_0 = 0, each step sets M_k = a M_{k-1} + c_{n-k+1} I and
    c_{n-k} = -tr(a M_k) / k. The coefficients c describe det(tI - a), which
    differs from det(a - tI) by the sign (-1)^n.

    Args:
        a: Square integer matrix

    Returns:
        Polynomial of degree n with leading coefficient (-1)^n

    Raises:
        NotSquare: If a is not square
    """
    if not a.is_square:
        raise NotSquare(f"characteristic polynomial of a {a.rows}x{a.cols} matrix")
    n = a.rows
    coefficients: List[int] = [0] * (n + 1)
    coefficients[n] = 1
    m = IntMatrix.zeros(n, n)

    for k in range(1, n + 1):
        m = mat_mul(a, m).shift_diagonal(coefficients[n - k + 1])
        c = Fraction(-mat_mul(a, m).trace(), k)
        if c.denominator != 1:
            raise LinalgError(f"non-integral coefficient {c} at step {k}")
        coefficients[n - k] = int(c)

    sign = -1 if n % 2 else 1
    logger.debug("Characteristic polynomial computed", extra={'dimension': n})
    return IntPolynomial(tuple(sign * c for c in coefficients))


def mat_poly_eval(p: IntPolynomial, a: IntMatrix) -> IntMatrix:
    """
    Evaluate p(a) by Horner's rule.

    Args:
        p: Integer polynomial
        a: Square integer matrix

    Returns:
        p(a)

    Raises:
        NotSquare: If a is not square
    """
    if not a.is_square:
        raise NotSquare(f"cannot evaluate a polynomial at a {a.rows}x{a.cols} matrix")
    result = IntMatrix.zeros(a.rows, a.cols)
    for c in reversed(p.coefficients):
        result = mat_mul(result, a).shift_diagonal(c)
    return result


def is_eigenvector(a: IntMatrix, x: Sequence[Number], mu: int) -> bool:
    """
    Whether a x = mu x holds exactly.

    Raises:
        NotSquare: If a is not square
        DimensionMismatch: If len(x) differs from the size of a
        ZeroVector: If x is the zero vector
    """
    if not a.is_square:
        raise NotSquare(f"eigenvector test on a {a.rows}x{a.cols} matrix")
    if len(x) != a.cols:
        raise DimensionMismatch(f"vector of length {len(x)} for a {a.rows}x{a.cols} matrix")
    if not any(x):
        raise ZeroVector("an eigenvector must be nonzero")
    return all(lhs == mu * xi for lhs, xi in zip(a.apply(x), x))
