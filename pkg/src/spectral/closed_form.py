"""
Closed-form diagonal, eigenvalues and characteristic polynomial of M M^T.
"""
from typing import Tuple

from src.errors import FisherViolation
from src.linalg.polynomial import IntPolynomial
from src.models.design_params import DesignParams


def diag_value(p1: DesignParams, p2: DesignParams) -> int:
    """
    Common diagonal entry of M M^T: k1 (lambda2 k1 - lambda2 + r2).

    Args:
        p1: Parameters of the row design
        p2: Parameters of the column design

    Returns:
        The diagonal value
    """
    return p1.k * (p2.lambda_ * p1.k - p2.lambda_ + p2.r)


def eigenvalues(p1: DesignParams, p2: DesignParams) -> Tuple[int, int]:
    """
    The two nonzero eigenvalues of M M^T.

    Returns:
        (mu1, mu2) = (r1 r2 k1 k2, (r1 - lambda1)(r2 - lambda2))
    """
    mu1 = p1.r * p2.r * p1.k * p2.k
    mu2 = (p1.r - p1.lambda_) * (p2.r - p2.lambda_)
    return mu1, mu2


def closed_form_char_poly(p1: DesignParams, p2: DesignParams, b1: int, v: int) -> IntPolynomial:
    """
    Expand (-1)^b1 t^(b1 - v) (t - mu1) (t - mu2)^(v - 1).

    Args:
        p1: Parameters of the row design
        p2: Parameters of the column design
        b1: Size of the square matrix
        v: Number of points

    Returns:
        det(M M^T - tI) as predicted by the parameters

    Raises:
        FisherViolation: If b1 < v
    """
    if b1 < v:
        raise FisherViolation(f"b1={b1} is smaller than v={v}")
    mu1, mu2 = eigenvalues(p1, p2)
    sign = -1 if b1 % 2 else 1
    return (
        IntPolynomial.monomial(b1 - v, sign)
        * IntPolynomial.linear_factor(mu1)
        * IntPolynomial.linear_factor(mu2) ** (v - 1)
    )
