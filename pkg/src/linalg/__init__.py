"""
Exact dense linear algebra over arbitrary-precision integers and rationals.
"""
from .matrix import IntMatrix, Number, RatVector, mat_mul, primitive_integer_vector
from .polynomial import IntPolynomial
from .elimination import determinant, kernel_basis, rank, same_span
from .charpoly import char_poly, is_eigenvector, mat_poly_eval

__all__ = [
    'IntMatrix',
    'IntPolynomial',
    'Number',
    'RatVector',
    'char_poly',
    'determinant',
    'is_eigenvector',
    'kernel_basis',
    'mat_mul',
    'mat_poly_eval',
    'primitive_integer_vector',
    'rank',
    'same_span',
]
