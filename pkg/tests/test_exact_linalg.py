"""
Tests for the exact integer linear algebra kernels.

Random cases are cross-checked against the schoolbook product and cofactor
expansion in conftest, which share no code with src.linalg.
"""
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.errors import DimensionMismatch, NotSquare, ZeroVector
from src.linalg import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    determinant,
    is_eigenvector,
    kernel_basis,
    mat_mul,
    mat_poly_eval,
    primitive_integer_vector,
    rank,
    same_span,
)
from src.linalg.elimination import in_span
from src.linalg.export import matrix_to_csv, matrix_to_json, polynomial_to_json
from tests.conftest import cofactor_determinant, det_shifted, schoolbook_product


def random_rows(rng: random.Random, rows: int, cols: int, low: int = -5, high: int = 5):
    return [[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)]


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, square=False):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = rows if square else draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix(rows, cols, tuple(entries))


@st.composite
def symmetric_matrices(draw, max_size=8):
    a = draw(int_matrices(max_rows=max_size, square=True))
    return a + a.T


class TestIntMatrix:
    """Tests for the dense integer matrix type."""

    def test_shape_checked(self):
        """Entry count must match the shape."""
        with pytest.raises(DimensionMismatch):
            IntMatrix(2, 2, (1, 2, 3))

    def test_ragged_rows(self):
        """Rows of different lengths are rejected."""
        with pytest.raises(DimensionMismatch, match="row 1"):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_transpose(self):
        """Transpose swaps the shape and indices."""
        a = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert a.T.to_rows() == [[1, 4], [2, 5], [3, 6]]
        assert a.T.T == a

    def test_product_against_schoolbook(self):
        """Random products agree with the triple loop."""
        rng = random.Random(20240607)
        for _ in range(50):
            n, m, p = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
            a, b = random_rows(rng, n, m), random_rows(rng, m, p)
            assert mat_mul(IntMatrix.from_rows(a), IntMatrix.from_rows(b)).to_rows() == schoolbook_product(a, b)

    def test_product_shape_mismatch(self):
        """Inner dimensions must agree."""
        with pytest.raises(DimensionMismatch):
            IntMatrix.zeros(2, 3) @ IntMatrix.zeros(2, 3)

    def test_big_integers(self):
        """Entries are not bounded by machine words."""
        big = 10 ** 40
        a = IntMatrix.from_rows([[big, 1], [0, big]])
        assert (a @ a)[0, 0] == 10 ** 80
        assert determinant(a) == 10 ** 80

    def test_apply_with_fractions(self):
        """Matrix-vector products accept rational entries."""
        a = IntMatrix.from_rows([[2, 0], [1, 1]])
        assert a.apply((Fraction(1, 2), Fraction(1, 3))) == (Fraction(1), Fraction(5, 6))

    def test_helpers(self):
        """Trace, diagonal shift, sums and off-diagonal values."""
        a = IntMatrix.from_rows([[3, 1], [1, 3]])
        assert a.trace() == 6
        assert a.shift_diagonal(-3).to_rows() == [[0, 1], [1, 0]]
        assert a.row_sums() == [4, 4]
        assert a.column_sums() == [4, 4]
        assert a.off_diagonal_values() == {1}
        assert a.is_symmetric()
        with pytest.raises(NotSquare):
            IntMatrix.zeros(2, 3).trace()

    def test_dict_form(self):
        """to_dict nests rows and from_dict reads them back."""
        a = IntMatrix.from_rows([[1, -2], [3, 4]])
        assert a.to_dict() == {'rows': 2, 'cols': 2, 'entries': [[1, -2], [3, 4]]}
        assert IntMatrix.from_dict(a.to_dict()) == a


class TestDeterminant:
    """Tests for the Bareiss determinant."""

    def test_random_against_cofactor(self):
        """100 random matrices up to 6x6 agree with cofactor expansion."""
        rng = random.Random(1234)
        for _ in range(100):
            n = rng.randint(1, 6)
            rows = random_rows(rng, n, n, -9, 9)
            assert determinant(IntMatrix.from_rows(rows)) == cofactor_determinant(rows)

    def test_needs_row_swap(self):
        """A zero leading entry forces a swap and flips the sign."""
        assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1

    def test_singular(self):
        """Dependent rows give zero."""
        assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

    def test_empty(self):
        """The 0x0 determinant is 1."""
        assert determinant(IntMatrix.zeros(0, 0)) == 1

    def test_not_square(self):
        """Rectangular input is rejected."""
        with pytest.raises(NotSquare):
            determinant(IntMatrix.zeros(2, 3))

    def test_fano_gram(self):
        """det((r - lambda) I + lambda J) for the Fano plane is 576."""
        gram = IntMatrix.all_ones(7, 7).shift_diagonal(2)
        assert determinant(gram) == 576


class TestRankAndKernel:
    """Tests for rank and the null space basis."""

    def test_simple_ranks(self):
        """Zero, identity and all-ones matrices."""
        assert rank(IntMatrix.zeros(3, 4)) == 0
        assert rank(IntMatrix.identity(5)) == 5
        assert rank(IntMatrix.all_ones(4, 6)) == 1
        assert rank(IntMatrix.zeros(0, 3)) == 0

    def test_kernel_of_single_row(self):
        """One vector per free column, primitive, first nonzero entry positive."""
        basis = kernel_basis(IntMatrix.from_rows([[1, 2, 3]]))
        assert basis == [
            (Fraction(2), Fraction(-1), Fraction(0)),
            (Fraction(3), Fraction(0), Fraction(-1)),
        ]

    def test_kernel_of_full_rank(self):
        """An invertible matrix has a trivial kernel."""
        assert kernel_basis(IntMatrix.identity(3)) == []

    def test_kernel_of_all_ones(self):
        """The kernel of J_3 is the sum-zero plane."""
        basis = kernel_basis(IntMatrix.all_ones(3, 3))
        assert len(basis) == 2
        assert same_span(basis, [(1, -1, 0), (0, 1, -1)], 3)

    @given(int_matrices())
    def test_rank_transpose_invariant(self, a):
        """Row rank equals column rank."""
        assert rank(a) == rank(a.T)

    @given(int_matrices())
    def test_rank_nullity(self, a):
        """rank + nullity = number of columns, and every kernel vector is annihilated."""
        basis = kernel_basis(a)
        assert rank(a) + len(basis) == a.cols
        for x in basis:
            assert not any(a.apply(x))
            first = next(entry for entry in x if entry)
            assert first > 0
            assert all(entry.denominator == 1 for entry in x)

    @given(int_matrices(max_rows=6, max_cols=6), st.data())
    def test_rank_invariant_under_permutation(self, a, data):
        """Shuffling rows and columns keeps the rank."""
        row_order = data.draw(st.permutations(range(a.rows)))
        col_order = data.draw(st.permutations(range(a.cols)))
        shuffled = IntMatrix.from_rows([[a[i, j] for j in col_order] for i in row_order])
        assert rank(shuffled) == rank(a)

    @given(int_matrices(max_rows=4, max_cols=4), st.integers(min_value=-3, max_value=3).filter(bool))
    def test_rank_invariant_under_scaling(self, a, factor):
        """Scaling by a nonzero integer keeps the rank."""
        assert rank(a.scale(factor)) == rank(a)


class TestSpans:
    """Tests for span comparison."""

    def test_same_plane(self):
        """Different bases of the same plane."""
        assert same_span([(1, 0), (0, 1)], [(1, 1), (1, -1)], 2)

    def test_different_lines(self):
        """Two distinct lines."""
        assert not same_span([(1, 0)], [(0, 1)], 2)

    def test_different_dimension(self):
        """A line inside a plane is not the same span."""
        assert not same_span([(1, 1, 0)], [(1, 0, 0), (0, 1, 0)], 3)

    def test_in_span(self):
        """Membership of a rational combination."""
        basis = [(1, 0, 1), (0, 1, 1)]
        assert in_span((Fraction(1, 2), Fraction(3, 2), 2), basis, 3)
        assert not in_span((0, 0, 1), basis, 3)

    def test_length_checked(self):
        """Vectors of the wrong length are rejected."""
        with pytest.raises(DimensionMismatch):
            same_span([(1, 0)], [(1, 0, 0)], 2)

    def test_primitive_vector(self):
        """Scaling clears denominators and the common factor."""
        assert primitive_integer_vector((Fraction(1, 2), Fraction(-1, 3))) == (3, -2)
        assert primitive_integer_vector((-2, 4)) == (1, -2)
        assert primitive_integer_vector((0, 0)) == (0, 0)


class TestCharPoly:
    """Tests for the Faddeev-LeVerrier characteristic polynomial."""

    def test_two_by_two(self):
        """det(A - tI) for [[2,1],[1,2]] is t^2 - 4t + 3."""
        p = char_poly(IntMatrix.from_rows([[2, 1], [1, 2]]))
        assert p.coefficients == (3, -4, 1)
        assert str(p) == "t^2 - 4*t + 3"

    def test_odd_dimension_sign(self):
        """The leading coefficient is (-1)^n."""
        assert char_poly(IntMatrix.from_rows([[5]])).coefficients == (5, -1)
        assert char_poly(IntMatrix.identity(3)).leading_coefficient == -1

    def test_all_ones(self):
        """J_4 has eigenvalue 4 once and 0 three times."""
        expected = IntPolynomial.from_roots([4, 0, 0, 0])
        assert char_poly(IntMatrix.all_ones(4, 4)) == expected

    def test_random_against_cofactor(self):
        """100 random matrices up to 6x6 agree with det(A - tI) by cofactors at several points."""
        rng = random.Random(99)
        for _ in range(100):
            n = rng.randint(1, 6)
            rows = random_rows(rng, n, n, -9, 9)
            p = char_poly(IntMatrix.from_rows(rows))
            for t in (-2, 0, 1, 3):
                assert p(t) == det_shifted(rows, t)

    def test_constant_term_is_determinant(self):
        """p(0) = det(A)."""
        a = IntMatrix.from_rows([[2, -1, 0], [4, 3, 1], [0, 5, -2]])
        assert char_poly(a)(0) == determinant(a)

    @settings(max_examples=50, deadline=None)
    @given(int_matrices(square=True))
    def test_cayley_hamilton(self, a):
        """Every matrix satisfies its characteristic polynomial."""
        assert mat_poly_eval(char_poly(a), a).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(symmetric_matrices())
    def test_cayley_hamilton_symmetric(self, a):
        """Symmetric matrices up to 8x8 satisfy their characteristic polynomial."""
        assert a == a.T
        assert mat_poly_eval(char_poly(a), a).is_zero()

    def test_not_square(self):
        """Rectangular input is rejected."""
        with pytest.raises(NotSquare):
            char_poly(IntMatrix.zeros(2, 3))


class TestPolynomials:
    """Tests for integer polynomials and matrix evaluation."""

    def test_arithmetic(self):
        """Products, powers and evaluation."""
        p = IntPolynomial.linear_factor(2) ** 3
        assert p == IntPolynomial.from_roots([2, 2, 2])
        assert p(2) == 0
        assert p(3) == 1
        assert (p - p).is_zero()
        assert IntPolynomial((0, 0, 0)).degree == -1

    def test_str(self):
        """Human readable form in descending degree."""
        assert str(IntPolynomial((0, -1))) == "-t"
        assert str(IntPolynomial(())) == "0"
        assert str(IntPolynomial.from_roots([1], leading=-3)) == "-3*t + 3"

    def test_mat_poly_eval(self):
        """t^2 - 1 annihilates a reflection."""
        swap = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert mat_poly_eval(IntPolynomial((-1, 0, 1)), swap).is_zero()
        assert mat_poly_eval(IntPolynomial((5,)), swap) == IntMatrix.scalar(2, 5)

    def test_mat_poly_eval_not_square(self):
        """Evaluation needs a square matrix."""
        with pytest.raises(NotSquare):
            mat_poly_eval(IntPolynomial((1,)), IntMatrix.zeros(1, 2))


class TestEigenvectors:
    """Tests for the exact eigenvector check."""

    def test_all_ones_vector(self):
        """The all-ones vector is an eigenvector of J with eigenvalue n."""
        assert is_eigenvector(IntMatrix.all_ones(3, 3), (1, 1, 1), 3)
        assert not is_eigenvector(IntMatrix.all_ones(3, 3), (1, 1, 1), 2)

    def test_zero_vector(self):
        """The zero vector is never an eigenvector."""
        with pytest.raises(ZeroVector):
            is_eigenvector(IntMatrix.identity(2), (0, 0), 1)

    def test_length(self):
        """Vector length must match the matrix."""
        with pytest.raises(DimensionMismatch):
            is_eigenvector(IntMatrix.identity(2), (1, 0, 0), 1)


class TestExport:
    """Tests for deterministic text emission."""

    def test_csv(self):
        """One line per row, no spaces."""
        assert matrix_to_csv(IntMatrix.from_rows([[1, -2], [3, 4]])) == "1,-2\n3,4\n"

    def test_json(self):
        """Shape first, one row per line."""
        text = matrix_to_json(IntMatrix.from_rows([[1, 2], [3, 4]]))
        assert text == '{\n  "rows": 2,\n  "cols": 2,\n  "entries": [\n    [1, 2],\n    [3, 4]\n  ]\n}\n'
        assert json.loads(text)['entries'] == [[1, 2], [3, 4]]

    def test_json_big_integers(self):
        """Large integers are written in plain decimal."""
        text = matrix_to_json(IntMatrix.from_rows([[10 ** 30]]))
        assert str(10 ** 30) in text

    def test_polynomial_json(self):
        """Coefficients ascending."""
        assert polynomial_to_json(IntPolynomial((3, -4, 1))) == '{"coefficients": [3, -4, 1]}\n'
