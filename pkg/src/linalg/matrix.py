"""
Dense matrices of arbitrary-precision integers and exact rational vectors.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

from src.errors import DimensionMismatch, NotSquare

Number = Union[int, Fraction]
RatVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    """
    Row-major dense integer matrix.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        entries: rows * cols Python integers, row-major
    """
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = -1) -> 'IntMatrix':
        """
        Build from a list of rows.

        Args:
            rows: Rows of equal length
            cols: Column count, needed only when there are no rows

        Returns:
            IntMatrix instance
        """
        n_cols = len(rows[0]) if rows else max(cols, 0)
        flat: List[int] = []
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {n_cols}")
            flat.extend(int(x) for x in row)
        return cls(len(rows), n_cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, n: int, value: int) -> 'IntMatrix':
        return cls(n, n, tuple(value if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def all_ones(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(rows, cols, (1,) * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        )

    @property
    def T(self) -> 'IntMatrix':
        return self.transpose()

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def off_diagonal_values(self) -> set:
        """Distinct values outside the main diagonal."""
        return {self[i, j] for i in range(self.rows) for j in range(self.cols) if i != j}

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def trace(self) -> int:
        if not self.is_square:
            raise NotSquare(f"trace of a {self.rows}x{self.cols} matrix")
        return sum(self.diagonal())

    def row_sums(self) -> List[int]:
        return [sum(self.row(i)) for i in range(self.rows)]

    def column_sums(self) -> List[int]:
        return [sum(self.column(j)) for j in range(self.cols)]

    def _check_same_shape(self, other: 'IntMatrix') -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shapes {self.rows}x{self.cols} and {other.rows}x{other.cols} differ"
            )

    def __add__(self, other: 'IntMatrix') -> 'IntMatrix':
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'IntMatrix') -> 'IntMatrix':
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'IntMatrix':
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: int) -> 'IntMatrix':
        return IntMatrix(self.rows, self.cols, tuple(factor * a for a in self.entries))

    def shift_diagonal(self, value: int) -> 'IntMatrix':
        """Return self + value * I."""
        if not self.is_square:
            raise NotSquare(f"cannot shift the diagonal of a {self.rows}x{self.cols} matrix")
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] += value
        return IntMatrix(self.rows, self.cols, tuple(entries))

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        return mat_mul(self, other)

    def apply(self, vector: Sequence[Number]) -> Tuple[Number, ...]:
        """Matrix-vector product with integer or rational entries."""
        if len(vector) != self.cols:
            raise DimensionMismatch(
                f"vector of length {len(vector)} for a {self.rows}x{self.cols} matrix"
            )
        return tuple(
            sum(a * x for a, x in zip(self.row(i), vector) if a)
            for i in range(self.rows)
        )

    def to_dict(self) -> dict:
        """
        Convert to a dictionary with nested rows.

        Returns:
            Dictionary with rows, cols and entries
        """
        return {
            'rows': self.rows,
            'cols': self.cols,
            'entries': self.to_rows()
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'IntMatrix':
        """
        Create an IntMatrix from its dictionary form.

        Args:
            data: Dictionary with rows, cols and entries

        Returns:
            IntMatrix instance
        """
        return cls.from_rows(data['entries'], cols=data['cols'])


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """
    Exact integer matrix product.

    Args:
        a: Left factor
        b: Right factor with b.rows == a.cols

    Returns:
        a @ b

    Raises:
        DimensionMismatch: If the inner dimensions differ
    """
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        nonzero = [(k, x) for k, x in enumerate(row) if x]
        for col in columns:
            entries.append(sum(x * col[k] for k, x in nonzero))
    return IntMatrix(a.rows, b.cols, tuple(entries))


def primitive_integer_vector(vector: Sequence[Number]) -> Tuple[int, ...]:
    """
    Scale a rational vector to integers with content 1 and first nonzero entry positive.

    Args:
        vector: Nonzero vector of integers or Fractions

    Returns:
        Primitive integer vector on the same line
    """
    fractions = [Fraction(x) for x in vector]
    denominator = lcm(*(f.denominator for f in fractions)) if fractions else 1
    integers = [int(f * denominator) for f in fractions]
    content = 0
    for x in integers:
        content = gcd(content, x)
    if content == 0:
        return tuple(integers)
    leading = next(x for x in integers if x)
    sign = 1 if leading > 0 else -1
    return tuple(sign * x // content for x in integers)


def as_rat_vector(vector: Iterable[Number]) -> RatVector:
    """Convert integers or Fractions to a tuple of reduced Fractions."""
    return tuple(Fraction(x) for x in vector)
