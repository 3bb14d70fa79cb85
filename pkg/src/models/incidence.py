"""
Mutual incidence matrix, Z vectors and intersection profiles.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from src.errors import DimensionMismatch, InconsistentIncidence
from src.linalg.matrix import IntMatrix
from .design_params import DesignParams


@dataclass(frozen=True)
class MutualIncidenceMatrix:
    """
    Block-intersection sizes of two designs on the same point set.

    Entry (i, j) is |B1^i ∩ B2^j|, rows in the first design's block order,
    columns in the second's.

    Attributes:
        d1_params: Parameters of the row design
        d2_params: Parameters of the column design
        m: b1 x b2 matrix
    """
    d1_params: DesignParams
    d2_params: DesignParams
    m: IntMatrix

    def __post_init__(self) -> None:
        self._validate_shape()
        self._validate_entries()
        self._validate_sums()

    def _validate_shape(self) -> None:
        if (self.m.rows, self.m.cols) != (self.d1_params.b, self.d2_params.b):
            raise DimensionMismatch(
                f"mutual incidence matrix is {self.m.rows}x{self.m.cols}, "
                f"expected {self.d1_params.b}x{self.d2_params.b}"
            )

    def _validate_entries(self) -> None:
        bound = min(self.d1_params.k, self.d2_params.k)
        for index, value in enumerate(self.m.entries):
            if not 0 <= value <= bound:
                i, j = divmod(index, self.m.cols)
                raise InconsistentIncidence(f"entry ({i + 1}, {j + 1}) = {value} is outside 0..{bound}")

    def _validate_sums(self) -> None:
        """Rows sum to r2*k1 and columns to r1*k2."""
        row_sum = self.d2_params.r * self.d1_params.k
        for i, total in enumerate(self.m.row_sums()):
            if total != row_sum:
                raise InconsistentIncidence(f"row {i + 1} sums to {total}, expected {row_sum}")
        column_sum = self.d1_params.r * self.d2_params.k
        for j, total in enumerate(self.m.column_sums()):
            if total != column_sum:
                raise InconsistentIncidence(f"column {j + 1} sums to {total}, expected {column_sum}")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.m.rows, self.m.cols

    def mmt(self) -> IntMatrix:
        """M M^T, a b1 x b1 matrix."""
        return self.m @ self.m.T

    def mtm(self) -> IntMatrix:
        """M^T M, a b2 x b2 matrix."""
        return self.m.T @ self.m

    def transposed(self) -> 'MutualIncidenceMatrix':
        """The mutual incidence matrix with the two designs swapped."""
        return MutualIncidenceMatrix(self.d2_params, self.d1_params, self.m.T)

    def to_dict(self) -> dict:
        """
        Convert to a dictionary for serialization.

        Returns:
            Dictionary with both parameter tuples and the matrix
        """
        return {
            'd1_params': self.d1_params.to_dict(),
            'd2_params': self.d2_params.to_dict(),
            'matrix': self.m.to_dict()
        }


@dataclass(frozen=True)
class ZVector:
    """
    Signed indicator over blocks for an ordered pair of points.

    Entry j is +1 when block j contains x but not y, -1 when it contains y
    but not x, and 0 otherwise.

    Attributes:
        design_params: Parameters of the design the vector indexes
        x: First point
        y: Second point
        entries: One entry per block
    """
    design_params: DesignParams
    x: int
    y: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'entries', tuple(self.entries))
        self._validate_entries()

    def _validate_entries(self) -> None:
        if len(self.entries) != self.design_params.b:
            raise DimensionMismatch(
                f"Z vector has {len(self.entries)} entries, expected {self.design_params.b}"
            )
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise InconsistentIncidence("Z vector entries must be -1, 0 or 1")
        plus = self.entries.count(1)
        minus = self.entries.count(-1)
        expected = 0 if self.x == self.y else self.design_params.r - self.design_params.lambda_
        if plus != expected or minus != expected:
            raise InconsistentIncidence(
                f"Z({self.x}, {self.y}) has {plus} entries +1 and {minus} entries -1, expected {expected} each"
            )

    def __len__(self) -> int:
        return len(self.entries)

    def __neg__(self) -> 'ZVector':
        return ZVector(self.design_params, self.y, self.x, tuple(-e for e in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def scaled(self, factor: int) -> Tuple[int, ...]:
        return tuple(factor * e for e in self.entries)

    def to_dict(self) -> dict:
        return {
            'x': self.x,
            'y': self.y,
            'entries': list(self.entries)
        }


@dataclass(frozen=True)
class DeltaProfile:
    """
    Histogram of intersection sizes |S ∩ B| over the blocks of a design.

    Attributes:
        subset_size: |S|
        counts: counts[j] is the number of blocks meeting S in exactly j points
    """
    subset_size: int
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'counts', tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise InconsistentIncidence("delta counts must be nonnegative")

    @property
    def total(self) -> int:
        """Sum of all counts, which equals b."""
        return sum(self.counts)

    def moment(self, power: int) -> int:
        """Sum of j**power * delta_j."""
        return sum(j ** power * c for j, c in enumerate(self.counts))

    def pair_moment(self) -> int:
        """Sum of C(j, 2) * delta_j."""
        return sum(j * (j - 1) // 2 * c for j, c in enumerate(self.counts))

    def as_dict(self) -> Dict[int, int]:
        """Nonzero counts keyed by intersection size, largest size first."""
        return {j: c for j, c in reversed(list(enumerate(self.counts))) if c}

    def to_dict(self) -> dict:
        return {
            'subset_size': self.subset_size,
            'counts': {str(j): c for j, c in self.as_dict().items()}
        }
