"""
Parameter tuple (v, b, r, k, lambda) of a balanced incomplete block design.
"""
from dataclasses import dataclass

from src.errors import InvalidParameters


@dataclass(frozen=True)
class DesignParams:
    """
    Parameters of a block design.

    Attributes:
        v: Number of points
        b: Number of blocks
        r: Number of blocks containing any fixed point
        k: Number of points in every block
        lambda_: Number of blocks containing any fixed pair of distinct points
    """
    v: int
    b: int
    r: int
    k: int
    lambda_: int

    def __post_init__(self) -> None:
        self._validate_ranges()
        self._validate_relations()

    def _validate_ranges(self) -> None:
        """Validate sign constraints and the block size bound."""
        if self.v < 1 or self.b < 1 or self.r < 1 or self.k < 1:
            raise InvalidParameters(f"v, b, r, k must be positive, got {self.as_tuple()}")
        if self.lambda_ < 0:
            raise InvalidParameters(f"lambda must be non-negative, got {self.lambda_}")
        if self.k > self.v:
            raise InvalidParameters(f"k={self.k} exceeds v={self.v}")
        if self.k == self.v and self.v > 1:
            raise InvalidParameters(f"k must be smaller than v, got k=v={self.v}")
        if self.lambda_ == 0 and self.k > 1:
            raise InvalidParameters("lambda=0 is only admitted for the trivial design (k=1)")

    def _validate_relations(self) -> None:
        """Validate bk = vr and r(k-1) = lambda(v-1)."""
        if self.b * self.k != self.v * self.r:
            raise InvalidParameters(
                f"bk={self.b * self.k} differs from vr={self.v * self.r} for {self.as_tuple()}"
            )
        if self.r * (self.k - 1) != self.lambda_ * (self.v - 1):
            raise InvalidParameters(
                f"r(k-1)={self.r * (self.k - 1)} differs from "
                f"lambda(v-1)={self.lambda_ * (self.v - 1)} for {self.as_tuple()}"
            )
        if self.k < self.v and self.r <= self.lambda_:
            raise InvalidParameters(f"r must exceed lambda when k < v, got {self.as_tuple()}")
        if not self.satisfies_fisher:
            raise InvalidParameters(f"Fisher's inequality b >= v fails for {self.as_tuple()}")

    @property
    def is_trivial(self) -> bool:
        """True for singleton-block designs (k = 1, lambda = 0)."""
        return self.k == 1

    @property
    def satisfies_fisher(self) -> bool:
        """Fisher's inequality b >= v."""
        return self.b >= self.v

    def as_tuple(self) -> tuple:
        """Return (v, b, r, k, lambda)."""
        return (self.v, self.b, self.r, self.k, self.lambda_)

    @classmethod
    def from_dict(cls, data: dict) -> 'DesignParams':
        """
        Create a DesignParams instance from a dictionary.

        Args:
            data: Dictionary with keys v, b, r, k and lambda

        Returns:
            DesignParams instance
        """
        return cls(
            v=data['v'],
            b=data['b'],
            r=data['r'],
            k=data['k'],
            lambda_=data['lambda']
        )

    def to_dict(self) -> dict:
        """
        Convert to a dictionary for serialization.

        Returns:
            Dictionary representation of the parameters
        """
        return {
            'v': self.v,
            'b': self.b,
            'r': self.r,
            'k': self.k,
            'lambda': self.lambda_
        }
