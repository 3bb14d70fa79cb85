"""
Cyclic difference set specification.
"""
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterable

from src.errors import ConstructionError, NotADifferenceSet, PointOutOfRange


@dataclass(frozen=True)
class DifferenceSetSpec:
    """
    A base block of residues mod v whose orbit under +1 is a cyclic design.

    Residues are represented by 1..v, so v stands for 0 mod v.

    Attributes:
        modulus: v
        base_block: Residues in 1..v
    """
    modulus: int
    base_block: FrozenSet[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'base_block', frozenset(self.base_block))
        self._validate_residues()
        self._validate_differences()

    def _validate_residues(self) -> None:
        """Validate modulus and the residue range of the base block."""
        if self.modulus < 2:
            raise ConstructionError(f"modulus must be at least 2, got {self.modulus}")
        if not self.base_block:
            raise ConstructionError("base_block must not be empty")
        if len(self.base_block) >= self.modulus:
            raise ConstructionError("base_block must be a proper subset of the residues")
        for residue in self.base_block:
            if not 1 <= residue <= self.modulus:
                raise PointOutOfRange(residue, self.modulus)

    def _validate_differences(self) -> None:
        """Every nonzero residue must arise as a difference exactly lambda times."""
        counts = self.difference_counts()
        k = len(self.base_block)
        pairs = k * (k - 1)
        if pairs % (self.modulus - 1) == 0:
            expected = pairs // (self.modulus - 1)
        else:
            expected = counts[1]
        for difference in range(1, self.modulus):
            if counts[difference] != expected:
                raise NotADifferenceSet(difference, counts[difference], expected)

    def difference_counts(self) -> Counter:
        """Count a - b mod v over ordered pairs of distinct base elements."""
        counts: Counter = Counter()
        for a in self.base_block:
            for b in self.base_block:
                if a != b:
                    counts[(a - b) % self.modulus] += 1
        return counts

    @property
    def lambda_(self) -> int:
        k = len(self.base_block)
        return k * (k - 1) // (self.modulus - 1)

    def shifted(self, shift: int) -> tuple:
        """The base block translated by shift, as residues in 1..v."""
        return tuple((residue - 1 + shift) % self.modulus + 1 for residue in sorted(self.base_block))

    @classmethod
    def create_new(cls, modulus: int, base_block: Iterable[int]) -> 'DifferenceSetSpec':
        """
        Create a validated difference set specification.

        Args:
            modulus: v
            base_block: Residues in 1..v

        Returns:
            DifferenceSetSpec instance
        """
        return cls(modulus=modulus, base_block=frozenset(base_block))

    def to_dict(self) -> dict:
        """
        Convert to a dictionary.

        Returns:
            Dictionary with modulus and sorted base block
        """
        return {
            'modulus': self.modulus,
            'base_block': sorted(self.base_block)
        }
