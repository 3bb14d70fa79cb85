"""
Design model: a point set {1..v} with an ordered list of blocks.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from src.designs.counting import Block, canonical_block, derive_params
from .design_params import DesignParams

PointId = int


@dataclass(frozen=True)
class Design:
    """
    A validated balanced incomplete block design.

    Blocks are stored sorted ascending; their order in the list is preserved
    because it indexes rows and columns of every matrix built from the design.
    Construction fails unless all BIBD axioms hold.

    Attributes:
        v: Number of points (points are 1..v)
        blocks: Ordered blocks, each a strictly increasing tuple
        params: Derived (v, b, r, k, lambda)
    """
    v: int
    blocks: Tuple[Block, ...]
    params: DesignParams = field(init=False, compare=False)

    def __post_init__(self) -> None:
        canonical = tuple(canonical_block(block, self.v, i) for i, block in enumerate(self.blocks))
        object.__setattr__(self, 'blocks', canonical)
        object.__setattr__(self, 'params', derive_params(self.v, canonical))

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def lambda_(self) -> int:
        return self.params.lambda_

    def block_multiset(self) -> Counter:
        """Blocks counted with multiplicity, ignoring order."""
        return Counter(self.blocks)

    def same_blocks_as(self, other: 'Design') -> bool:
        """Multiset equality: same v and the same blocks with multiplicity."""
        return self.v == other.v and self.block_multiset() == other.block_multiset()

    def reordered(self, order: Sequence[int]) -> 'Design':
        """Return the design with blocks permuted by the zero-based index list order."""
        return Design(v=self.v, blocks=tuple(self.blocks[i] for i in order))

    @classmethod
    def create_new(cls, v: int, blocks: Iterable[Iterable[int]]) -> 'Design':
        """
        Create a validated design from raw point lists.

        Args:
            v: Number of points
            blocks: Blocks as iterables of points, in the order that indexes matrices

        Returns:
            New Design instance
        """
        return cls(v=v, blocks=tuple(tuple(block) for block in blocks))

    @classmethod
    def from_dict(cls, data: dict) -> 'Design':
        """
        Create a Design from the design-file dictionary {"v": ..., "blocks": [...]}.

        Args:
            data: Dictionary containing v and blocks

        Returns:
            Design instance
        """
        return cls.create_new(v=data['v'], blocks=data['blocks'])

    def to_dict(self) -> dict:
        """
        Convert to the design-file dictionary with canonical block order.

        Returns:
            Dictionary with keys v and blocks
        """
        return {
            'v': self.v,
            'blocks': [list(block) for block in self.blocks]
        }
