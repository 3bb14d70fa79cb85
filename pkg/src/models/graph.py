"""
Graph models over design blocks.
"""
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from src.errors import InvalidGraph
from src.linalg.matrix import IntMatrix


@dataclass(frozen=True)
class Multigraph:
    """
    Multigraph stored as a multiplicity matrix.

    A bipartite multigraph has distinct left and right vertex sets and a
    left x right multiplicity matrix. A self-graph has right_vertices None and
    a square symmetric multiplicity matrix with zero diagonal.

    Attributes:
        left_vertices: Labels of the row vertices
        right_vertices: Labels of the column vertices, None for a self-graph
        multiplicity: Number of parallel edges between each pair of vertices
    """
    left_vertices: Tuple[str, ...]
    right_vertices: Optional[Tuple[str, ...]]
    multiplicity: IntMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, 'left_vertices', tuple(self.left_vertices))
        if self.right_vertices is not None:
            object.__setattr__(self, 'right_vertices', tuple(self.right_vertices))
        self._validate_shape()
        self._validate_multiplicities()

    def _validate_shape(self) -> None:
        cols = len(self.right_vertices) if self.right_vertices is not None else len(self.left_vertices)
        if (self.multiplicity.rows, self.multiplicity.cols) != (len(self.left_vertices), cols):
            raise InvalidGraph(
                f"multiplicity matrix is {self.multiplicity.rows}x{self.multiplicity.cols}, "
                f"expected {len(self.left_vertices)}x{cols}"
            )

    def _validate_multiplicities(self) -> None:
        if any(m < 0 for m in self.multiplicity.entries):
            raise InvalidGraph("edge multiplicities must be nonnegative")
        if self.is_bipartite:
            return
        if not self.multiplicity.is_symmetric():
            raise InvalidGraph("self-graph multiplicities must be symmetric")
        if any(self.multiplicity.diagonal()):
            raise InvalidGraph("self-graph must not have loops")

    @property
    def is_bipartite(self) -> bool:
        return self.right_vertices is not None

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.left_vertices + (self.right_vertices or ())

    def edges(self) -> Iterator[Tuple[str, str, int]]:
        """(u, v, multiplicity) for each joined pair in row-major order."""
        m = self.multiplicity
        for i in range(m.rows):
            start = 0 if self.is_bipartite else i + 1
            for j in range(start, m.cols):
                count = m[i, j]
                if count:
                    right = self.right_vertices[j] if self.right_vertices is not None else self.left_vertices[j]
                    yield self.left_vertices[i], right, count

    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity."""
        return sum(count for _, _, count in self.edges())

    def degrees(self) -> Tuple[int, ...]:
        """Degree of every vertex in the order of vertices."""
        m = self.multiplicity
        if self.is_bipartite:
            return tuple(m.row_sums()) + tuple(m.column_sums())
        return tuple(m.row_sums())


@dataclass(frozen=True)
class SimpleGraph:
    """
    Loopless graph without parallel edges.

    Attributes:
        vertices: Vertex labels
        adjacency: Symmetric 0/1 matrix with zero diagonal
    """
    vertices: Tuple[str, ...]
    adjacency: IntMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        a = self.adjacency
        if (a.rows, a.cols) != (len(self.vertices), len(self.vertices)):
            raise InvalidGraph(f"adjacency is {a.rows}x{a.cols} for {len(self.vertices)} vertices")
        if any(x not in (0, 1) for x in a.entries):
            raise InvalidGraph("adjacency entries must be 0 or 1")
        if not a.is_symmetric() or any(a.diagonal()):
            raise InvalidGraph("adjacency must be symmetric with zero diagonal")

    def edges(self) -> Iterator[Tuple[str, str]]:
        """Edges (u, v) with u before v, in row-major order."""
        n = len(self.vertices)
        for i in range(n):
            for j in range(i + 1, n):
                if self.adjacency[i, j]:
                    yield self.vertices[i], self.vertices[j]

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def has_edge(self, i: int, j: int) -> bool:
        """Adjacency by zero-based vertex index."""
        return bool(self.adjacency[i, j])
