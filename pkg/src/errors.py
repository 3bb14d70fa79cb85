"""
Exception hierarchy for design-spectra.

Every domain error is a ValueError so callers can catch the broad type and
tests can match on the message.
"""
from typing import Optional, Sequence, Tuple


class DesignSpectraError(ValueError):
    """Base class for all domain errors."""


# Design axioms

class DesignValidationError(DesignSpectraError):
    """A block list violates one of the BIBD axioms."""


class EmptyDesign(DesignValidationError):
    """The block list is empty or v is not positive."""


class PointOutOfRange(DesignValidationError):
    """A point lies outside 1..v."""

    def __init__(self, point: int, v: int, block_index: Optional[int] = None):
        self.point = point
        self.v = v
        self.block_index = block_index
        where = f" in block {block_index + 1}" if block_index is not None else ""
        super().__init__(f"point {point} is outside 1..{v}{where}")


class DuplicatePointInBlock(DesignValidationError):
    """A block lists the same point twice."""

    def __init__(self, point: int, block_index: int):
        self.point = point
        self.block_index = block_index
        super().__init__(f"block {block_index + 1} contains point {point} more than once")


class NonUniformBlockSize(DesignValidationError):
    """Blocks do not all have the same size."""

    def __init__(self, block_index: int, size: int, expected: int):
        self.block_index = block_index
        self.size = size
        self.expected = expected
        super().__init__(
            f"block {block_index + 1} has {size} points, expected {expected} (size of block 1)"
        )


class NonUniformReplication(DesignValidationError):
    """Points do not all occur in the same number of blocks."""

    def __init__(self, point: int, count: int, expected: int, counts: Sequence[int] = ()):
        self.point = point
        self.count = count
        self.expected = expected
        self.counts = tuple(counts)
        super().__init__(
            f"point {point} occurs in {count} blocks, expected {expected} (replication of point 1)"
        )


class NonUniformPairCount(DesignValidationError):
    """Pairs of distinct points do not all occur in the same number of blocks."""

    def __init__(self, pair: Tuple[int, int], count: int, expected: int):
        self.pair = pair
        self.count = count
        self.expected = expected
        super().__init__(
            f"pair {pair} occurs in {count} blocks, expected {expected}"
        )


class InvalidParameters(DesignValidationError):
    """Derived parameters break a relation a BIBD must satisfy."""


# Constructions

class ConstructionError(DesignSpectraError):
    """A design construction cannot be carried out."""


class InvalidK(ConstructionError):
    """Block size outside 1..v-1."""


class ComplementTooSmall(ConstructionError):
    """Complement blocks would have fewer than two points."""


class NotABibd(ConstructionError):
    """The constructed block list is not a BIBD."""


class BlockNotPresent(ConstructionError):
    """A block to remove does not occur (often enough) in the larger design."""

    def __init__(self, block: Tuple[int, ...]):
        self.block = block
        super().__init__(f"block {block} is not present often enough to remove")


class NotADifferenceSet(ConstructionError):
    """A base block does not yield every nonzero difference equally often."""

    def __init__(self, difference: int, count: int, expected: int):
        self.difference = difference
        self.count = count
        self.expected = expected
        super().__init__(
            f"difference {difference} arises {count} times, expected {expected}"
        )


class MixedBlockSize(ConstructionError):
    """Designs with different block sizes cannot be combined."""


class MixedV(ConstructionError):
    """Designs on different point sets cannot be combined."""


class UnknownFixture(ConstructionError):
    """No fixture with the requested name."""


# Linear algebra

class LinalgError(DesignSpectraError):
    """Shape or argument error in the exact linear algebra kernels."""


class DimensionMismatch(LinalgError):
    """Operand shapes are incompatible."""


class NotSquare(LinalgError):
    """A square matrix was required."""


class ZeroVector(LinalgError):
    """A nonzero vector was required."""


# Incidence, spectra, graphs

class MismatchedPointSets(DesignSpectraError):
    """Two designs are not built on the same point set."""

    def __init__(self, v1: int, v2: int):
        self.v1 = v1
        self.v2 = v2
        super().__init__(f"designs are built on different point sets (v={v1} and v={v2})")


class DegenerateSpan(DesignSpectraError):
    """The consecutive Z vectors do not span a space of dimension v-1."""


class FisherViolation(DesignSpectraError):
    """Fewer blocks than points."""


class EmptySizeSet(DesignSpectraError):
    """An S-block intersection graph needs at least one intersection size."""


class InconsistentIncidence(DesignSpectraError):
    """A matrix or vector breaks a structural law of the incidence objects."""


class InvalidGraph(DesignSpectraError):
    """A graph model is not well formed."""


# Command line

class ConfigError(DesignSpectraError):
    """An environment setting cannot be parsed."""


class UsageError(DesignSpectraError):
    """Command line arguments are inconsistent."""


class ParseError(DesignSpectraError):
    """An input file cannot be parsed."""

    def __init__(self, path: str, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.path = path
        self.line = line
        self.column = column
        location = f"{path}:{line}:{column}" if line is not None else path
        super().__init__(f"{location}: {message}")


class CheckFailed(DesignSpectraError):
    """A validation or spectral check failed."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"check '{check}' failed" + (f": {detail}" if detail else ""))


class GoldenMismatch(DesignSpectraError):
    """A recomputed value differs from the embedded published data."""

    def __init__(self, name: str, row: Optional[int] = None, col: Optional[int] = None,
                 expected: object = None, actual: object = None):
        self.name = name
        self.row = row
        self.col = col
        self.expected = expected
        self.actual = actual
        where = f" at ({row}, {col})" if row is not None else ""
        super().__init__(f"{name}{where}: expected {expected}, got {actual}")
