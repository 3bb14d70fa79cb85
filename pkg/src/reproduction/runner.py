"""
Rebuild the three published examples and diff them against the golden data.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from src.designs.constructions import trivial_design
from src.designs.fixtures import fixture
from src.errors import GoldenMismatch, UsageError
from src.incidence.mutual import classical_gram_check, mutual_matrix
from src.incidence.zvectors import z_vector
from src.linalg.elimination import in_span, kernel_basis, same_span
from src.linalg.matrix import IntMatrix
from src.models.design import Design
from src.models.example_outcome import ExampleOutcome
from src.models.spectral_report import SpectralReport
from src.spectral.verifier import verify_spectrum
from . import golden

logger = logging.getLogger(__name__)

EXAMPLES = (1, 2, 3)


class _Collector:
    """Accumulates report lines and golden mismatches for one example."""

    def __init__(self) -> None:
        self.lines: List[str] = []
        self.mismatches: List[GoldenMismatch] = []

    def say(self, text: str) -> None:
        self.lines.append(f"  {text}")

    def show_matrix(self, name: str, a: IntMatrix) -> None:
        width = max((len(str(x)) for x in a.entries), default=1)
        self.say(f"{name} ({a.rows}x{a.cols}):")
        for i in range(a.rows):
            self.say("  " + " ".join(str(x).rjust(width) for x in a.row(i)))

    def value(self, name: str, expected: object, actual: object) -> None:
        if expected != actual:
            self.mismatches.append(GoldenMismatch(name, expected=expected, actual=actual))

    def matrix(self, name: str, expected: Sequence[Sequence[int]], actual: IntMatrix) -> None:
        """Record the first differing entry, 1-based, or a shape mismatch."""
        shape = (len(expected), len(expected[0]) if expected else 0)
        if shape != (actual.rows, actual.cols):
            self.mismatches.append(GoldenMismatch(
                f"{name} shape", expected=shape, actual=(actual.rows, actual.cols)
            ))
            return
        for i, row in enumerate(expected):
            for j, x in enumerate(row):
                if actual[i, j] != x:
                    self.mismatches.append(GoldenMismatch(name, i + 1, j + 1, x, actual[i, j]))
                    return

    def spectrum(self, name: str, report: SpectralReport) -> None:
        self.say(
            f"{name}: mu1 = {report.mu1} (multiplicity {report.multiplicity_mu1}), "
            f"mu2 = {report.mu2} (multiplicity {report.multiplicity_mu2}), "
            f"rank {report.rank_mmt}, kernel dimension {report.kernel_dim}"
        )
        failed = [check.name for check in report.failed_checks]
        self.say(f"{name} checks: {'all passed' if not failed else 'FAILED ' + ', '.join(failed)}")
        self.value(f"{name} checks failed", [], failed)

    def outcome(self, which: int, title: str) -> ExampleOutcome:
        return ExampleOutcome(which, title, tuple(self.lines), tuple(self.mismatches))


def _two_valued(out: _Collector, name: str, g: IntMatrix, diagonal: int, off_diagonal: int) -> None:
    out.value(f"{name} diagonal", {diagonal}, set(g.diagonal()))
    out.value(f"{name} off-diagonal", {off_diagonal}, g.off_diagonal_values())
    out.say(f"{name}: diagonal {sorted(set(g.diagonal()))}, off-diagonal {sorted(g.off_diagonal_values())}")


def _z_vectors(out: _Collector, d: Design, expected: dict) -> None:
    for (x, y), entries in expected.items():
        actual = z_vector(d, x, y).entries
        out.value(f"Z({x}, {y})", tuple(entries), actual)
        out.say(f"Z({x}, {y}) = {list(actual)}")


def example_1(oracle_max_blocks: Optional[int] = None) -> ExampleOutcome:
    """Fano plane against the (7, 28, 12, 3, 4) design, and against itself."""
    out = _Collector()
    d1, d2 = fixture('fano'), fixture('ex1_d2')
    m = mutual_matrix(d1, d2).m
    out.show_matrix("M", m)
    out.matrix("M", golden.EX1_M, m)
    _two_valued(out, "M M^T", m @ m.T, golden.EX1_MMT_DIAGONAL, golden.EX1_MMT_OFF_DIAGONAL)

    report = verify_spectrum(d1, d2, oracle_max_blocks)
    out.spectrum("M M^T", report)
    out.value("eigenvalues", golden.EX1_EIGENVALUES, (report.mu1, report.mu2))
    out.value("multiplicities", golden.EX1_MULTIPLICITIES,
              (report.multiplicity_mu1, report.multiplicity_mu2))
    _z_vectors(out, d1, golden.EX1_Z_VECTORS)

    self_m = mutual_matrix(d1, d1).m
    out.show_matrix("M(fano, fano)", self_m)
    _two_valued(out, "M(fano, fano)", self_m, golden.EX1_SELF_DIAGONAL, golden.EX1_SELF_OFF_DIAGONAL)
    _two_valued(out, "M(fano, fano) M(fano, fano)^T", self_m @ self_m.T,
                golden.EX1_SELF_MMT_DIAGONAL, golden.EX1_SELF_MMT_OFF_DIAGONAL)
    self_report = verify_spectrum(d1, d1, oracle_max_blocks)
    out.spectrum("M(fano, fano) M(fano, fano)^T", self_report)
    out.value("self-pair eigenvalues", golden.EX1_SELF_EIGENVALUES, (self_report.mu1, self_report.mu2))
    out.value("self-pair multiplicities", golden.EX1_SELF_MULTIPLICITIES,
              (self_report.multiplicity_mu1, self_report.multiplicity_mu2))
    return out.outcome(1, "Fano plane and the (7,28,12,3,4) design")


def example_2(oracle_max_blocks: Optional[int] = None) -> ExampleOutcome:
    """Trivial design against the Fano plane: the classical incidence matrix."""
    out = _Collector()
    d1, d2 = trivial_design(7), fixture('fano')
    m = mutual_matrix(d1, d2).m
    out.show_matrix("M", m)
    _two_valued(out, "M M^T", m @ m.T, golden.EX2_MMT_DIAGONAL, golden.EX2_MMT_OFF_DIAGONAL)
    out.value("classical Gram identity", True, classical_gram_check(d2))

    report = verify_spectrum(d1, d2, oracle_max_blocks)
    out.spectrum("M M^T", report)
    out.value("eigenvalues", golden.EX2_EIGENVALUES, (report.mu1, report.mu2))
    out.value("multiplicities", golden.EX2_MULTIPLICITIES,
              (report.multiplicity_mu1, report.multiplicity_mu2))
    out.value("rank", golden.EX2_RANK, report.rank_mmt)
    return out.outcome(2, "trivial design and the Fano plane")


def example_3(oracle_max_blocks: Optional[int] = None) -> ExampleOutcome:
    """The (6, 10, 5, 3, 2) design against all 2-subsets of {1..6}, both orders."""
    out = _Collector()
    d1, d2 = fixture('ex3_d1'), fixture('ex3_d2')
    m = mutual_matrix(d1, d2).m
    mmt, mtm = m @ m.T, m.T @ m
    out.show_matrix("M", m)
    out.matrix("M", golden.EX3_M, m)
    out.show_matrix("M M^T", mmt)
    out.matrix("M M^T", golden.EX3_MMT, mmt)
    out.value("M M^T values", golden.EX3_MMT_VALUES, frozenset(mmt.entries))
    out.show_matrix("M^T M", mtm)
    out.matrix("M^T M", golden.EX3_MTM, mtm)
    out.value("M^T M values", golden.EX3_MTM_VALUES, frozenset(mtm.entries))

    forward = verify_spectrum(d1, d2, oracle_max_blocks)
    backward = verify_spectrum(d2, d1, oracle_max_blocks)
    out.spectrum("M M^T", forward)
    out.spectrum("M^T M", backward)
    for name, report, kernel_dim in (("M M^T", forward, golden.EX3_MMT_KERNEL_DIM),
                                     ("M^T M", backward, golden.EX3_MTM_KERNEL_DIM)):
        out.value(f"{name} eigenvalues", golden.EX3_EIGENVALUES, (report.mu1, report.mu2))
        out.value(f"{name} kernel dimension", kernel_dim, report.kernel_dim)
        out.value(f"{name} mu2 multiplicity", golden.EX3_MU2_MULTIPLICITY, report.multiplicity_mu2)

    _z_vectors(out, d1, golden.EX3_Z_VECTORS)
    _published_kernel(out, mmt, golden.EX3_KERNEL_VECTORS)
    return out.outcome(3, "the (6,10,5,3,2) design and all 2-subsets of six points")


def _published_kernel(out: _Collector, g: IntMatrix, vectors: Sequence[Tuple[int, ...]]) -> None:
    """Each printed kernel vector is annihilated by G and the four span ker G."""
    kernel = kernel_basis(g)
    for index, x in enumerate(vectors, start=1):
        out.value(f"G x for kernel vector {index}", (0,) * g.rows, g.apply(x))
        out.value(f"kernel vector {index} in computed kernel", True, in_span(x, kernel, g.cols))
    spans = same_span(vectors, kernel, g.cols)
    out.value("published kernel vectors span ker G", True, spans)
    out.say(f"kernel of M M^T: {len(kernel)} basis vectors, published vectors span it: {spans}")


RUNNERS = {1: example_1, 2: example_2, 3: example_3}


def parse_which(which: str) -> Tuple[int, ...]:
    """
    Parse the example selector.

    Args:
        which: "1", "2", "3" or "all"

    Returns:
        Example numbers to run

    Raises:
        UsageError: For any other value
    """
    if which == 'all':
        return EXAMPLES
    if which in {str(n) for n in EXAMPLES}:
        return (int(which),)
    raise UsageError(f"--which must be one of 1, 2, 3, all; got '{which}'")


def paper_examples(which: str = 'all', oracle_max_blocks: Optional[int] = None) -> List[ExampleOutcome]:
    """
    Reproduce the selected examples.

    Args:
        which: "1", "2", "3" or "all"
        oracle_max_blocks: Size gate for the characteristic polynomial oracle

    Returns:
        One ExampleOutcome per selected example, in order
    """
    outcomes = [RUNNERS[n](oracle_max_blocks) for n in parse_which(which)]
    for outcome in outcomes:
        if outcome.ok:
            logger.info("Example reproduced", extra={'example': outcome.which})
        else:
            logger.warning("Example differs from golden data", extra={
                'example': outcome.which,
                'mismatches': [str(m) for m in outcome.mismatches],
            })
    return outcomes


def render(outcomes: Iterable[ExampleOutcome]) -> str:
    """Concatenate the text reports."""
    return "\n".join(outcome.to_text() for outcome in outcomes)
