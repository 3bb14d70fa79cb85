"""
Exact verification of the spectrum of G = M M^T for a pair of designs.

Every check returns (passed, witness). Failures are recorded in the
SpectralReport with the first offending index or pair; nothing is raised
for a failed check.
"""
import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.incidence.mutual import mutual_matrix, phi_embedding, require_same_points
from src.incidence.zvectors import intertwining_check, z_vector
from src.linalg.charpoly import char_poly, mat_poly_eval
from src.linalg.elimination import kernel_basis, rank, same_span
from src.linalg.matrix import IntMatrix, RatVector
from src.linalg.polynomial import IntPolynomial
from src.models.design import Design
from src.models.incidence import MutualIncidenceMatrix
from src.models.spectral_report import CheckResult, SpectralReport
from src.monitoring import record_matrix, track_check
from src.utils.settings import get_settings
from .closed_form import closed_form_char_poly, diag_value, eigenvalues

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, Optional[dict]]


def _first_mismatch(actual: Sequence, expected: Sequence) -> Optional[int]:
    return next((i for i, (a, e) in enumerate(zip(actual, expected)) if a != e), None)


@track_check('diagonal')
def check_diagonal(g: IntMatrix, expected: int) -> Outcome:
    """Every diagonal entry of G equals the closed-form value."""
    diagonal = g.diagonal()
    index = _first_mismatch(diagonal, [expected] * len(diagonal))
    if index is None:
        return True, None
    return False, {'index': index + 1, 'expected': expected, 'actual': diagonal[index]}


@track_check('all_ones')
def check_all_ones(g: IntMatrix, mu1: int) -> Outcome:
    """G 1 = mu1 1."""
    sums = g.row_sums()
    index = _first_mismatch(sums, [mu1] * len(sums))
    if index is None:
        return True, None
    return False, {'index': index + 1, 'expected': mu1, 'actual': sums[index]}


@track_check('z_eigenvectors')
def check_z_eigenvectors(g: IntMatrix, d: Design, mu: int) -> Outcome:
    """G Z(x, y) = mu Z(x, y) for every pair x < y of the row design."""
    for x, y in combinations(range(1, d.v + 1), 2):
        z = z_vector(d, x, y)
        if g.apply(z.entries) != z.scaled(mu):
            return False, {'pair': [x, y]}
    return True, None


@track_check('intertwining')
def check_intertwining(d1: Design, d2: Design, mim: MutualIncidenceMatrix) -> Outcome:
    """Both intertwining relations hold for every pair x < y."""
    for x, y in combinations(range(1, d1.v + 1), 2):
        forward, backward = intertwining_check(d1, d2, x, y, mim)
        if not forward:
            return False, {'pair': [x, y], 'relation': 'forward'}
        if not backward:
            return False, {'pair': [x, y], 'relation': 'backward'}
    return True, None


@track_check('rank')
def check_rank(rank_m: int, rank_g: int, v: int) -> Outcome:
    """rank M = rank G = v."""
    if rank_m == v and rank_g == v:
        return True, None
    return False, {'rank_m': rank_m, 'rank_mmt': rank_g, 'expected': v}


@track_check('annihilation')
def check_annihilation(g: IntMatrix, mu1: int, mu2: int) -> Outcome:
    """t (t - mu1)(t - mu2) evaluated at G is zero."""
    p = IntPolynomial.from_roots([0, mu1, mu2])
    value = mat_poly_eval(p, g)
    index = next((i for i, x in enumerate(value.entries) if x), None)
    if index is None:
        return True, None
    row, col = divmod(index, value.cols)
    return False, {'row': row + 1, 'col': col + 1, 'actual': value.entries[index]}


@track_check('multiplicities')
def check_multiplicities(rank_shift_mu1: int, rank_shift_mu2: int, b1: int, v: int,
                         coincident: bool) -> Outcome:
    """Ranks of G - mu I certify the eigenspace dimensions."""
    if coincident:
        if rank_shift_mu1 == b1 - v:
            return True, None
        return False, {'rank_mu1': rank_shift_mu1, 'expected_mu1': b1 - v}
    if rank_shift_mu2 == b1 - (v - 1) and rank_shift_mu1 == b1 - 1:
        return True, None
    return False, {
        'rank_mu1': rank_shift_mu1,
        'expected_mu1': b1 - 1,
        'rank_mu2': rank_shift_mu2,
        'expected_mu2': b1 - (v - 1),
    }


@track_check('kernel_dimension')
def check_kernel_dimension(kernel: Sequence[RatVector], b1: int, v: int) -> Outcome:
    """dim ker G = b1 - v."""
    if len(kernel) == b1 - v:
        return True, None
    return False, {'expected': b1 - v, 'actual': len(kernel)}


@track_check('kernel_identity')
def check_kernel_identity(phi: IntMatrix, kernel: Sequence[RatVector]) -> Outcome:
    """ker phi(d1) = ker G."""
    phi_kernel = kernel_basis(phi)
    if same_span(phi_kernel, kernel, phi.cols):
        return True, None
    return False, {'dim_phi_kernel': len(phi_kernel), 'dim_mmt_kernel': len(kernel)}


@track_check('char_poly_oracle')
def check_char_poly(g: IntMatrix, expected: IntPolynomial) -> Outcome:
    """The characteristic polynomial of G equals the closed form."""
    actual = char_poly(g)
    if actual == expected:
        return True, None
    return False, {'expected': expected.to_list(), 'actual': actual.to_list()}


def _result(name: str, outcome: Outcome) -> CheckResult:
    passed, witness = outcome
    return CheckResult(name=name, passed=passed, witness=witness)


def verify_spectrum(d1: Design, d2: Design, oracle_max_blocks: Optional[int] = None) -> SpectralReport:
    """
    Certify the full spectrum of G = M(d1, d2) M(d1, d2)^T.

    Checks, in order: diagonal, all_ones, z_eigenvectors, intertwining, rank,
    annihilation, multiplicities, kernel_dimension, kernel_identity and,
    when b1 <= oracle_max_blocks, char_poly_oracle.

    Args:
        d1: Row design
        d2: Column design on the same points
        oracle_max_blocks: Size gate for the characteristic polynomial oracle,
            read from settings when None

    Returns:
        SpectralReport with one CheckResult per check

    Raises:
        MismatchedPointSets: If the designs have different v
    """
    require_same_points(d1, d2)
    if oracle_max_blocks is None:
        oracle_max_blocks = get_settings().oracle_max_blocks

    mim = mutual_matrix(d1, d2)
    m = mim.m
    g = mim.mmt()
    b1, v = d1.b, d1.v
    record_matrix('m', m.rows, m.cols)
    record_matrix('mmt', g.rows, g.cols)

    mu1, mu2 = eigenvalues(d1.params, d2.params)
    diagonal = diag_value(d1.params, d2.params)
    coincident = mu1 == mu2

    rank_m = rank(m)
    rank_g = rank(g)
    rank_shift_mu1 = rank(g.shift_diagonal(-mu1))
    rank_shift_mu2 = rank_shift_mu1 if coincident else rank(g.shift_diagonal(-mu2))
    kernel = kernel_basis(g)

    checks: List[CheckResult] = [
        _result('diagonal', check_diagonal(g, diagonal)),
        _result('all_ones', check_all_ones(g, mu1)),
        _result('z_eigenvectors', check_z_eigenvectors(g, d1, mu2)),
        _result('intertwining', check_intertwining(d1, d2, mim)),
        _result('rank', check_rank(rank_m, rank_g, v)),
        _result('annihilation', check_annihilation(g, mu1, mu2)),
        _result('multiplicities', check_multiplicities(rank_shift_mu1, rank_shift_mu2, b1, v, coincident)),
        _result('kernel_dimension', check_kernel_dimension(kernel, b1, v)),
        _result('kernel_identity', check_kernel_identity(phi_embedding(d1), kernel)),
    ]

    oracle_checked = b1 <= oracle_max_blocks
    if oracle_checked:
        expected = closed_form_char_poly(d1.params, d2.params, b1, v)
        checks.append(_result('char_poly_oracle', check_char_poly(g, expected)))

    report = SpectralReport.create_new(
        checks,
        d1_params=d1.params,
        d2_params=d2.params,
        b1=b1,
        v=v,
        mu1=mu1,
        mu2=mu2,
        diag_value=diagonal,
        rank_m=rank_m,
        rank_mmt=rank_g,
        multiplicity_mu1=b1 - rank_shift_mu1,
        multiplicity_mu2=b1 - rank_shift_mu2,
        kernel_dim=len(kernel),
        oracle_checked=oracle_checked,
    )
    _log_report(report)
    return report


def self_spectrum(d: Design, oracle_max_blocks: Optional[int] = None) -> SpectralReport:
    """
    Verify the spectrum for the pair (d, d) and certify M(d, d) itself.

    Besides every check of verify_spectrum this confirms that M(d, d) is
    symmetric with diagonal k, has eigenvalue rk on the all-ones vector and
    r - lambda on every Z vector, has rank v, and that rank(M - (r - lambda) I)
    is b - (v - 1).

    Args:
        d: Design
        oracle_max_blocks: Size gate for the characteristic polynomial oracle

    Returns:
        SpectralReport including the self_* checks
    """
    report = verify_spectrum(d, d, oracle_max_blocks)
    m = mutual_matrix(d, d).m
    rk = d.r * d.k
    gap = d.r - d.lambda_

    extra = [
        _result('self_symmetric', _self_symmetric(m, d.k)),
        _result('self_all_ones', check_all_ones(m, rk)),
        _result('self_z_eigenvectors', check_z_eigenvectors(m, d, gap)),
        _result('self_rank', check_rank(report.rank_m, rank(m), d.v)),
    ]
    shift_rk = rank(m.shift_diagonal(-rk))
    shift_gap = shift_rk if rk == gap else rank(m.shift_diagonal(-gap))
    extra.append(_result('self_multiplicities', check_multiplicities(shift_rk, shift_gap, d.b, d.v, rk == gap)))

    report = report.with_checks(extra)
    if not report.overall:
        logger.warning("Self spectrum failed", extra={
            'params': d.params.as_tuple(),
            'failed': [c.name for c in report.failed_checks],
        })
    return report


@track_check('self_symmetric')
def _self_symmetric(m: IntMatrix, k: int) -> Outcome:
    if not m.is_symmetric():
        return False, {'reason': 'not symmetric'}
    diagonal = m.diagonal()
    index = _first_mismatch(diagonal, [k] * len(diagonal))
    if index is None:
        return True, None
    return False, {'index': index + 1, 'expected': k, 'actual': diagonal[index]}


def _log_report(report: SpectralReport) -> None:
    context = {
        'd1_params': report.d1_params.as_tuple(),
        'd2_params': report.d2_params.as_tuple(),
        'mu1': report.mu1,
        'mu2': report.mu2,
        'overall': report.overall,
    }
    if report.overall:
        logger.info("Spectrum verified", extra=context)
    else:
        context['failed'] = [c.name for c in report.failed_checks]
        logger.warning("Spectrum verification failed", extra=context)
