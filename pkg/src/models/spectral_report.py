"""
Structured verdicts of the spectral verifier.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .design_params import DesignParams


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one named check.

    Attributes:
        name: Check identifier, e.g. "diagonal" or "rank"
        passed: Whether the check held exactly
        witness: First offending index, pair or value when the check failed
    """
    name: str
    passed: bool
    witness: Optional[dict] = None

    @classmethod
    def from_dict(cls, data: dict) -> 'CheckResult':
        return cls(
            name=data['name'],
            passed=data['passed'],
            witness=data.get('witness')
        )

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'witness': self.witness
        }


@dataclass(frozen=True)
class SpectralReport:
    """
    Result of verifying the spectrum of M M^T for a pair of designs.

    Multiplicities are geometric, computed as b1 - rank(G - mu I). When the
    two eigenvalues coincide both multiplicity fields hold the same value.

    Attributes:
        d1_params: Parameters of the row design
        d2_params: Parameters of the column design
        b1: Size of G = M M^T
        v: Number of points
        mu1: r1 r2 k1 k2
        mu2: (r1 - lambda1)(r2 - lambda2)
        diag_value: Claimed diagonal of G
        rank_m: Rank of M
        rank_mmt: Rank of G
        multiplicity_mu1: Dimension of the mu1 eigenspace
        multiplicity_mu2: Dimension of the mu2 eigenspace
        kernel_dim: Dimension of the kernel of G
        oracle_checked: Whether the characteristic polynomial was compared
        checks: Individual checks in the order they ran
        overall: True iff every check passed
    """
    d1_params: DesignParams
    d2_params: DesignParams
    b1: int
    v: int
    mu1: int
    mu2: int
    diag_value: int
    rank_m: int
    rank_mmt: int
    multiplicity_mu1: int
    multiplicity_mu2: int
    kernel_dim: int
    oracle_checked: bool
    checks: Tuple[CheckResult, ...] = field(default_factory=tuple)
    overall: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'checks', tuple(self.checks))
        self._validate_overall()

    def _validate_overall(self) -> None:
        expected = all(check.passed for check in self.checks)
        if self.overall != expected:
            raise ValueError(f"overall={self.overall} disagrees with the individual checks")

    @classmethod
    def create_new(cls, checks: Sequence[CheckResult], **fields) -> 'SpectralReport':
        """
        Create a report whose overall flag is derived from its checks.

        Args:
            checks: Individual check results
            **fields: Remaining report fields

        Returns:
            New SpectralReport instance
        """
        checks = tuple(checks)
        return cls(checks=checks, overall=all(check.passed for check in checks), **fields)

    @property
    def failed_checks(self) -> Tuple[CheckResult, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def check(self, name: str) -> Optional[CheckResult]:
        """Look up a check by name."""
        return next((c for c in self.checks if c.name == name), None)

    def with_checks(self, extra: Sequence[CheckResult]) -> 'SpectralReport':
        """Return a copy with further checks appended and overall recomputed."""
        checks = self.checks + tuple(extra)
        return SpectralReport(
            **{name: getattr(self, name) for name in _SCALAR_FIELDS},
            checks=checks,
            overall=all(check.passed for check in checks)
        )

    @classmethod
    def from_dict(cls, data: dict) -> 'SpectralReport':
        """
        Create a SpectralReport from its dictionary form.

        Args:
            data: Dictionary produced by to_dict

        Returns:
            SpectralReport instance
        """
        fields = {name: data[name] for name in _SCALAR_FIELDS}
        fields['d1_params'] = DesignParams.from_dict(data['d1_params'])
        fields['d2_params'] = DesignParams.from_dict(data['d2_params'])
        return cls(
            checks=tuple(CheckResult.from_dict(c) for c in data['checks']),
            overall=data['overall'],
            **fields
        )

    def to_dict(self) -> dict:
        """
        Convert to a dictionary with a stable field order.

        Returns:
            Dictionary representation of the report
        """
        return {
            'overall': self.overall,
            'd1_params': self.d1_params.to_dict(),
            'd2_params': self.d2_params.to_dict(),
            'b1': self.b1,
            'v': self.v,
            'mu1': self.mu1,
            'mu2': self.mu2,
            'diag_value': self.diag_value,
            'rank_m': self.rank_m,
            'rank_mmt': self.rank_mmt,
            'multiplicity_mu1': self.multiplicity_mu1,
            'multiplicity_mu2': self.multiplicity_mu2,
            'kernel_dim': self.kernel_dim,
            'oracle_checked': self.oracle_checked,
            'checks': [check.to_dict() for check in self.checks]
        }


_SCALAR_FIELDS = (
    'd1_params', 'd2_params', 'b1', 'v', 'mu1', 'mu2', 'diag_value', 'rank_m', 'rank_mmt',
    'multiplicity_mu1', 'multiplicity_mu2', 'kernel_dim', 'oracle_checked',
)
