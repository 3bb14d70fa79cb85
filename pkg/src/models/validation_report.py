"""
Validation report for a raw block list.
"""
from dataclasses import dataclass
from typing import List, Optional

from .design_params import DesignParams


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of checking a block list against the BIBD axioms.

    Attributes:
        ok: True iff every axiom holds
        v: Number of points
        b: Number of blocks read
        replication_counts: Blocks containing each point (empty if blocks were malformed)
        pair_counts: Pair co-occurrence matrix, diagonal = replication (empty if malformed)
        violation: Name of the first violated axiom (error class name), None when ok
        message: Human readable description of the violation
        params: Derived parameters when ok
        fisher_ok: Whether b >= v
        fisher_flagged: True when the design is trivial (k=1, lambda=0), where
            Fisher's inequality is reported but not a BIBD requirement
    """
    ok: bool
    v: int
    b: int
    replication_counts: List[int]
    pair_counts: List[List[int]]
    violation: Optional[str] = None
    message: Optional[str] = None
    params: Optional[DesignParams] = None
    fisher_ok: Optional[bool] = None
    fisher_flagged: bool = False

    def to_dict(self) -> dict:
        """
        Convert to a dictionary for JSON output.

        Returns:
            Dictionary representation of the report
        """
        return {
            'ok': self.ok,
            'v': self.v,
            'b': self.b,
            'params': self.params.to_dict() if self.params else None,
            'violation': self.violation,
            'message': self.message,
            'fisher_ok': self.fisher_ok,
            'fisher_flagged': self.fisher_flagged,
            'replication_counts': list(self.replication_counts),
            'pair_counts': [list(row) for row in self.pair_counts]
        }
