"""
Outcome of reproducing one published example.
"""
from dataclasses import dataclass, field
from typing import Tuple

from src.errors import GoldenMismatch


@dataclass(frozen=True)
class ExampleOutcome:
    """
    Text summary and golden-data mismatches for one example.

    Attributes:
        which: Example number
        title: One-line description
        lines: Human readable report lines
        mismatches: Every recomputed value that differs from the published one
    """
    which: int
    title: str
    lines: Tuple[str, ...] = field(default_factory=tuple)
    mismatches: Tuple[GoldenMismatch, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def raise_for_mismatch(self) -> None:
        """Raise the first mismatch, if any."""
        if self.mismatches:
            raise self.mismatches[0]

    def to_text(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} mismatch(es)"
        body = [f"Example {self.which}: {self.title}", *self.lines]
        body.extend(f"  MISMATCH {m}" for m in self.mismatches)
        body.append(f"  golden data: {status}")
        return "\n".join(body) + "\n"
