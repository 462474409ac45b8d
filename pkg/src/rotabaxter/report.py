from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import Matrix, format_fraction, is_zero_vec


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    residual: tuple  # flattened rational residual

    def to_json(self):
        return {
            "axiom": self.axiom,
            "witness": list(self.witness),
            "residual": [format_fraction(x) for x in self.residual],
        }


@dataclass
class ValidationReport:
    """Verdict of an axiom check with one entry per failing basis tuple."""

    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def expect(self, axiom: str, witness: Sequence[int], residual):
        """Record a violation when the residual (vector or matrix) is nonzero."""
        if isinstance(residual, Matrix):
            flat = tuple(x for r in residual.data for x in r)
        else:
            flat = tuple(residual)
        if not is_zero_vec(flat):
            self.violations.append(Violation(axiom, tuple(witness), flat))

    def merge(self, other: "ValidationReport", prefix: str = "") -> "ValidationReport":
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.residual))
        return self

    def axioms(self):
        return sorted({v.axiom for v in self.violations})

    def to_json(self):
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


class AxiomError(ValueError):
    """Raised by checked constructors when their data violates an axiom."""

    def __init__(self, what: str, report: ValidationReport):
        first = report.violations[0] if report.violations else None
        detail = f": {first.axiom} at {first.witness}" if first else ""
        super().__init__(f"{what} is invalid{detail}")
        self.report = report
