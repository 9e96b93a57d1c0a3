from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: tuple = ()

    def to_dict(self) -> dict[str, Any]:
        return {"axiom": self.axiom, "message": self.message, "witness": [str(w) for w in self.witness]}


@dataclass
class Report:
    """Collected axiom violations for one subject.

    An empty report means every checked equation holds.
    """

    subject: str = ""
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, message: str, *witness: Any) -> None:
        self.violations.append(Violation(axiom, message, tuple(witness)))

    def expect(self, condition: bool, axiom: str, message: str, *witness: Any) -> bool:
        self.checked += 1
        if not condition:
            self.add(axiom, message, *witness)
        return condition

    def extend(self, other: Report, prefix: str = "") -> Report:
        for v in other.violations:
            axiom = f"{prefix}.{v.axiom}" if prefix else v.axiom
            self.violations.append(Violation(axiom, v.message, v.witness))
        self.checked += other.checked
        return self

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def has(self, axiom: str) -> bool:
        """True if some violation is named ``axiom`` (or ends with ``.axiom``)."""
        return any(v.axiom == axiom or v.axiom.endswith("." + axiom) for v in self.violations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }

    def summary(self, limit: int = 10) -> str:
        head = f"{self.subject or 'report'}: {'OK' if self.ok else 'FAIL'} ({self.checked} checks, {len(self.violations)} violations)"
        lines = [head]
        for v in self.violations[:limit]:
            wit = ", ".join(str(w) for w in v.witness)
            lines.append(f"  [{v.axiom}] {v.message}" + (f" -- witness: {wit}" if wit else ""))
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.summary()
