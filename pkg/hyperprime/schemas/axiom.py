# hyperprime/schemas/axiom.py
import enum
from pydantic import BaseModel, Field
from typing import Optional, List


class StructureKind(str, enum.Enum):
    RING = "ring"
    MODULE = "module"


class AxiomCheck(BaseModel):
    axiom: str
    group: str
    passed: bool
    witness: Optional[List[str]] = None  # element labels
    detail: Optional[str] = None


class AxiomReport(BaseModel):
    structure: str
    kind: StructureKind
    unital: Optional[bool] = None
    ring_verified: Optional[bool] = None  # modules only
    checks: List[AxiomCheck] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]

    def groups(self) -> List[str]:
        seen: List[str] = []
        for check in self.checks:
            if check.group not in seen:
                seen.append(check.group)
        return seen

    def groups_passed(self) -> int:
        failed = {check.group for check in self.failures()}
        return sum(1 for group in self.groups() if group not in failed)

    def summary(self) -> str:
        total = len(self.groups())
        if self.kind == StructureKind.RING:
            return f"ring {self.structure}: {self.groups_passed()}/{total} axiom groups pass"
        status = "pass" if self.ok else f"{self.groups_passed()}/{total} axiom groups pass"
        notes = f"unital={'true' if self.unital else 'false'}"
        if self.ring_verified is False:
            notes += "; ring fails axioms"
        return f"module {self.structure}: {status} ({notes})"
