# hyperprime/schemas/harness.py
import enum
from pydantic import BaseModel, Field
from typing import Optional, List, Dict, Any, Iterable


class PropertyStatus(str, enum.Enum):
    PASS = "pass"
    VACUOUS = "vacuous"  # premise never satisfied
    FAIL = "fail"
    SKIPPED = "skipped"


class PropertyResult(BaseModel):
    theorem: str
    structure: str
    status: PropertyStatus
    witness: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    instances: int = 0  # non-vacuous instances checked
    verified: bool = True  # structure passed verify_*; fails on unverified structures are advisory

    @property
    def blocking(self) -> bool:
        return self.status == PropertyStatus.FAIL and self.verified


class HarnessReport(BaseModel):
    results: List[PropertyResult] = Field(default_factory=list)

    def blocking_failures(self) -> List[PropertyResult]:
        return [r for r in self.results if r.blocking]

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in PropertyStatus}
        for r in self.results:
            counts[r.status.value] += 1
        return counts

    def coverage_gaps(self, required: Iterable[str]) -> List[str]:
        """Required theorem ids with no PASS result on a verified structure."""
        covered = {
            r.theorem for r in self.results
            if r.status == PropertyStatus.PASS and r.verified
        }
        return [theorem for theorem in required if theorem not in covered]
