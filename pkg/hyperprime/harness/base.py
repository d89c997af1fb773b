# hyperprime/harness/base.py
import logging
from typing import Any, Callable, Dict, Iterable, List, Optional

from hyperprime.core.errors import UnknownLabel
from hyperprime.schemas.harness import PropertyResult, PropertyStatus

logger = logging.getLogger(__name__)

THEOREM_IDS = (
    "prime-definitions-agree",
    "classical-ideal-form",
    "classical-saturation-form",
    "phi-ideal-form",
    "phi-empty-is-classical",
    "phi-zero-is-weakly",
    "classical-implies-weakly",
    "weakly-implies-phi",
    "phi-monotone",
    "weakly-without-zeros-is-classical",
    "colon-intersection",
    "colon-monotone",
    "generated-ideal-minimal",
    "enumeration-matches-oracle",
    "projection-kernel",
    "construction-verifies",
    "weakly-lifts-through-quotient",
    "weakly-descends-to-quotient",
    "phi-descends-to-quotient",
    "phi-quotient-weakly",
    "phi-lifts-from-quotient",
    "phi-lifts-via-weakly-quotient",
    "phi-iff-weakly-modulo-phi",
    "weakly-epimorphic-image",
    "weakly-monomorphic-preimage",
    "phi-epimorphic-preimage",
    "phi-epimorphic-image",
    "weakly-product-same-ring",
    "classical-product-ring-chain",
    "phi-product-zero-column",
    "phi-product-full-second",
    "phi-product-components",
    "weakly-colon-cover",
    "phi-colon-cover",
    "weakly-faithful-scalar-collapse",
    "phi-scalar-collapse-forward",
    "phi-scalar-collapse-converse",
    "ternary-zero-free-pair",
    "ternary-free-zero-ideals",
    "maximal-avoiding-set-is-classical",
    "maximal-intersection-descends",
    "multiplication-submodule-form",
)


class Tally:
    """Instance counts and the first failing witness of one property on one structure."""

    def __init__(self, theorem: str, structure: str, verified: bool):
        self.theorem = theorem
        self.structure = structure
        self.verified = verified
        self.instances = 0
        self.vacuous = 0
        self.witness: Optional[Dict[str, Any]] = None
        self.skip_reason: Optional[str] = None

    def check(self, premise: bool, conclusion: bool, **witness: Any) -> None:
        if not premise:
            self.vacuous += 1
            return
        self.instances += 1
        if not conclusion and self.witness is None:
            self.witness = witness

    def skip(self, reason: str) -> None:
        if self.skip_reason is None:
            self.skip_reason = reason

    def result(self) -> PropertyResult:
        if self.witness is not None:
            status = PropertyStatus.FAIL
        elif self.instances:
            status = PropertyStatus.PASS
        elif self.skip_reason is not None and not self.vacuous:
            status = PropertyStatus.SKIPPED
        else:
            status = PropertyStatus.VACUOUS
        return PropertyResult(
            theorem=self.theorem,
            structure=self.structure,
            status=status,
            witness=self.witness,
            reason=self.skip_reason,
            instances=self.instances,
            verified=self.verified,
        )


class Recorder:
    """Collects results, restricted to a selection of theorem ids when one is given."""

    def __init__(self, selected: Optional[Iterable[str]] = None):
        self.selected = None
        if selected is not None:
            self.selected = set(selected)
            unknown = sorted(self.selected - set(THEOREM_IDS))
            if unknown:
                raise UnknownLabel(f"unknown theorem id(s): {', '.join(unknown)}")
        self.results: List[PropertyResult] = []

    def wants(self, theorem: str) -> bool:
        return self.selected is None or theorem in self.selected

    def run(self, theorem: str, structure: str, verified: bool, body: Callable[[Tally], None]) -> None:
        if not self.wants(theorem):
            return
        tally = Tally(theorem, structure, verified)
        body(tally)
        result = tally.result()
        if result.status == PropertyStatus.FAIL:
            log = logger.warning if result.verified else logger.debug
            log("%s fails on %s: %s", theorem, structure, result.witness)
        self.results.append(result)
