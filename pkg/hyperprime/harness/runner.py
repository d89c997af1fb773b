# hyperprime/harness/runner.py
import logging
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple

from hyperprime.core.config import get_settings
from hyperprime.harness import colon, equivalences, misc, transport, zeros
from hyperprime.harness.base import Recorder
from hyperprime.harness.context import CorpusView
from hyperprime.harness.corpus import Corpus, build_corpus, load_sources
from hyperprime.models.structures import Hypermodule
from hyperprime.schemas.harness import HarnessReport

logger = logging.getLogger(__name__)

# Each needs at least one non-vacuous pass on a verified structure.
REQUIRED_COVERAGE = (
    "classical-ideal-form",
    "weakly-lifts-through-quotient",
    "weakly-epimorphic-image",
    "classical-product-ring-chain",
    "phi-descends-to-quotient",
    "phi-ideal-form",
)

FAMILIES = (
    ("classifier equivalences", equivalences.check_classifier_equivalences),
    ("sub-object invariants", equivalences.check_subobject_invariants),
    ("quotients", transport.check_quotient_theorems),
    ("homomorphisms", transport.check_hom_theorems),
    ("products", transport.check_product_theorems),
    ("colon containments", colon.check_colon_containments),
    ("classical zeros", zeros.check_zero_theorems),
    ("maximality and multiplication", misc.check_misc),
)


class TheoremHarness:
    def build_corpus(
        self, sources: Sequence[Tuple[str, Sequence[Hypermodule]]], *, max_carrier: Optional[int] = None
    ) -> Corpus:
        cap = max_carrier or get_settings().HYPERPRIME_MAX_CARRIER
        return build_corpus(sources, max_carrier=cap)

    def load_corpus(self, directory: Path, *, max_carrier: Optional[int] = None) -> Corpus:
        return self.build_corpus(load_sources(directory), max_carrier=max_carrier)

    def run(self, corpus: Corpus, *, theorems: Optional[Iterable[str]] = None) -> HarnessReport:
        rec = Recorder(theorems)
        view = CorpusView(corpus)
        for family, check in FAMILIES:
            before = len(rec.results)
            check(view, rec)
            logger.info("%s: %d results", family, len(rec.results) - before)
        results = sorted(rec.results, key=lambda r: (r.theorem, r.structure))
        return HarnessReport(results=results)


harness = TheoremHarness()
