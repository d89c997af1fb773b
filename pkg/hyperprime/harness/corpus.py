# hyperprime/harness/corpus.py
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from hyperprime.engine.axioms import axioms
from hyperprime.engine.construct import construct
from hyperprime.engine.subobjects import subobjects
from hyperprime.formats.structure_file import load_structures
from hyperprime.models.structures import Hypermodule, Hyperring
from hyperprime.schemas.axiom import AxiomReport

logger = logging.getLogger(__name__)


@dataclass
class CorpusEntry:
    id: str
    module: Hypermodule
    ring_report: AxiomReport
    report: AxiomReport
    origin: str  # file, quotient, product, product-ring
    parents: Tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.ring_report.ok and self.report.ok


@dataclass
class ProductInstance:
    kind: str  # same-ring or product-ring
    left: CorpusEntry
    right: CorpusEntry
    product: CorpusEntry


@dataclass
class Corpus:
    entries: List[CorpusEntry] = field(default_factory=list)
    products: List[ProductInstance] = field(default_factory=list)

    def get(self, entry_id: str) -> Optional[CorpusEntry]:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        return None

    @property
    def ids(self) -> List[str]:
        return [entry.id for entry in self.entries]


def _entry(entry_id: str, module: Hypermodule, origin: str, parents: Tuple[str, ...] = ()) -> CorpusEntry:
    ring_report = axioms.verify_ring_axioms(module.ring)
    report = axioms.verify_module_axioms(module, check_ring=False)
    entry = CorpusEntry(entry_id, module, ring_report, report, origin, parents)
    logger.debug("corpus entry %s (%s): verified=%s", entry_id, origin, entry.verified)
    return entry


def load_sources(directory: Path) -> List[Tuple[str, List[Hypermodule]]]:
    """Modules of every *.hyp file under `directory`, keyed by file stem."""
    sources = []
    for path in sorted(Path(directory).glob("*.hyp")):
        _, modules = load_structures(path)
        sources.append((path.stem, list(modules)))
    return sources


def build_corpus(sources: Sequence[Tuple[str, Sequence[Hypermodule]]], *, max_carrier: int) -> Corpus:
    """File modules, their quotients by every subhypermodule, and pairwise products."""
    corpus = Corpus()
    base: List[CorpusEntry] = []
    for stem, modules in sources:
        for module in modules:
            if module.size > max_carrier:
                logger.info("skipping %s/%s: %d elements exceeds the cap", stem, module.name, module.size)
                continue
            entry = _entry(f"{stem}/{module.name}", module, "file")
            base.append(entry)
    corpus.entries.extend(base)

    for entry in base:
        for handle in subobjects.enumerate_subhypermodules(entry.module):
            quotient, _ = construct.quotient(entry.module, handle.members, verify=False)
            corpus.entries.append(
                _entry(f"{entry.id}/[{','.join(handle.labels)}]", quotient, "quotient", (entry.id,))
            )

    rings: Dict[Tuple[int, int], Hyperring] = {}
    for i, left in enumerate(base):
        for right in base[i:]:
            m1, m2 = left.module, right.module
            if m1.size < 2 or m2.size < 2 or m1.size * m2.size > max_carrier:
                continue
            pair_id = f"{left.id}*{right.id}"
            if construct.same_ring(m1.ring, m2.ring):
                product = construct.product_same_ring(m1, m2, verify=False)
                entry = _entry(pair_id, product, "product", (left.id, right.id))
                corpus.entries.append(entry)
                corpus.products.append(ProductInstance("same-ring", left, right, entry))
            if (m1.m, m1.n) != (m2.m, m2.n) or m1.ring.size * m2.ring.size > max_carrier:
                continue
            key = (id(m1.ring), id(m2.ring))
            if key not in rings:
                rings[key] = construct.product_rings(m1.ring, m2.ring)
            product = construct.product_module_over_product_ring(m1, m2, rings[key], verify=False)
            entry = _entry(f"{pair_id}@ring", product, "product-ring", (left.id, right.id))
            corpus.entries.append(entry)
            corpus.products.append(ProductInstance("product-ring", left, right, entry))

    logger.info(
        "corpus: %d entries (%d verified), %d products",
        len(corpus.entries), sum(e.verified for e in corpus.entries), len(corpus.products),
    )
    return corpus
