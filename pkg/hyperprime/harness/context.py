# hyperprime/harness/context.py
"""Per-module memo of everything the property checks ask for more than once."""
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from hyperprime.core.errors import NotProper, NotSub, PhiNotSub
from hyperprime.engine.axioms import axioms
from hyperprime.engine.classify import ClassKind, classify
from hyperprime.engine.construct import construct
from hyperprime.engine.phi import PHI_REGISTRY, PhiFunction, lift_phi
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import bits, eval_action, eval_subsets, multisets
from hyperprime.models.structures import Homomorphism, Hypermodule


class ModuleContext:
    def __init__(self, module: Hypermodule, entry_id: str, verified: bool):
        self.module = module
        self.id = entry_id
        self.verified = verified
        self.ring = module.ring
        self.n = module.n
        self.one = 1 << module.ring.one.index
        self.subs: List[int] = [h.members for h in subobjects.enumerate_subhypermodules(module)]
        self.proper: List[int] = [q for q in self.subs if q != module.full_mask]
        self.ideals: List[int] = [h.members for h in subobjects.enumerate_hyperideals(module.ring)]
        self.ideal_tuples: List[Tuple[int, ...]] = list(combinations_with_replacement(self.ideals, self.n - 1))
        self.scalar_tuples: List[Tuple[int, ...]] = list(multisets(self.ring.size, self.n - 1))
        self.unit = classify.unit_table(module)
        self._action: Dict[Tuple[Tuple[int, ...], int], int] = {}
        self._join: Dict[Tuple[int, int], int] = {}
        self._colon: Dict[Tuple[int, int], int] = {}
        self._torsion: Dict[int, int] = {}
        self._verdicts: Dict[Tuple[int, str, Optional[str]], Optional[bool]] = {}
        self._phi_values: Dict[Tuple[str, int], Optional[int]] = {}
        self._quotients: Dict[int, "QuotientView"] = {}
        self._saturation: Optional[List[Tuple[Tuple[int, ...], int]]] = None

    # --- labels for witnesses ---

    def labels(self, mask: int) -> List[str]:
        return self.module.labels_of_mask(mask)

    def scalar_labels(self, scalars: Sequence[int]) -> List[str]:
        return [self.ring.labels[r] for r in scalars]

    def ideal_labels(self, ideals: Sequence[int]) -> List[List[str]]:
        return [self.ring.labels_of_mask(i) for i in ideals]

    # --- cached evaluations ---

    def action(self, scalar_sets: Tuple[int, ...], elements: int) -> int:
        """g(scalar_sets, elements) on subsets."""
        key = (scalar_sets, elements)
        if key not in self._action:
            self._action[key] = eval_action(self.module.g, list(scalar_sets), elements)
        return self._action[key]

    def unit_action(self, scalars: int, elements: int) -> int:
        """g(scalars, 1^(n-2), elements) on subsets."""
        return self.action((scalars,) + (self.one,) * (self.n - 2), elements)

    def join(self, left: int, right: int) -> int:
        """f(left, right, 0^(m-2))."""
        key = (left, right)
        if key not in self._join:
            pad = [self.module.zero_mask] * (self.module.m - 2)
            self._join[key] = eval_subsets(self.module.f, [left, right] + pad)
        return self._join[key]

    def colon(self, target: int, elements: int) -> int:
        key = (target, elements)
        if key not in self._colon:
            self._colon[key] = subobjects.colon_mask(self.module, target, elements)
        return self._colon[key]

    def torsion(self, elements: int) -> int:
        """∩ F_x over x in elements, F_0 = R."""
        if elements not in self._torsion:
            out = self.ring.full_mask
            for x in bits(elements):
                if x != self.module.zero.index:
                    out &= subobjects.torsion_mask(self.module, x)
            self._torsion[elements] = out
        return self._torsion[elements]

    # --- classification ---

    def verdict(self, subset: int, kind: ClassKind, phi: Optional[PhiFunction] = None) -> Optional[bool]:
        """None when `subset` is not a proper subhypermodule or φ leaves the lattice."""
        key = (subset, kind.value, phi.name if phi else None)
        if key not in self._verdicts:
            try:
                self._verdicts[key] = classify.counterexample(self.module, subset, kind, phi) is None
            except (NotProper, NotSub, PhiNotSub):
                self._verdicts[key] = None
        return self._verdicts[key]

    def cp(self, subset: int) -> Optional[bool]:
        return self.verdict(subset, ClassKind.CLASSICAL)

    def wcp(self, subset: int) -> Optional[bool]:
        return self.verdict(subset, ClassKind.WEAKLY)

    def phi_cp(self, name: str, subset: int) -> Optional[bool]:
        return self.verdict(subset, ClassKind.PHI, PHI_REGISTRY[name])

    def phi_value(self, name: str, subset: int) -> Optional[int]:
        key = (name, subset)
        if key not in self._phi_values:
            try:
                self._phi_values[key] = PHI_REGISTRY[name].apply(self.module, subset)
            except PhiNotSub:
                self._phi_values[key] = None
        return self._phi_values[key]

    def saturation_triples(self) -> List[Tuple[Tuple[int, ...], int]]:
        """For every (N1, I, N2): the sets f(N1, g(I_i,1,N2), 0) per distinct I_i, and f(N1, g(I,N2), 0)."""
        if self._saturation is None:
            triples = []
            for ideals in self.ideal_tuples:
                distinct = sorted(set(ideals))
                for n2 in self.subs:
                    whole = self.action(ideals, n2)
                    singles = [self.unit_action(i, n2) for i in distinct]
                    for n1 in self.subs:
                        triples.append((tuple(self.join(n1, x) for x in singles), self.join(n1, whole)))
            self._saturation = triples
        return self._saturation

    # --- quotients ---

    def quotient(self, subset: int) -> "QuotientView":
        if subset not in self._quotients:
            self._quotients[subset] = QuotientView(self, subset)
        return self._quotients[subset]


class QuotientView:
    """M/N together with its projection, a context on M/N, and the lifted φ_N."""

    def __init__(self, parent: ModuleContext, subset: int):
        self.parent = parent
        self.subset = subset
        module, projection = construct.quotient(parent.module, subset, verify=False)
        self.projection: Homomorphism = projection
        report = axioms.verify_module_axioms(module, check_ring=False)
        self.context = ModuleContext(module, f"{parent.id}/[{','.join(parent.labels(subset))}]", parent.verified and report.ok)
        self._lifted: Dict[str, PhiFunction] = {}

    def lift(self, subset: int) -> int:
        return self.projection.apply(subset)

    def lifted_phi(self, name: str) -> PhiFunction:
        if name not in self._lifted:
            self._lifted[name] = lift_phi(PHI_REGISTRY[name], self.projection, self.subset)
        return self._lifted[name]


class CorpusView:
    """Contexts for every corpus entry, built on first use."""

    def __init__(self, corpus):
        self.corpus = corpus
        self._contexts: Dict[str, ModuleContext] = {}

    def context(self, entry) -> ModuleContext:
        if entry.id not in self._contexts:
            self._contexts[entry.id] = ModuleContext(entry.module, entry.id, entry.verified)
        return self._contexts[entry.id]

    @property
    def contexts(self) -> List[ModuleContext]:
        return [self.context(entry) for entry in self.corpus.entries]

    @property
    def products(self):
        return self.corpus.products
