# hyperprime/engine/classify.py
import enum
import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

from hyperprime.core.config import get_settings
from hyperprime.core.errors import (
    ArityMismatch, CapExceeded, NotMultiplication, NotProper, NotSub, PremiseFails,
)
from hyperprime.engine.phi import PhiFunction
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import bits, canonical_key, eval_action, is_subset, multisets
from hyperprime.models.structures import (
    ClassicalZeroWitness, Counterexample, Hypermodule, SubsetHandle,
)

logger = logging.getLogger(__name__)


class ClassKind(str, enum.Enum):
    PRIME = "prime"
    CLASSICAL = "classical"
    WEAKLY = "weakly"
    PHI = "phi"


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


class Classifier:
    def require_proper(self, module: Hypermodule, subset: int) -> None:
        if subset == module.full_mask:
            raise NotProper("subhypermodule must be proper")
        if not subobjects.is_subhypermodule(module, subset):
            raise NotSub(f"{module.format_mask(subset)} is not a subhypermodule of {module.name}")

    def unit_table(self, module: Hypermodule) -> List[List[int]]:
        """unit[r][a] = g(r, 1^(n-2), a)."""
        return [[module.unit_action(r, a) for a in range(module.size)] for r in range(module.ring.size)]

    def _scan(self, module: Hypermodule, subset: int, excluded: int) -> Optional[Counterexample]:
        # First (scalars, a) in canonical order with g(scalars, a) inside Q, avoiding
        # `excluded`, and no single scalar sending a into Q.
        unit = self.unit_table(module)
        entries = module.g.entries
        for scalars in multisets(module.ring.size, module.n - 1):
            for a in range(module.size):
                value = entries[(scalars, a)]
                if not is_subset(value, subset) or value & excluded:
                    continue
                if any(is_subset(unit[r][a], subset) for r in set(scalars)):
                    continue
                return Counterexample(scalars, a)
        return None

    # --- prime ---

    def _prime_counterexamples(self, module: Hypermodule, subset: int) -> Tuple[Optional[Counterexample], Optional[Counterexample]]:
        entries = module.g.entries
        scalar_set = subobjects.colon_mask(module, subset, module.full_mask)
        by_definition = by_colon = None
        for scalars in multisets(module.ring.size, module.n - 1):
            whole = 0
            for a in range(module.size):
                whole |= entries[(scalars, a)]
            for a in bits(module.full_mask & ~subset):
                if not is_subset(entries[(scalars, a)], subset):
                    continue
                if by_definition is None and not is_subset(whole, subset):
                    by_definition = Counterexample(scalars, a)
                if by_colon is None and not any(scalar_set >> r & 1 for r in scalars):
                    by_colon = Counterexample(scalars, a)
        return by_definition, by_colon

    def prime_forms(self, module: Hypermodule, subset: int) -> Tuple[bool, bool]:
        """(definition form, S_N form) of primality."""
        self.require_proper(module, subset)
        by_definition, by_colon = self._prime_counterexamples(module, subset)
        return by_definition is None, by_colon is None

    def is_prime(self, module: Hypermodule, subset: int) -> bool:
        definition, alternative = self.prime_forms(module, subset)
        if definition != alternative:
            logger.warning(
                "prime definitions disagree on %s in %s: definition=%s, S_N form=%s",
                module.format_mask(subset), module.name, definition, alternative,
            )
        return definition

    # --- classical / weakly / phi ---

    def counterexample(
        self, module: Hypermodule, subset: int, kind: ClassKind, phi: Optional[PhiFunction] = None
    ) -> Optional[Counterexample]:
        self.require_proper(module, subset)
        if kind == ClassKind.PRIME:
            return self._prime_counterexamples(module, subset)[0]
        if kind == ClassKind.CLASSICAL:
            return self._scan(module, subset, 0)
        if kind == ClassKind.WEAKLY:
            return self._scan(module, subset, module.zero_mask)
        if phi is None:
            raise ValueError("phi classification needs a phi function")
        return self._scan(module, subset, phi.apply(module, subset))

    def is_classical_prime(self, module: Hypermodule, subset: int) -> bool:
        return self.counterexample(module, subset, ClassKind.CLASSICAL) is None

    def is_weakly_classical_prime(self, module: Hypermodule, subset: int) -> bool:
        return self.counterexample(module, subset, ClassKind.WEAKLY) is None

    def is_phi_classical_prime(self, module: Hypermodule, subset: int, phi: PhiFunction) -> bool:
        return self.counterexample(module, subset, ClassKind.PHI, phi) is None

    # --- classical zeros ---

    def _zero_conditions(self, module: Hypermodule, subset: int, scalars: Tuple[int, ...], unit):
        """(admissible X, elements whose product contains 0, per-scalar 'escapes Q' sets)."""
        entries = module.g.entries
        admissible = zero_hits = 0
        for x in range(module.size):
            value = entries[(scalars, x)]
            if is_subset(value, subset):
                admissible |= 1 << x
            if value & module.zero_mask:
                zero_hits |= 1 << x
        escapes = []
        for r in sorted(set(scalars)):
            escapes.append(sum(1 << x for x in range(module.size) if not is_subset(unit[r][x], subset)))
        return admissible, zero_hits, escapes

    def find_classical_zeros(self, module: Hypermodule, subset: int) -> List[ClassicalZeroWitness]:
        self.require_proper(module, subset)
        cap = get_settings().HYPERPRIME_ZERO_SEARCH_CAP
        if module.size > cap:
            raise CapExceeded(f"classical-zero search on {module.size} elements exceeds the cap of {cap}")
        if not self.is_weakly_classical_prime(module, subset):
            logger.warning("%s is not weakly classical prime in %s", module.format_mask(subset), module.name)
        unit = self.unit_table(module)
        witnesses = []
        for scalars in multisets(module.ring.size, module.n - 1):
            admissible, zero_hits, escapes = self._zero_conditions(module, subset, scalars, unit)
            found = [
                x for x in _submasks(admissible)
                if x & zero_hits and all(x & e for e in escapes)
            ]
            witnesses += [ClassicalZeroWitness(scalars, x) for x in sorted(found, key=canonical_key)]
        return witnesses

    def has_classical_zero(
        self, module: Hypermodule, subset: int, scalars: Sequence[int], within: int, *, unit=None
    ) -> bool:
        # The conditions on X are all "meets a set", so the largest admissible X decides.
        scalars = tuple(sorted(scalars))
        unit = unit if unit is not None else self.unit_table(module)
        admissible, zero_hits, escapes = self._zero_conditions(module, subset, scalars, unit)
        x = admissible & within
        return bool(x & zero_hits) and all(x & e for e in escapes)

    def is_free_classical_zero(
        self, module: Hypermodule, subset: int, ideals: Sequence[int], within: int, *, unit=None
    ) -> bool:
        if len(ideals) != module.n - 1:
            raise ArityMismatch(f"expected {module.n - 1} hyperideals, got {len(ideals)}")
        if not is_subset(eval_action(module.g, list(ideals), within), subset):
            raise PremiseFails(
                f"g(I, {module.format_mask(within)}) is not contained in {module.format_mask(subset)}"
            )
        unit = unit if unit is not None else self.unit_table(module)
        for choice in sorted({tuple(sorted(c)) for c in product(*(bits(i) for i in ideals))}):
            if self.has_classical_zero(module, subset, choice, within, unit=unit):
                return False
        return True

    # --- torsion ---

    def is_torsion_free_element(self, module: Hypermodule, a: int, *, strict: bool = True) -> bool:
        zero_r = module.ring.zero.index
        for scalars in multisets(module.ring.size, module.n - 1):
            if zero_r in scalars:
                continue
            value = module.g.entries[(scalars, a)]
            if (value == module.zero_mask) if strict else (value & module.zero_mask):
                return False
        return True

    def is_torsion_free(self, module: Hypermodule, *, strict: bool = True) -> bool:
        return all(
            self.is_torsion_free_element(module, a, strict=strict)
            for a in range(module.size) if a != module.zero.index
        )

    # --- multiplication modules ---

    def presentation_ideal(self, module: Hypermodule, subset: int) -> SubsetHandle:
        return subobjects.colon_sn(module, subset)

    def _present(self, module: Hypermodule, scalars: int) -> int:
        if not scalars:
            return 0
        ones = [1 << module.ring.one.index] * (module.n - 2)
        return eval_action(module.g, [scalars] + ones, module.full_mask)

    def is_multiplication_module(self, module: Hypermodule) -> bool:
        for handle in subobjects.enumerate_subhypermodules(module):
            scalars = subobjects.colon_mask(module, handle.members, module.full_mask)
            if self._present(module, scalars) != handle.members:
                return False
        return True

    def submodule_product(self, module: Hypermodule, parts: Sequence[int], a: Optional[int] = None) -> int:
        """Product of subhypermodules through their presentation ideals.

        n parts: g(g'(I_1..I_n), 1^(n-2), M); n-1 parts and a: g(I_1..I_{n-1}, a);
        one part and a: g(I_1, M^(n-2), a).
        """
        if not self.is_multiplication_module(module):
            raise NotMultiplication(f"{module.name} is not a multiplication hypermodule")
        ring = module.ring
        ideals = [subobjects.colon_mask(module, part, module.full_mask) for part in parts]
        if a is None:
            if len(parts) != module.n:
                raise ArityMismatch(f"expected {module.n} parts, got {len(parts)}")
            collapsed = 0
            for choice in product(*(bits(i) for i in ideals)):
                collapsed |= 1 << ring.multiply(choice)
            return self._present(module, collapsed)
        if len(parts) == module.n - 1:
            return eval_action(module.g, ideals, 1 << a)
        if len(parts) == 1:
            return eval_action(module.g, ideals + [ring.full_mask] * (module.n - 2), 1 << a)
        raise ArityMismatch(f"expected {module.n - 1} parts or a single part, got {len(parts)}")


classify = Classifier()
