# hyperprime/engine/subobjects.py
import logging
from itertools import combinations_with_replacement
from typing import List, Optional

from hyperprime.core.config import get_settings
from hyperprime.core.errors import (
    CapExceeded, EmptySubset, GeneratedNotIdeal, OutOfCarrier, ZeroElement,
)
from hyperprime.engine.tables import bits, canonical_key, is_subset, multisets
from hyperprime.models.structures import (
    CarrierMixin, Hypermodule, Hyperring, SubsetHandle, SubsetRole,
)

logger = logging.getLogger(__name__)


def _check_subset(s: CarrierMixin, mask: int) -> None:
    if mask == 0:
        raise EmptySubset(f"empty subset of {s.name}")
    if mask & ~s.full_mask:
        raise OutOfCarrier(f"subset leaves the carrier of {s.name}")


class SubobjectEngine:
    # --- recognition ---

    def _closed_subhypergroup(self, s: CarrierMixin, mask: int) -> bool:
        if not mask & s.zero_mask:
            return False
        table = s.addition
        for key in combinations_with_replacement(bits(mask), table.arity):
            if not is_subset(table.entries[key], mask):
                return False
        inverses = s.inverse_masks
        return all(inverses[x] & mask for x in bits(mask))

    def is_hyperideal(self, ring: Hyperring, subset: int) -> bool:
        _check_subset(ring, subset)
        if not self._closed_subhypergroup(ring, subset):
            return False
        for rest in multisets(ring.size, ring.n - 1):
            for x in bits(subset):
                if not subset >> ring.multiply(rest + (x,)) & 1:
                    return False
        return True

    def is_subhypermodule(self, module: Hypermodule, subset: int) -> bool:
        _check_subset(module, subset)
        if not self._closed_subhypergroup(module, subset):
            return False
        entries = module.g.entries
        for scalars in multisets(module.ring.size, module.n - 1):
            for a in bits(subset):
                if not is_subset(entries[(scalars, a)], subset):
                    return False
        return True

    # --- enumeration ---

    def _closure(self, s: CarrierMixin, closed: int, new: int, scalar_image) -> int:
        """Smallest set containing the closed set `closed` and `new` that is closed under f and the scalars."""
        table = s.addition
        current = closed | new
        pending = bits(new & ~closed)
        while pending:
            e = pending.pop()
            gained = scalar_image(e)
            for rest in combinations_with_replacement(bits(current), table.arity - 1):
                gained |= table.lookup(rest + (e,))
            extra = gained & ~current
            if extra:
                current |= extra
                pending.extend(bits(extra))
        return current

    def _closed_sets(self, s: CarrierMixin, scalar_image) -> List[int]:
        start = self._closure(s, 0, s.zero_mask, scalar_image)
        seen = {start}
        frontier = [start]
        while frontier:
            c = frontier.pop()
            for x in bits(s.full_mask & ~c):
                d = self._closure(s, c, 1 << x, scalar_image)
                if d not in seen:
                    seen.add(d)
                    frontier.append(d)
        return sorted(seen, key=canonical_key)

    def _ring_scalar_image(self, ring: Hyperring):
        tuples = list(multisets(ring.size, ring.n - 1))

        def image(x: int) -> int:
            out = 0
            for rest in tuples:
                out |= 1 << ring.multiply(rest + (x,))
            return out
        return image

    def _module_scalar_image(self, module: Hypermodule):
        tuples = list(multisets(module.ring.size, module.n - 1))
        entries = module.g.entries

        def image(a: int) -> int:
            out = 0
            for scalars in tuples:
                out |= entries[(scalars, a)]
            return out
        return image

    def enumerate_hyperideals(self, ring: Hyperring) -> List[SubsetHandle]:
        closed = self._closed_sets(ring, self._ring_scalar_image(ring))
        return [
            SubsetHandle(ring, mask, SubsetRole.HYPERIDEAL)
            for mask in closed if self.is_hyperideal(ring, mask)
        ]

    def enumerate_subhypermodules(self, module: Hypermodule) -> List[SubsetHandle]:
        closed = self._closed_sets(module, self._module_scalar_image(module))
        return [
            SubsetHandle(module, mask, SubsetRole.SUBHYPERMODULE)
            for mask in closed if self.is_subhypermodule(module, mask)
        ]

    def _naive(self, s: CarrierMixin, predicate, role: SubsetRole) -> List[SubsetHandle]:
        cap = get_settings().HYPERPRIME_ORACLE_CAP
        if s.size > cap:
            raise CapExceeded(f"naive enumeration of {s.name} ({s.size} elements) exceeds the cap of {cap}")
        masks = [mask for mask in range(1, s.full_mask + 1) if predicate(s, mask)]
        return [SubsetHandle(s, mask, role) for mask in sorted(masks, key=canonical_key)]

    def naive_hyperideals(self, ring: Hyperring) -> List[SubsetHandle]:
        return self._naive(ring, self.is_hyperideal, SubsetRole.HYPERIDEAL)

    def naive_subhypermodules(self, module: Hypermodule) -> List[SubsetHandle]:
        return self._naive(module, self.is_subhypermodule, SubsetRole.SUBHYPERMODULE)

    def maximal_subhypermodules(self, module: Hypermodule) -> List[SubsetHandle]:
        proper = [h for h in self.enumerate_subhypermodules(module) if h.members != module.full_mask]
        return [
            h for h in proper
            if not any(other.members != h.members and is_subset(h.members, other.members) for other in proper)
        ]

    # --- generated hyperideals ---

    def generated_hyperideal(self, ring: Hyperring, x: int) -> SubsetHandle:
        if not 0 <= x < ring.size:
            raise OutOfCarrier(f"{x} is not an element of {ring.name}")
        pad = (ring.one.index,) * (ring.n - 2)
        mask = 0
        for r in range(ring.size):
            mask |= 1 << ring.multiply((r, x) + pad)
        if not self.is_hyperideal(ring, mask):
            raise GeneratedNotIdeal(
                f"<{ring.labels[x]}> = {ring.format_mask(mask)} is not a hyperideal of {ring.name}"
            )
        return SubsetHandle(ring, mask, SubsetRole.HYPERIDEAL)

    # --- colon sets ---

    def _ring_handle(self, ring: Hyperring, mask: int) -> SubsetHandle:
        role = SubsetRole.HYPERIDEAL if mask and self.is_hyperideal(ring, mask) else SubsetRole.SUBSET
        return SubsetHandle(ring, mask, role)

    def colon_mask(self, module: Hypermodule, target: int, elements: int) -> int:
        """{r | g(r, 1^(n-2), x) ⊆ target for every x in elements}."""
        ring = module.ring
        out = 0
        members = bits(elements)
        for r in range(ring.size):
            if all(is_subset(module.unit_action(r, x), target) for x in members):
                out |= 1 << r
        return out

    def colon_sn(self, module: Hypermodule, subset: int) -> SubsetHandle:
        """S_N: scalars sending all of M into N."""
        return self._ring_handle(module.ring, self.colon_mask(module, subset, module.full_mask))

    def colon_na(self, module: Hypermodule, subset: int, a: int) -> SubsetHandle:
        """N_a: scalars sending a into N."""
        if not 0 <= a < module.size:
            raise OutOfCarrier(f"{a} is not an element of {module.name}")
        return self._ring_handle(module.ring, self.colon_mask(module, subset, 1 << a))

    def colon_set(self, module: Hypermodule, subset: int, elements: int) -> SubsetHandle:
        """N_X = intersection of N_x over x in X."""
        _check_subset(module, elements)
        return self._ring_handle(module.ring, self.colon_mask(module, subset, elements))

    # --- torsion ---

    def torsion_mask(self, module: Hypermodule, a: int) -> int:
        ring = module.ring
        out = ring.zero_mask
        for r in range(ring.size):
            if module.unit_action(r, a) & module.zero_mask:
                out |= 1 << r
        return out

    def torsion_fm(self, module: Hypermodule, a: int) -> SubsetHandle:
        """F_a with 0 adjoined."""
        if a == module.zero.index:
            raise ZeroElement("torsion scalars are defined for nonzero elements only")
        return self._ring_handle(module.ring, self.torsion_mask(module, a))

    def torsion_set(self, module: Hypermodule, elements: int) -> SubsetHandle:
        """Intersection of F_x over x in X, with F_0 read as R."""
        _check_subset(module, elements)
        out = module.ring.full_mask
        for x in bits(elements):
            if x != module.zero.index:
                out &= self.torsion_mask(module, x)
        return self._ring_handle(module.ring, out)

    def is_faithful(self, module: Hypermodule) -> bool:
        zero_r = module.ring.zero_mask
        return all(
            self.torsion_mask(module, a) == zero_r
            for a in range(module.size) if a != module.zero.index
        )


subobjects = SubobjectEngine()
