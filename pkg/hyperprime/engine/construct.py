# hyperprime/engine/construct.py
import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from hyperprime.core.errors import (
    ArityMismatch, NotHom, NotSub, QuotientAxiomFailure, RingMismatch,
)
from hyperprime.engine.axioms import axioms
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import bits, eval_action, eval_subsets, multisets, rectangle
from hyperprime.models.structures import (
    ActionTable, Coset, Element, HyperOpTable, Homomorphism, Hypermodule, Hyperring,
    SubsetHandle, SubsetRole,
)

logger = logging.getLogger(__name__)


def _pair_labels(left: Sequence[str], right: Sequence[str]) -> Tuple[Element, ...]:
    return tuple(
        Element(i * len(right) + j, f"({a},{b})")
        for i, a in enumerate(left) for j, b in enumerate(right)
    )


class Constructor:
    def same_ring(self, left: Hyperring, right: Hyperring) -> bool:
        """Extensional equality of rings, ignoring names."""
        if left is right:
            return True
        return (
            left.m == right.m and left.n == right.n
            and left.labels == right.labels
            and left.zero == right.zero and left.one == right.one
            and left.f_prime == right.f_prime and left.g_prime == right.g_prime
        )

    def _reverify(self, module: Hypermodule, *sources: Hypermodule) -> None:
        report = axioms.verify_module_axioms(module, check_ring=False)
        if report.ok and report.ring_verified:
            return
        sources_ok = all(
            axioms.verify_module_axioms(s, check_ring=False).ok
            and axioms.verify_ring_axioms(s.ring).ok
            for s in sources
        )
        if sources_ok:
            logger.warning(
                "%s fails axioms although its inputs pass: %s",
                module.name, [c.axiom for c in report.failures()],
            )
        else:
            logger.debug("%s built from inputs that fail axioms; left unverified", module.name)

    # --- quotients ---

    def cosets(self, module: Hypermodule, subset: int) -> Tuple[List[Coset], List[int]]:
        """Distinct cosets f(a, N, 0^(m-2)) in order of first representative, and a -> coset index."""
        pad = [module.zero_mask] * (module.m - 2)
        distinct: List[Coset] = []
        position: Dict[int, int] = {}
        coset_of: List[int] = []
        for a in range(module.size):
            members = eval_subsets(module.f, [1 << a, subset] + pad)
            if members not in position:
                position[members] = len(distinct)
                distinct.append(Coset(representative=a, members=members))
            coset_of.append(position[members])
        return distinct, coset_of

    def quotient(self, module: Hypermodule, subset: int, *, verify: bool = True) -> Tuple[Hypermodule, Homomorphism]:
        if not subobjects.is_subhypermodule(module, subset):
            raise NotSub(f"{module.format_mask(subset)} is not a subhypermodule of {module.name}")
        distinct, coset_of = self.cosets(module, subset)
        k = len(distinct)
        representatives = [0] * k
        for a, c in enumerate(coset_of):
            representatives[c] |= 1 << a

        def to_cosets(mask: int) -> int:
            out = 0
            for x in bits(mask):
                out |= 1 << coset_of[x]
            return out

        f_entries = {
            key: to_cosets(eval_subsets(module.f, [representatives[c] for c in key]))
            for key in combinations_with_replacement(range(k), module.m)
        }
        g_entries = {
            (scalars, c): to_cosets(eval_action(module.g, [1 << r for r in scalars], representatives[c]))
            for scalars in multisets(module.ring.size, module.n - 1)
            for c in range(k)
        }
        carrier = tuple(
            Element(i, "[" + ",".join(module.labels_of_mask(coset.members)) + "]")
            for i, coset in enumerate(distinct)
        )
        quotient = Hypermodule(
            name=f"{module.name}/[{','.join(module.labels_of_mask(subset))}]",
            ring=module.ring,
            carrier=carrier,
            f=HyperOpTable(module.m, k, f_entries),
            g=ActionTable(module.n - 1, module.ring.size, k, g_entries),
            zero=carrier[coset_of[module.zero.index]],
            unital=module.unital,
        )
        projection = Homomorphism(module, quotient, tuple(coset_of), cosets=tuple(distinct))
        if verify:
            report = axioms.verify_module_axioms(quotient, check_ring=False)
            source_ok = axioms.verify_module_axioms(module, check_ring=False).ok and report.ring_verified
            if not report.ok:
                if source_ok:
                    first = report.failures()[0]
                    raise QuotientAxiomFailure(
                        f"{quotient.name} fails {first.axiom}: {first.detail}", report
                    )
                logger.warning("%s fails axioms and so does its source; returned unverified", quotient.name)
        return quotient, projection

    def lift(self, projection: Homomorphism, subset: int) -> SubsetHandle:
        """Q/N as a subset of M/N."""
        return self.image(projection, subset)

    # --- products ---

    def product_same_ring(self, left: Hypermodule, right: Hypermodule, *, verify: bool = True) -> Hypermodule:
        if not self.same_ring(left.ring, right.ring):
            raise RingMismatch(f"{left.name} and {right.name} are over different rings")
        k2 = right.size
        size = left.size * k2
        f_entries = {}
        for key in combinations_with_replacement(range(size), left.m):
            f_entries[key] = rectangle(
                left.f.lookup([p // k2 for p in key]), right.f.lookup([p % k2 for p in key]), k2
            )
        g_entries = {}
        for scalars in multisets(left.ring.size, left.n - 1):
            for p in range(size):
                g_entries[(scalars, p)] = rectangle(
                    left.g.entries[(scalars, p // k2)], right.g.entries[(scalars, p % k2)], k2
                )
        carrier = _pair_labels(left.labels, right.labels)
        product = Hypermodule(
            name=f"{left.name}*{right.name}",
            ring=left.ring,
            carrier=carrier,
            f=HyperOpTable(left.m, size, f_entries),
            g=ActionTable(left.n - 1, left.ring.size, size, g_entries),
            zero=carrier[left.zero.index * k2 + right.zero.index],
            unital=left.unital and right.unital,
        )
        if verify:
            self._reverify(product, left, right)
        return product

    def product_rings(self, left: Hyperring, right: Hyperring) -> Hyperring:
        if (left.m, left.n) != (right.m, right.n):
            raise ArityMismatch(
                f"{left.name} is ({left.m},{left.n}) but {right.name} is ({right.m},{right.n})"
            )
        k2 = right.size
        size = left.size * k2
        f_entries = {
            key: rectangle(left.f_prime.lookup([p // k2 for p in key]), right.f_prime.lookup([p % k2 for p in key]), k2)
            for key in combinations_with_replacement(range(size), left.m)
        }
        g_entries = {
            key: 1 << (left.multiply([p // k2 for p in key]) * k2 + right.multiply([p % k2 for p in key]))
            for key in combinations_with_replacement(range(size), left.n)
        }
        carrier = _pair_labels(left.labels, right.labels)
        return Hyperring(
            name=f"{left.name}*{right.name}",
            m=left.m, n=left.n,
            carrier=carrier,
            f_prime=HyperOpTable(left.m, size, f_entries),
            g_prime=HyperOpTable(left.n, size, g_entries),
            zero=carrier[left.zero.index * k2 + right.zero.index],
            one=carrier[left.one.index * k2 + right.one.index],
        )

    def product_module_over_product_ring(
        self, left: Hypermodule, right: Hypermodule, ring: Optional[Hyperring] = None, *, verify: bool = True
    ) -> Hypermodule:
        ring = ring or self.product_rings(left.ring, right.ring)
        s2 = right.ring.size
        k2 = right.size
        size = left.size * k2
        g_entries = {}
        for scalars in multisets(ring.size, ring.n - 1):
            first = tuple(sorted(s // s2 for s in scalars))
            second = tuple(sorted(s % s2 for s in scalars))
            for p in range(size):
                g_entries[(scalars, p)] = rectangle(
                    left.g.entries[(first, p // k2)], right.g.entries[(second, p % k2)], k2
                )
        f_entries = {
            key: rectangle(left.f.lookup([p // k2 for p in key]), right.f.lookup([p % k2 for p in key]), k2)
            for key in combinations_with_replacement(range(size), ring.m)
        }
        carrier = _pair_labels(left.labels, right.labels)
        product = Hypermodule(
            name=f"{left.name}*{right.name}",
            ring=ring,
            carrier=carrier,
            f=HyperOpTable(ring.m, size, f_entries),
            g=ActionTable(ring.n - 1, ring.size, size, g_entries),
            zero=carrier[left.zero.index * k2 + right.zero.index],
            unital=left.unital and right.unital,
        )
        if verify:
            self._reverify(product, left, right)
        return product

    # --- homomorphisms ---

    def check_homomorphism(self, mapping: Sequence[int], source: Hypermodule, target: Hypermodule) -> Homomorphism:
        if not self.same_ring(source.ring, target.ring):
            raise RingMismatch(f"{source.name} and {target.name} are over different rings")
        if len(mapping) != source.size or any(not 0 <= v < target.size for v in mapping):
            raise NotHom(f"map must send every element of {source.name} into {target.name}")
        h = Homomorphism(source, target, tuple(mapping))
        for key in combinations_with_replacement(range(source.size), source.m):
            lhs = h.apply(source.f.entries[key])
            rhs = target.f.lookup([mapping[a] for a in key])
            if lhs != rhs:
                raise NotHom(
                    f"h(f{source.format_tuple(key)})={target.format_mask(lhs)} but "
                    f"f{target.format_tuple([mapping[a] for a in key])}={target.format_mask(rhs)}"
                )
        for scalars in multisets(source.ring.size, source.n - 1):
            for a in range(source.size):
                lhs = h.apply(source.g.entries[(scalars, a)])
                rhs = target.g.entries[(scalars, mapping[a])]
                if lhs != rhs:
                    raise NotHom(
                        f"h(g({','.join(source.ring.labels[r] for r in scalars)}|{source.labels[a]}))="
                        f"{target.format_mask(lhs)} but g(..|{target.labels[mapping[a]]})={target.format_mask(rhs)}"
                    )
        return h

    def _handle(self, module: Hypermodule, mask: int) -> SubsetHandle:
        role = SubsetRole.SUBSET
        if mask and subobjects.is_subhypermodule(module, mask):
            role = SubsetRole.SUBHYPERMODULE
        return SubsetHandle(module, mask, role)

    def image(self, h: Homomorphism, subset: int) -> SubsetHandle:
        return self._handle(h.target, h.apply(subset))

    def preimage(self, h: Homomorphism, subset: int) -> SubsetHandle:
        return self._handle(h.source, h.pull(subset))

    def kernel(self, h: Homomorphism) -> SubsetHandle:
        return self.preimage(h, h.target.zero_mask)

    def injection(self, left: Hypermodule, right: Hypermodule, product: Hypermodule, *, side: int = 0) -> Homomorphism:
        """a -> (a, 0) for side 0, b -> (0, b) for side 1."""
        k2 = right.size
        if side == 0:
            mapping = [a * k2 + right.zero.index for a in range(left.size)]
            return self.check_homomorphism(mapping, left, product)
        mapping = [left.zero.index * k2 + b for b in range(right.size)]
        return self.check_homomorphism(mapping, right, product)

    def projection_of_product(self, left: Hypermodule, right: Hypermodule, product: Hypermodule, *, side: int = 0) -> Homomorphism:
        k2 = right.size
        if side == 0:
            return self.check_homomorphism([p // k2 for p in range(product.size)], product, left)
        return self.check_homomorphism([p % k2 for p in range(product.size)], product, right)

    # --- restriction ---

    def restrict(self, module: Hypermodule, subset: int) -> Hypermodule:
        """A subhypermodule viewed as a hypermodule in its own right."""
        if not subobjects.is_subhypermodule(module, subset):
            raise NotSub(f"{module.format_mask(subset)} is not a subhypermodule of {module.name}")
        members = bits(subset)
        position = {a: i for i, a in enumerate(members)}

        def reindex(mask: int) -> int:
            return sum(1 << position[a] for a in bits(mask))

        f_entries = {
            key: reindex(module.f.lookup([members[i] for i in key]))
            for key in combinations_with_replacement(range(len(members)), module.m)
        }
        g_entries = {
            (scalars, i): reindex(module.g.entries[(scalars, a)])
            for scalars in multisets(module.ring.size, module.n - 1)
            for i, a in enumerate(members)
        }
        carrier = tuple(Element(i, module.labels[a]) for i, a in enumerate(members))
        return Hypermodule(
            name=f"{module.name}@[{','.join(module.labels_of_mask(subset))}]",
            ring=module.ring,
            carrier=carrier,
            f=HyperOpTable(module.m, len(members), f_entries),
            g=ActionTable(module.n - 1, module.ring.size, len(members), g_entries),
            zero=carrier[position[module.zero.index]],
            unital=module.unital,
        )


construct = Constructor()
