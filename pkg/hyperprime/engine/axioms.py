# hyperprime/engine/axioms.py
import logging
import weakref
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from hyperprime.core.errors import RingInvalid
from hyperprime.engine.tables import bits, eval_subsets, multisets
from hyperprime.models.structures import CarrierMixin, HyperOpTable, Hypermodule, Hyperring
from hyperprime.schemas.axiom import AxiomCheck, AxiomReport, StructureKind

logger = logging.getLogger(__name__)

HYPERGROUP = "canonical hypergroup"
SEMIGROUP = "g' semigroup"
DISTRIBUTIVITY = "distributivity"
ABSORBING = "absorbing zero"
SCALAR_IDENTITY = "scalar identity"
ACTION_I = "action (i)"
ACTION_II = "action (ii)"
ACTION_III = "action (iii)"
ACTION_IV = "action (iv)"
UNITAL = "unital"


def _splits(word: Tuple[int, ...], k: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Distinct ways to cut a sorted multiset into a k-block and the sorted rest."""
    seen = set()
    for positions in combinations(range(len(word)), k):
        block = tuple(word[p] for p in positions)
        if block in seen:
            continue
        seen.add(block)
        chosen = set(positions)
        yield block, tuple(word[p] for p in range(len(word)) if p not in chosen)


def _passed(axiom: str, group: str, detail: Optional[str] = None) -> AxiomCheck:
    return AxiomCheck(axiom=axiom, group=group, passed=True, detail=detail)


def _failed(axiom: str, group: str, s: CarrierMixin, witness, detail: str) -> AxiomCheck:
    return AxiomCheck(
        axiom=axiom, group=group, passed=False,
        witness=[s.carrier[i].label for i in witness], detail=detail,
    )


class AxiomVerifier:
    def __init__(self):
        self._ring_reports: "weakref.WeakKeyDictionary[Hyperring, AxiomReport]" = weakref.WeakKeyDictionary()
        self._module_reports: "weakref.WeakKeyDictionary[Hypermodule, AxiomReport]" = weakref.WeakKeyDictionary()

    # --- canonical m-ary hypergroup ---

    def _hypergroup_checks(self, s: CarrierMixin, table: HyperOpTable, op: str) -> List[AxiomCheck]:
        return [
            _passed(f"{op}.commutativity", HYPERGROUP, "sorted-tuple storage"),
            self._associativity(s, table, op),
            self._neutral(s, table, op),
            self._inverse(s, op),
            self._reversibility(s, table, op),
        ]

    def _associativity(self, s: CarrierMixin, table: HyperOpTable, op: str) -> AxiomCheck:
        m = table.arity
        entries = table.entries
        for word in multisets(s.size, 2 * m - 1):
            reference = None
            for block, rest in _splits(word, m):
                value = 0
                for inner in bits(entries[block]):
                    value |= table.lookup(rest + (inner,))
                if reference is None:
                    reference = (block, rest, value)
                elif value != reference[2]:
                    first_block, first_rest, first_value = reference
                    detail = (
                        f"{op}({op}{s.format_tuple(first_block)},{','.join(s.labels[i] for i in first_rest)})"
                        f"={s.format_mask(first_value)} but "
                        f"{op}({op}{s.format_tuple(block)},{','.join(s.labels[i] for i in rest)})"
                        f"={s.format_mask(value)}"
                    )
                    return _failed(f"{op}.associativity", HYPERGROUP, s, word, detail)
        return _passed(f"{op}.associativity", HYPERGROUP)

    def _neutral(self, s: CarrierMixin, table: HyperOpTable, op: str) -> AxiomCheck:
        zero = s.zero.index
        for x in range(s.size):
            args = (x,) + (zero,) * (table.arity - 1)
            value = table.lookup(args)
            if value != 1 << x:
                detail = f"{op}{s.format_tuple(sorted(args))}={s.format_mask(value)}"
                return _failed(f"{op}.neutral", HYPERGROUP, s, (x,), detail)
        return _passed(f"{op}.neutral", HYPERGROUP)

    def _inverse(self, s: CarrierMixin, op: str) -> AxiomCheck:
        for x, inverses in enumerate(s.inverse_masks):
            if inverses.bit_count() != 1:
                detail = f"inverses of {s.labels[x]}: {s.format_mask(inverses)}"
                return _failed(f"{op}.inverse", HYPERGROUP, s, (x,), detail)
        return _passed(f"{op}.inverse", HYPERGROUP)

    def _reversibility(self, s: CarrierMixin, table: HyperOpTable, op: str) -> AxiomCheck:
        # With non-unique inverses every choice of inverse is admitted.
        inverses = s.inverse_masks
        for args in multisets(s.size, table.arity):
            for z in bits(table.entries[args]):
                for position in range(len(args)):
                    if position and args[position] == args[position - 1]:
                        continue
                    x = args[position]
                    others = args[:position] + args[position + 1:]
                    missing = [y for y in others if inverses[y] == 0]
                    if missing:
                        detail = f"{s.labels[missing[0]]} has no inverse"
                        return _failed(f"{op}.reversibility", HYPERGROUP, s, args, detail)
                    value = eval_subsets(table, [1 << z] + [inverses[y] for y in others])
                    if not value >> x & 1:
                        detail = (
                            f"{s.labels[z]} in {op}{s.format_tuple(args)} but "
                            f"{s.labels[x]} not in {op}({s.labels[z]},-{',-'.join(s.labels[y] for y in others)})"
                            f"={s.format_mask(value)}"
                        )
                        return _failed(f"{op}.reversibility", HYPERGROUP, s, args, detail)
        return _passed(f"{op}.reversibility", HYPERGROUP)

    # --- rings ---

    def verify_ring_axioms(self, ring: Hyperring) -> AxiomReport:
        cached = self._ring_reports.get(ring)
        if cached is not None:
            return cached
        checks = self._hypergroup_checks(ring, ring.f_prime, "f'")
        checks += [
            _passed("g'.commutativity", SEMIGROUP, "sorted-tuple storage"),
            self._ring_product_associativity(ring),
            self._ring_distributivity(ring),
            self._ring_absorbing_zero(ring),
            self._ring_scalar_identity(ring),
        ]
        report = AxiomReport(structure=ring.name, kind=StructureKind.RING, checks=checks)
        if not report.ok:
            logger.debug("ring %s fails %s", ring.name, [c.axiom for c in report.failures()])
        self._ring_reports[ring] = report
        return report

    def _ring_product_associativity(self, ring: Hyperring) -> AxiomCheck:
        n = ring.n
        for word in multisets(ring.size, 2 * n - 1):
            reference = None
            for block, rest in _splits(word, n):
                value = ring.multiply(rest + (ring.multiply(block),))
                if reference is None:
                    reference = (block, value)
                elif value != reference[1]:
                    detail = (
                        f"collapsing {ring.format_tuple(reference[0])} gives {ring.labels[reference[1]]}, "
                        f"collapsing {ring.format_tuple(block)} gives {ring.labels[value]}"
                    )
                    return _failed("g'.associativity", SEMIGROUP, ring, word, detail)
        return _passed("g'.associativity", SEMIGROUP)

    def _ring_distributivity(self, ring: Hyperring) -> AxiomCheck:
        f_prime = ring.f_prime
        for xs in multisets(ring.size, ring.m):
            total = f_prime.entries[xs]
            for rest in multisets(ring.size, ring.n - 1):
                lhs = 0
                for s in bits(total):
                    lhs |= 1 << ring.multiply(rest + (s,))
                rhs = f_prime.lookup([ring.multiply(rest + (x,)) for x in xs])
                if lhs != rhs:
                    detail = (
                        f"g'(f'{ring.format_tuple(xs)},{','.join(ring.labels[r] for r in rest)})"
                        f"={ring.format_mask(lhs)} but distributed {ring.format_mask(rhs)}"
                    )
                    return _failed("g'.distributivity", DISTRIBUTIVITY, ring, xs + rest, detail)
        return _passed("g'.distributivity", DISTRIBUTIVITY)

    def _ring_absorbing_zero(self, ring: Hyperring) -> AxiomCheck:
        zero = ring.zero.index
        for rest in multisets(ring.size, ring.n - 1):
            value = ring.multiply(rest + (zero,))
            if value != zero:
                detail = f"g'{ring.format_tuple(sorted(rest + (zero,)))}={ring.labels[value]}"
                return _failed("g'.absorbing_zero", ABSORBING, ring, (zero,) + rest, detail)
        return _passed("g'.absorbing_zero", ABSORBING)

    def _ring_scalar_identity(self, ring: Hyperring) -> AxiomCheck:
        for x in range(ring.size):
            args = ring.unit_tuple(x, ring.n)
            value = ring.multiply(args)
            if value != x:
                detail = f"g'{ring.format_tuple(args)}={ring.labels[value]}"
                return _failed("g'.scalar_identity", SCALAR_IDENTITY, ring, (x,), detail)
        return _passed("g'.scalar_identity", SCALAR_IDENTITY)

    # --- modules ---

    def verify_module_axioms(self, module: Hypermodule, *, check_ring: bool = True) -> AxiomReport:
        ring_report = self.verify_ring_axioms(module.ring)
        if check_ring and not ring_report.ok:
            failing = ", ".join(c.axiom for c in ring_report.failures())
            raise RingInvalid(f"ring {module.ring.name} fails axioms: {failing}")
        cached = self._module_reports.get(module)
        if cached is not None:
            return cached
        checks = self._hypergroup_checks(module, module.f, "f")
        checks += [
            self._action_over_f(module),
            self._action_over_f_prime(module),
            self._action_over_g_prime(module),
            self._action_zero_scalar(module),
        ]
        if module.unital:
            checks.append(self._action_unital(module))
        report = AxiomReport(
            structure=module.name, kind=StructureKind.MODULE, unital=module.unital,
            ring_verified=ring_report.ok, checks=checks,
        )
        if not report.ok:
            logger.debug("module %s fails %s", module.name, [c.axiom for c in report.failures()])
        self._module_reports[module] = report
        return report

    def _action_over_f(self, module: Hypermodule) -> AxiomCheck:
        # g(r, f(x_1..x_m)) = f(g(r,x_1), ..., g(r,x_m))
        ring, g, f = module.ring, module.g, module.f
        for scalars in multisets(ring.size, module.n - 1):
            images = [g.entries[(scalars, x)] for x in range(module.size)]
            for xs in multisets(module.size, module.m):
                lhs = 0
                for s in bits(f.entries[xs]):
                    lhs |= images[s]
                rhs = eval_subsets(f, [images[x] for x in xs])
                if lhs != rhs:
                    detail = (
                        f"g({','.join(ring.labels[r] for r in scalars)},f{module.format_tuple(xs)})"
                        f"={module.format_mask(lhs)} but f over the images gives {module.format_mask(rhs)}"
                    )
                    return _failed("g.distributes_over_f", ACTION_I, module, xs, detail)
        return _passed("g.distributes_over_f", ACTION_I)

    def _action_over_f_prime(self, module: Hypermodule) -> AxiomCheck:
        # g(f'(s_1..s_m), rest, x) = f(g(s_1,rest,x), ..., g(s_m,rest,x))
        ring, g, f = module.ring, module.g, module.f
        for ss in multisets(ring.size, module.m):
            sums = bits(ring.f_prime.entries[ss])
            for rest in multisets(ring.size, module.n - 2):
                for x in range(module.size):
                    lhs = 0
                    for t in sums:
                        lhs |= g.lookup(rest + (t,), x)
                    rhs = eval_subsets(f, [g.lookup(rest + (s,), x) for s in ss])
                    if lhs != rhs:
                        detail = (
                            f"g(f'{ring.format_tuple(ss)},{','.join(ring.labels[r] for r in rest)}"
                            f"|{module.labels[x]})={module.format_mask(lhs)} but f over the parts gives {module.format_mask(rhs)}"
                        )
                        return _failed("g.distributes_over_f'", ACTION_II, module, (x,), detail)
        return _passed("g.distributes_over_f'", ACTION_II)

    def _action_over_g_prime(self, module: Hypermodule) -> AxiomCheck:
        # every way of collapsing n scalars through g' agrees with nesting two actions
        ring, g = module.ring, module.g
        n = module.n
        for word in multisets(ring.size, 2 * n - 2):
            for x in range(module.size):
                reference = None
                for block, rest in _splits(word, n):
                    value = g.lookup(rest + (ring.multiply(block),), x)
                    if reference is None:
                        reference = (f"g'{ring.format_tuple(block)} first", value)
                    elif value != reference[1]:
                        return self._g_prime_failure(module, word, x, reference, (f"g'{ring.format_tuple(block)} first", value))
                for inner, outer in _splits(word, n - 1):
                    value = 0
                    for y in bits(g.entries[(inner, x)]):
                        value |= g.entries[(outer, y)]
                    if value != reference[1]:
                        return self._g_prime_failure(module, word, x, reference, (f"g{ring.format_tuple(inner)} first", value))
        return _passed("g.compatible_with_g'", ACTION_III)

    def _g_prime_failure(self, module: Hypermodule, word, x, first, second) -> AxiomCheck:
        detail = (
            f"scalars {module.ring.format_tuple(word)} on {module.labels[x]}: "
            f"{first[0]} gives {module.format_mask(first[1])}, {second[0]} gives {module.format_mask(second[1])}"
        )
        check = _failed("g.compatible_with_g'", ACTION_III, module, (x,), detail)
        check.witness = [module.ring.labels[r] for r in word] + ["|", module.labels[x]]
        return check

    def _action_zero_scalar(self, module: Hypermodule) -> AxiomCheck:
        ring = module.ring
        zero_r = ring.zero.index
        for rest in multisets(ring.size, module.n - 2):
            for x in range(module.size):
                value = module.g.lookup(rest + (zero_r,), x)
                if value != module.zero_mask:
                    detail = f"g({','.join(ring.labels[r] for r in sorted(rest + (zero_r,)))}|{module.labels[x]})={module.format_mask(value)}"
                    return _failed("g.zero_scalar", ACTION_IV, module, (x,), detail)
        return _passed("g.zero_scalar", ACTION_IV)

    def _action_unital(self, module: Hypermodule) -> AxiomCheck:
        ones = (module.ring.one.index,) * (module.n - 1)
        for a in range(module.size):
            value = module.g.lookup(ones, a)
            if value != 1 << a:
                detail = f"g(1..1|{module.labels[a]})={module.format_mask(value)}"
                return _failed("g.unital", UNITAL, module, (a,), detail)
        return _passed("g.unital", UNITAL)


axioms = AxiomVerifier()
