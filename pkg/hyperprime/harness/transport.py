# hyperprime/harness/transport.py
"""Weakly and φ-classical primality carried through quotients, homomorphisms and products."""
import logging
from typing import List, Tuple

from hyperprime.core.errors import NotHom, PhiNotSub, RingMismatch
from hyperprime.engine.classify import ClassKind
from hyperprime.engine.construct import construct
from hyperprime.engine.phi import PHI_REGISTRY, product_phi
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import is_subset, rectangle
from hyperprime.harness.base import Recorder, Tally
from hyperprime.harness.context import CorpusView, ModuleContext
from hyperprime.models.structures import Homomorphism

logger = logging.getLogger(__name__)


# --- quotients ---


def _projection_kernel(ctx: ModuleContext, t: Tally) -> None:
    for n in ctx.subs:
        view = ctx.quotient(n)
        kernel = view.projection.pull(view.context.module.zero_mask)
        t.check(True, kernel == n, sub=ctx.labels(n), kernel=ctx.labels(kernel))


def _quotient_verifies(ctx: ModuleContext, t: Tally) -> None:
    for n in ctx.subs:
        view = ctx.quotient(n)
        t.check(ctx.verified, view.context.verified, sub=ctx.labels(n), quotient=view.context.module.name)


def _nested_pairs(ctx: ModuleContext, strict: bool) -> List[Tuple[int, int]]:
    """(N, Q) with N ⊆ Q, Q proper; N ⊊ Q when `strict`."""
    return [
        (n, q) for q in ctx.proper for n in ctx.subs
        if is_subset(n, q) and not (strict and n == q)
    ]


def _weakly_lifts(ctx: ModuleContext, t: Tally) -> None:
    for p, q in _nested_pairs(ctx, strict=True):
        view = ctx.quotient(p)
        lifted = view.context.wcp(view.lift(q))
        if lifted is None:
            t.skip("Q/P is not a proper subhypermodule of M/P")
            continue
        t.check(bool(ctx.wcp(p)) and lifted, bool(ctx.wcp(q)), p=ctx.labels(p), q=ctx.labels(q))


def _weakly_descends(ctx: ModuleContext, t: Tally) -> None:
    for p, q in _nested_pairs(ctx, strict=True):
        view = ctx.quotient(p)
        t.check(bool(ctx.wcp(q)), view.context.wcp(view.lift(q)) is True, p=ctx.labels(p), q=ctx.labels(q))


def _phi_descends(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for n, q in _nested_pairs(ctx, strict=False):
            view = ctx.quotient(n)
            lifted = view.context.verdict(view.lift(q), ClassKind.PHI, view.lifted_phi(name))
            t.check(bool(ctx.phi_cp(name, q)), lifted is True, phi=name, n=ctx.labels(n), q=ctx.labels(q))


def _phi_quotient_weakly(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for n, q in _nested_pairs(ctx, strict=False):
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            premise = bool(ctx.phi_cp(name, q)) and is_subset(value, n)
            if not premise:
                t.check(False, True)
                continue
            view = ctx.quotient(n)
            t.check(True, view.context.wcp(view.lift(q)) is True, phi=name, n=ctx.labels(n), q=ctx.labels(q))


def _phi_lifts_from_quotient(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for n, q in _nested_pairs(ctx, strict=False):
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            if not is_subset(n, value):
                t.check(False, True)
                continue
            view = ctx.quotient(n)
            lifted = view.context.verdict(view.lift(q), ClassKind.PHI, view.lifted_phi(name))
            t.check(lifted is True, bool(ctx.phi_cp(name, q)), phi=name, n=ctx.labels(n), q=ctx.labels(q))


def _phi_lifts_via_weakly_quotient(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for n, q in _nested_pairs(ctx, strict=False):
            phi_n, phi_q = ctx.phi_value(name, n), ctx.phi_value(name, q)
            if phi_n is None or phi_q is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            if not (ctx.phi_cp(name, n) and is_subset(phi_n, phi_q)):
                t.check(False, True)
                continue
            view = ctx.quotient(n)
            premise = view.context.wcp(view.lift(q)) is True
            t.check(premise, bool(ctx.phi_cp(name, q)), phi=name, n=ctx.labels(n), q=ctx.labels(q))


def _phi_iff_weakly_modulo_phi(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for q in ctx.proper:
            value = ctx.phi_value(name, q)
            if not value or not is_subset(value, q):
                t.skip("phi(Q) is empty or not inside Q")
                continue
            view = ctx.quotient(value)
            modulo = view.context.wcp(view.lift(q))
            direct = ctx.phi_cp(name, q)
            t.check(True, modulo is direct, phi=name, q=ctx.labels(q), weakly_modulo_phi=modulo, phi_classical=direct)


QUOTIENT_PROPERTIES = (
    ("projection-kernel", _projection_kernel),
    ("construction-verifies", _quotient_verifies),
    ("weakly-lifts-through-quotient", _weakly_lifts),
    ("weakly-descends-to-quotient", _weakly_descends),
    ("phi-descends-to-quotient", _phi_descends),
    ("phi-quotient-weakly", _phi_quotient_weakly),
    ("phi-lifts-from-quotient", _phi_lifts_from_quotient),
    ("phi-lifts-via-weakly-quotient", _phi_lifts_via_weakly_quotient),
    ("phi-iff-weakly-modulo-phi", _phi_iff_weakly_modulo_phi),
)


def check_quotient_theorems(view: CorpusView, rec: Recorder) -> None:
    for ctx in view.contexts:
        for theorem, body in QUOTIENT_PROPERTIES:
            rec.run(theorem, ctx.id, ctx.verified, lambda t, ctx=ctx, body=body: body(ctx, t))


# --- homomorphisms ---


class _HomInstance:
    def __init__(self, label: str, h: Homomorphism, source: ModuleContext, target: ModuleContext):
        self.label = label
        self.h = h
        self.source = source
        self.target = target
        self.kernel = h.pull(target.module.zero_mask)


def _homomorphisms(view: CorpusView, ctx: ModuleContext) -> List[_HomInstance]:
    """Identity, quotient projections, and product injections/projections leaving `ctx`."""
    module = ctx.module
    out = [_HomInstance("identity", construct.check_homomorphism(range(module.size), module, module), ctx, ctx)]
    for n in ctx.subs:
        q = ctx.quotient(n)
        out.append(_HomInstance(f"projection to {q.context.module.name}", q.projection, ctx, q.context))
    for instance in view.products:
        if instance.kind != "same-ring":
            continue
        left, right, product = (view.context(e) for e in (instance.left, instance.right, instance.product))
        try:
            if ctx is product:
                for side, target in ((0, left), (1, right)):
                    h = construct.projection_of_product(left.module, right.module, product.module, side=side)
                    out.append(_HomInstance(f"projection {side} of {product.module.name}", h, ctx, target))
            if ctx is left:
                h = construct.injection(left.module, right.module, product.module, side=0)
                out.append(_HomInstance(f"injection into {product.module.name}", h, ctx, product))
            if ctx is right:
                h = construct.injection(left.module, right.module, product.module, side=1)
                out.append(_HomInstance(f"injection into {product.module.name}", h, ctx, product))
        except (NotHom, RingMismatch) as exc:
            logger.debug("skipping map around %s: %s", product.module.name, exc)
    return out


def _weakly_image(homs: List[_HomInstance], t: Tally) -> None:
    for hom in homs:
        if not hom.h.is_surjective:
            continue
        for q in hom.source.proper:
            if not is_subset(hom.kernel, q):
                continue
            image = hom.h.apply(q)
            t.check(bool(hom.source.wcp(q)), hom.target.wcp(image) is True,
                    map=hom.label, q=hom.source.labels(q), image=hom.target.labels(image))


def _weakly_preimage(homs: List[_HomInstance], t: Tally) -> None:
    for hom in homs:
        if not hom.h.is_injective:
            continue
        for q in hom.target.proper:
            pre = hom.h.pull(q)
            if pre == hom.source.module.full_mask:
                t.check(False, True)
                continue
            t.check(bool(hom.target.wcp(q)), hom.source.wcp(pre) is True,
                    map=hom.label, q=hom.target.labels(q), preimage=hom.source.labels(pre))


def _phi_preimage(homs: List[_HomInstance], t: Tally) -> None:
    for hom in homs:
        if not hom.h.is_surjective:
            continue
        for name in PHI_REGISTRY:
            for q in hom.target.proper:
                pre = hom.h.pull(q)
                target_value = hom.target.phi_value(name, q)
                source_value = hom.source.phi_value(name, pre)
                if target_value is None or source_value is None:
                    t.skip(f"phi {name} leaves the subhypermodule lattice")
                    continue
                compatible = source_value == hom.h.pull(target_value)
                t.check(compatible and bool(hom.target.phi_cp(name, q)), hom.source.phi_cp(name, pre) is True,
                        map=hom.label, phi=name, q=hom.target.labels(q), preimage=hom.source.labels(pre))


def _phi_image(homs: List[_HomInstance], t: Tally) -> None:
    for hom in homs:
        if not hom.h.is_surjective:
            continue
        for name in PHI_REGISTRY:
            for q in hom.source.proper:
                if not is_subset(hom.kernel, q):
                    continue
                image = hom.h.apply(q)
                source_value = hom.source.phi_value(name, q)
                target_value = hom.target.phi_value(name, image)
                if target_value is None or source_value is None:
                    t.skip(f"phi {name} leaves the subhypermodule lattice")
                    continue
                compatible = target_value == hom.h.apply(source_value)
                t.check(compatible and bool(hom.source.phi_cp(name, q)), hom.target.phi_cp(name, image) is True,
                        map=hom.label, phi=name, q=hom.source.labels(q), image=hom.target.labels(image))


HOM_PROPERTIES = (
    ("weakly-epimorphic-image", _weakly_image),
    ("weakly-monomorphic-preimage", _weakly_preimage),
    ("phi-epimorphic-preimage", _phi_preimage),
    ("phi-epimorphic-image", _phi_image),
)


def check_hom_theorems(view: CorpusView, rec: Recorder) -> None:
    if not any(rec.wants(theorem) for theorem, _ in HOM_PROPERTIES):
        return
    for ctx in view.contexts:
        homs = _homomorphisms(view, ctx)
        verified = ctx.verified and all(hom.target.verified for hom in homs)
        for theorem, body in HOM_PROPERTIES:
            rec.run(theorem, ctx.id, verified, lambda t, homs=homs, body=body: body(homs, t))


# --- products ---


def _product_verifies(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    t.check(left.verified and right.verified, product.verified, product=product.module.name)


def _side_condition(left: ModuleContext, right: ModuleContext, q1: int) -> bool:
    """Every (r, a1) with 0 ∈ g1(r, a1) ⊆ Q1 and no g1(r_i, 1, a1) ⊆ Q1 has g'(r, 1) ∈ F_a2 for every nonzero a2."""
    m1, m2 = left.module, right.module
    one = m1.ring.one.index
    nonzero = [a for a in range(m2.size) if a != m2.zero.index]
    for scalars in left.scalar_tuples:
        for a1 in range(m1.size):
            value = m1.g.entries[(scalars, a1)]
            if not (value & m1.zero_mask) or not is_subset(value, q1):
                continue
            if any(is_subset(left.unit[r][a1], q1) for r in set(scalars)):
                continue
            collapsed = m1.ring.multiply(scalars + (one,))
            if not all(subobjects.torsion_mask(m2, a2) >> collapsed & 1 for a2 in nonzero):
                return False
    return True


def _weakly_product_same_ring(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    k2 = right.module.size
    for q1 in left.proper:
        whole = rectangle(q1, right.module.full_mask, k2)
        lhs = product.wcp(whole) is True
        rhs = bool(left.wcp(q1)) and _side_condition(left, right, q1)
        t.check(True, lhs == rhs, q1=left.labels(q1), product_weakly=lhs, components=rhs)


def _classical_chain(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    k2 = right.module.size
    for q1 in left.proper:
        whole = rectangle(q1, right.module.full_mask, k2)
        values = (bool(left.cp(q1)), product.cp(whole) is True, product.wcp(whole) is True)
        t.check(True, len(set(values)) == 1, q1=left.labels(q1),
                component_classical=values[0], product_classical=values[1], product_weakly=values[2])


def _phi_zero_column(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    k2 = right.module.size
    column = rectangle(left.module.zero_mask, right.module.full_mask, k2)
    for name in PHI_REGISTRY:
        for q1 in left.proper:
            whole = rectangle(q1, right.module.full_mask, k2)
            value = product.phi_value(name, whole)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            premise = bool(left.wcp(q1)) and is_subset(column, value)
            t.check(premise, product.phi_cp(name, whole) is True, phi=name, q1=left.labels(q1))


def _phi_pairs(right: ModuleContext, *, full_second: bool):
    for first in PHI_REGISTRY.values():
        for second in PHI_REGISTRY.values():
            if full_second:
                try:
                    if second.apply(right.module, right.module.full_mask) != right.module.full_mask:
                        continue
                except PhiNotSub:
                    continue
            yield first, second


def _phi_full_second(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    k2 = right.module.size
    for first, second in _phi_pairs(right, full_second=True):
        combined = product_phi(first, second, left.module, right.module)
        for q1 in left.proper:
            whole = rectangle(q1, right.module.full_mask, k2)
            lhs = left.phi_cp(first.name, q1)
            rhs = product.verdict(whole, ClassKind.PHI, combined)
            if lhs is None or rhs is None:
                t.skip("phi leaves the subhypermodule lattice")
                continue
            t.check(True, lhs == rhs, phi=combined.name, q1=left.labels(q1), component=lhs, product=rhs)


def _phi_components(left: ModuleContext, right: ModuleContext, product: ModuleContext, t: Tally) -> None:
    k2 = right.module.size
    for first, second in _phi_pairs(right, full_second=False):
        combined = product_phi(first, second, left.module, right.module)
        for q1 in left.subs:
            for q2 in right.subs:
                whole = rectangle(q1, q2, k2)
                if whole == product.module.full_mask:
                    continue
                verdict = product.verdict(whole, ClassKind.PHI, combined)
                if verdict is None:
                    t.skip("phi leaves the subhypermodule lattice")
                    continue
                conclusion = (
                    (q1 == left.module.full_mask or left.phi_cp(first.name, q1) is True)
                    and (q2 == right.module.full_mask or right.phi_cp(second.name, q2) is True)
                )
                t.check(verdict, conclusion, phi=combined.name, q1=left.labels(q1), q2=right.labels(q2))


SAME_RING_PROPERTIES = (
    ("construction-verifies", _product_verifies),
    ("weakly-product-same-ring", _weakly_product_same_ring),
)

PRODUCT_RING_PROPERTIES = (
    ("construction-verifies", _product_verifies),
    ("classical-product-ring-chain", _classical_chain),
    ("phi-product-zero-column", _phi_zero_column),
    ("phi-product-full-second", _phi_full_second),
    ("phi-product-components", _phi_components),
)


def check_product_theorems(view: CorpusView, rec: Recorder) -> None:
    for instance in view.products:
        left, right, product = (view.context(e) for e in (instance.left, instance.right, instance.product))
        properties = SAME_RING_PROPERTIES if instance.kind == "same-ring" else PRODUCT_RING_PROPERTIES
        for theorem, body in properties:
            rec.run(
                theorem, product.id, product.verified,
                lambda t, body=body, l=left, r=right, p=product: body(l, r, p, t),
            )
