# hyperprime/harness/equivalences.py
"""Each classifier against an independent reformulation, and lattice invariants."""
import logging
from typing import Dict

from hyperprime.core.config import get_settings
from hyperprime.core.errors import GeneratedNotIdeal
from hyperprime.engine.axioms import axioms
from hyperprime.engine.classify import classify
from hyperprime.engine.phi import PHI_REGISTRY
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import is_subset
from hyperprime.harness.base import Recorder, Tally
from hyperprime.harness.context import CorpusView, ModuleContext

logger = logging.getLogger(__name__)


def _ideal_form(ctx: ModuleContext, q: int, excluded: int) -> bool:
    """g(I, N) ⊆ Q and g(I, N) ⊄ excluded force some g(I_i, 1, N) ⊆ Q; excluded=None means no exclusion."""
    for ideals in ctx.ideal_tuples:
        for n in ctx.subs:
            value = ctx.action(ideals, n)
            if not is_subset(value, q) or (excluded is not None and is_subset(value, excluded)):
                continue
            if not any(is_subset(ctx.unit_action(i, n), q) for i in set(ideals)):
                return False
    return True


def _phi_element_form(ctx: ModuleContext, q: int, excluded: int) -> bool:
    """φ-classical primality with single elements and the "⊄ φ(Q)" reading over hyperideals."""
    for ideals in ctx.ideal_tuples:
        for a in range(ctx.module.size):
            value = ctx.action(ideals, 1 << a)
            if not is_subset(value, q) or is_subset(value, excluded):
                continue
            if not any(is_subset(ctx.unit_action(i, 1 << a), q) for i in set(ideals)):
                return False
    return True


def _saturation_form(ctx: ModuleContext, q: int) -> bool:
    s = ctx.module.full_mask & ~q
    for singles, whole in ctx.saturation_triples():
        if all(x & s for x in singles) and not whole & s:
            return False
    return True


def _prime_definitions(ctx: ModuleContext, t: Tally) -> None:
    for q in ctx.proper:
        definition, colon_form = classify.prime_forms(ctx.module, q)
        t.check(True, definition == colon_form, sub=ctx.labels(q), definition=definition, colon_form=colon_form)


def _classical_ideal_form(ctx: ModuleContext, t: Tally) -> None:
    for q in ctx.proper:
        element_form = ctx.cp(q)
        ideal_form = _ideal_form(ctx, q, None)
        t.check(True, element_form == ideal_form, sub=ctx.labels(q), element_form=element_form, ideal_form=ideal_form)


def _classical_saturation_form(ctx: ModuleContext, t: Tally) -> None:
    for q in ctx.proper:
        element_form = ctx.cp(q)
        saturation = _saturation_form(ctx, q)
        t.check(True, element_form == saturation, sub=ctx.labels(q), element_form=element_form, saturation_form=saturation)


def _phi_ideal_form(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for q in ctx.proper:
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            element_form = ctx.phi_cp(name, q)
            ideal_form = _phi_element_form(ctx, q, value)
            t.check(True, element_form == ideal_form, phi=name, sub=ctx.labels(q),
                    element_form=element_form, ideal_form=ideal_form)


def _reduction(name: str, other):
    def body(ctx: ModuleContext, t: Tally) -> None:
        for q in ctx.proper:
            phi_form = ctx.phi_cp(name, q)
            direct = other(ctx, q)
            t.check(True, phi_form == direct, sub=ctx.labels(q), phi_form=phi_form, direct=direct)
    return body


def _classical_implies_weakly(ctx: ModuleContext, t: Tally) -> None:
    for q in ctx.proper:
        t.check(bool(ctx.cp(q)), bool(ctx.wcp(q)), sub=ctx.labels(q))


def _weakly_implies_phi(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for q in ctx.proper:
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            premise = bool(ctx.wcp(q)) and bool(value & ctx.module.zero_mask)
            t.check(premise, bool(ctx.phi_cp(name, q)), phi=name, sub=ctx.labels(q))


def _phi_monotone(ctx: ModuleContext, t: Tally) -> None:
    for q in ctx.proper:
        values: Dict[str, int] = {}
        for name in PHI_REGISTRY:
            value = ctx.phi_value(name, q)
            if value is not None:
                values[name] = value
        for small in values:
            for large in values:
                if small == large or not is_subset(values[small], values[large]):
                    continue
                t.check(bool(ctx.phi_cp(small, q)), bool(ctx.phi_cp(large, q)),
                        sub=ctx.labels(q), smaller=small, larger=large)


def _weakly_without_zeros(ctx: ModuleContext, t: Tally) -> None:
    full = ctx.module.full_mask
    for q in ctx.proper:
        if not ctx.wcp(q):
            t.check(False, True)
            continue
        zero_free = not any(
            classify.has_classical_zero(ctx.module, q, scalars, full, unit=ctx.unit)
            for scalars in ctx.scalar_tuples
        )
        t.check(zero_free, bool(ctx.cp(q)), sub=ctx.labels(q))


CLASSIFIER_PROPERTIES = (
    ("prime-definitions-agree", _prime_definitions),
    ("classical-ideal-form", _classical_ideal_form),
    ("classical-saturation-form", _classical_saturation_form),
    ("phi-ideal-form", _phi_ideal_form),
    ("phi-empty-is-classical", _reduction("empty", lambda ctx, q: ctx.cp(q))),
    ("phi-zero-is-weakly", _reduction("zero", lambda ctx, q: ctx.wcp(q))),
    ("classical-implies-weakly", _classical_implies_weakly),
    ("weakly-implies-phi", _weakly_implies_phi),
    ("phi-monotone", _phi_monotone),
    ("weakly-without-zeros-is-classical", _weakly_without_zeros),
)


def check_classifier_equivalences(view: CorpusView, rec: Recorder) -> None:
    for ctx in view.contexts:
        for theorem, body in CLASSIFIER_PROPERTIES:
            rec.run(theorem, ctx.id, ctx.verified, lambda t, ctx=ctx, body=body: body(ctx, t))


# --- sub-object invariants ---


def _colon_intersection(ctx: ModuleContext, t: Tally) -> None:
    for n in ctx.subs:
        whole = ctx.colon(n, ctx.module.full_mask)
        meet = ctx.ring.full_mask
        for a in range(ctx.module.size):
            meet &= ctx.colon(n, 1 << a)
        t.check(True, whole == meet, sub=ctx.labels(n),
                colon_sn=ctx.ring.labels_of_mask(whole), intersection=ctx.ring.labels_of_mask(meet))


def _colon_monotone(ctx: ModuleContext, t: Tally) -> None:
    size = ctx.module.size
    for small in ctx.subs:
        s_small = ctx.colon(small, ctx.module.full_mask)
        for a in range(size):
            t.check(True, is_subset(s_small, ctx.colon(small, 1 << a)), sub=ctx.labels(small), a=ctx.module.labels[a])
        for large in ctx.subs:
            if small == large or not is_subset(small, large):
                continue
            t.check(True, is_subset(s_small, ctx.colon(large, ctx.module.full_mask)),
                    smaller=ctx.labels(small), larger=ctx.labels(large))
            for a in range(size):
                t.check(True, is_subset(ctx.colon(small, 1 << a), ctx.colon(large, 1 << a)),
                        smaller=ctx.labels(small), larger=ctx.labels(large), a=ctx.module.labels[a])


def _generated_ideal_minimal(ctx: ModuleContext, t: Tally) -> None:
    ring = ctx.ring
    for x in range(ring.size):
        try:
            generated = subobjects.generated_hyperideal(ring, x).members
        except GeneratedNotIdeal as exc:
            t.check(True, False, element=ring.labels[x], error=str(exc))
            continue
        containing = [i for i in ctx.ideals if i >> x & 1]
        minimal = generated in ctx.ideals and all(is_subset(generated, i) for i in containing)
        t.check(True, minimal, element=ring.labels[x], generated=ring.labels_of_mask(generated))


def _enumeration_matches_oracle(ctx: ModuleContext, t: Tally) -> None:
    cap = get_settings().HYPERPRIME_ORACLE_CAP
    if ctx.module.size > cap:
        t.skip(f"carrier of {ctx.module.size} exceeds the oracle cap of {cap}")
    else:
        naive = [h.members for h in subobjects.naive_subhypermodules(ctx.module)]
        t.check(True, naive == ctx.subs, kind="subhypermodules",
                enumerated=[ctx.labels(s) for s in ctx.subs], naive=[ctx.labels(s) for s in naive])
    if ctx.ring.size <= cap:
        naive = [h.members for h in subobjects.naive_hyperideals(ctx.ring)]
        t.check(True, naive == ctx.ideals, kind="hyperideals",
                enumerated=[ctx.ring.labels_of_mask(i) for i in ctx.ideals],
                naive=[ctx.ring.labels_of_mask(i) for i in naive])


def check_subobject_invariants(view: CorpusView, rec: Recorder) -> None:
    rings_seen = set()
    for ctx in view.contexts:
        rec.run("colon-intersection", ctx.id, ctx.verified, lambda t, ctx=ctx: _colon_intersection(ctx, t))
        rec.run("colon-monotone", ctx.id, ctx.verified, lambda t, ctx=ctx: _colon_monotone(ctx, t))
        rec.run("enumeration-matches-oracle", ctx.id, ctx.verified, lambda t, ctx=ctx: _enumeration_matches_oracle(ctx, t))
        if id(ctx.ring) not in rings_seen:
            rings_seen.add(id(ctx.ring))
            ring_ok = axioms.verify_ring_axioms(ctx.ring).ok
            rec.run("generated-ideal-minimal", ctx.ring.name, ring_ok, lambda t, ctx=ctx: _generated_ideal_minimal(ctx, t))
