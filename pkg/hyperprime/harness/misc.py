# hyperprime/harness/misc.py
from itertools import combinations_with_replacement
from typing import List

from hyperprime.engine.classify import classify
from hyperprime.engine.construct import construct
from hyperprime.engine.phi import PHI_REGISTRY
from hyperprime.engine.tables import is_subset
from hyperprime.harness.base import Recorder, Tally
from hyperprime.harness.context import CorpusView, ModuleContext


def _saturated(ctx: ModuleContext, s: int) -> bool:
    for singles, whole in ctx.saturation_triples():
        if all(x & s for x in singles) and not whole & s:
            return False
    return True


def _maximal_avoiding(ctx: ModuleContext, t: Tally) -> None:
    full = ctx.module.full_mask
    zero = ctx.module.zero.index
    candidates = {full & ~n for n in ctx.proper}
    candidates |= {1 << a for a in range(ctx.module.size) if a != zero}
    for s in sorted(candidates):
        if not _saturated(ctx, s):
            t.check(False, True)
            continue
        avoiding = [q for q in ctx.subs if not q & s]
        for q in avoiding:
            if any(other != q and is_subset(q, other) for other in avoiding):
                continue
            t.check(True, bool(ctx.cp(q)), s=ctx.labels(s), q=ctx.labels(q))


def _maximals(ctx: ModuleContext) -> List[int]:
    return [
        q for q in ctx.proper
        if not any(other != q and is_subset(q, other) for other in ctx.proper)
    ]


def _classical_are_maximal_meets(ctx: ModuleContext) -> bool:
    maximals = _maximals(ctx)
    for q in ctx.proper:
        if not ctx.cp(q):
            continue
        meet = ctx.module.full_mask
        for m in maximals:
            if is_subset(q, m):
                meet &= m
        if meet != q:
            return False
    return True


def _maximal_intersection_descends(ctx: ModuleContext, t: Tally) -> None:
    if not _classical_are_maximal_meets(ctx):
        t.check(False, True)
        return
    for n in ctx.proper:
        inner = None
        for strict in (True, False):
            quotient = ctx.quotient(n).context.module
            if not classify.is_torsion_free(quotient, strict=strict):
                t.check(False, True)
                continue
            if inner is None:
                restricted = construct.restrict(ctx.module, n)
                inner = ModuleContext(restricted, f"{ctx.id}@[{','.join(ctx.labels(n))}]", ctx.verified)
            t.check(True, _classical_are_maximal_meets(inner), n=ctx.labels(n),
                    reading="strict" if strict else "contains zero")


def _multiplication_form(ctx: ModuleContext, t: Tally) -> None:
    if not classify.is_multiplication_module(ctx.module):
        t.skip("not a multiplication hypermodule")
        return
    full = ctx.module.full_mask
    whole_ring = (ctx.ring.full_mask,) * (ctx.n - 2)
    presentations = {k: ctx.colon(k, full) for k in ctx.subs}
    for name in PHI_REGISTRY:
        for q in ctx.proper:
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            holds = True
            for parts in combinations_with_replacement(ctx.subs, ctx.n - 1):
                ideals = tuple(presentations[k] for k in parts)
                for a in range(ctx.module.size):
                    product = ctx.action(ideals, 1 << a)
                    if not is_subset(product, q) or is_subset(product, value):
                        continue
                    if not any(is_subset(ctx.action((i,) + whole_ring, 1 << a), q) for i in set(ideals)):
                        holds = False
                        break
                if not holds:
                    break
            direct = bool(ctx.phi_cp(name, q))
            t.check(True, holds == direct, phi=name, q=ctx.labels(q), submodule_form=holds, phi_classical=direct)


def check_misc(view: CorpusView, rec: Recorder) -> None:
    for ctx in view.contexts:
        rec.run("maximal-avoiding-set-is-classical", ctx.id, ctx.verified, lambda t, ctx=ctx: _maximal_avoiding(ctx, t))
        rec.run("maximal-intersection-descends", ctx.id, ctx.verified,
                lambda t, ctx=ctx: _maximal_intersection_descends(ctx, t))
        rec.run("multiplication-submodule-form", ctx.id, ctx.verified, lambda t, ctx=ctx: _multiplication_form(ctx, t))
