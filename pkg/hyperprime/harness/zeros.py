# hyperprime/harness/zeros.py
"""Classical (3,3)-zeros: what a weakly classical prime needs to be classical prime."""

from hyperprime.core.errors import PremiseFails
from hyperprime.engine.classify import classify
from hyperprime.engine.tables import is_subset
from hyperprime.harness.base import Recorder, Tally
from hyperprime.harness.context import CorpusView, ModuleContext


def _ternary(ctx: ModuleContext, t: Tally) -> bool:
    if (ctx.module.m, ctx.module.n) != (3, 3):
        t.skip("3-ary only")
        return False
    return True


def _zero_free_pair(ctx: ModuleContext, t: Tally) -> None:
    if not _ternary(ctx, t):
        return
    for q in ctx.proper:
        if not ctx.wcp(q):
            t.check(False, True)
            continue
        for scalars in ctx.scalar_tuples:
            sets = tuple(1 << r for r in scalars)
            for p in ctx.subs:
                if not is_subset(ctx.action(sets, p), q):
                    continue
                premise = not classify.has_classical_zero(ctx.module, q, scalars, p, unit=ctx.unit)
                conclusion = any(is_subset(ctx.unit_action(1 << r, p), q) for r in set(scalars))
                t.check(premise, conclusion, q=ctx.labels(q), scalars=ctx.scalar_labels(scalars), p=ctx.labels(p))


def _free_zero_ideals(ctx: ModuleContext, t: Tally) -> None:
    if not _ternary(ctx, t):
        return
    for q in ctx.proper:
        if not ctx.wcp(q):
            t.check(False, True)
            continue
        for ideals in ctx.ideal_tuples:
            for p in ctx.subs:
                if not is_subset(ctx.action(ideals, p), q):
                    continue
                try:
                    premise = classify.is_free_classical_zero(ctx.module, q, ideals, p, unit=ctx.unit)
                except PremiseFails:
                    continue
                conclusion = any(is_subset(ctx.unit_action(i, p), q) for i in set(ideals))
                t.check(premise, conclusion, q=ctx.labels(q), ideals=ctx.ideal_labels(ideals), p=ctx.labels(p))


def check_zero_theorems(view: CorpusView, rec: Recorder) -> None:
    for ctx in view.contexts:
        rec.run("ternary-zero-free-pair", ctx.id, ctx.verified, lambda t, ctx=ctx: _zero_free_pair(ctx, t))
        rec.run("ternary-free-zero-ideals", ctx.id, ctx.verified, lambda t, ctx=ctx: _free_zero_ideals(ctx, t))
