# hyperprime/harness/colon.py
"""Containments between colon sets indexed by hyperproducts, and scalar collapse."""
from hyperprime.engine.phi import IDEAL_PHI_REGISTRY, PHI_REGISTRY
from hyperprime.engine.tables import is_subset, multisets
from hyperprime.harness.base import Recorder, Tally
from hyperprime.harness.context import CorpusView, ModuleContext


def _cover(ctx: ModuleContext, q: int, scalars, a: int) -> int:
    """Union of Q_{g(r_i, 1, a)} over the scalars."""
    out = 0
    for r in set(scalars):
        out |= ctx.colon(q, ctx.unit[r][a])
    return out


def _weakly_colon_cover(ctx: ModuleContext, t: Tally) -> None:
    g = ctx.module.g.entries
    for q in ctx.proper:
        if not ctx.wcp(q):
            t.check(False, True)
            continue
        for scalars in ctx.scalar_tuples:
            for a in range(ctx.module.size):
                value = g[(scalars, a)]
                lhs = ctx.colon(q, value)
                rhs = ctx.torsion(value) | _cover(ctx, q, scalars, a)
                t.check(True, is_subset(lhs, rhs), q=ctx.labels(q), scalars=ctx.scalar_labels(scalars),
                        a=ctx.module.labels[a], colon=ctx.ring.labels_of_mask(lhs))


def _phi_colon_cover(ctx: ModuleContext, t: Tally) -> None:
    g = ctx.module.g.entries
    for name in PHI_REGISTRY:
        for q in ctx.proper:
            value = ctx.phi_value(name, q)
            if value is None:
                t.skip(f"phi {name} leaves the subhypermodule lattice")
                continue
            if not ctx.phi_cp(name, q):
                t.check(False, True)
                continue
            for scalars in ctx.scalar_tuples:
                for a in range(ctx.module.size):
                    product = g[(scalars, a)]
                    lhs = ctx.colon(q, product)
                    rhs = ctx.colon(value, product) | _cover(ctx, q, scalars, a)
                    t.check(True, is_subset(lhs, rhs), phi=name, q=ctx.labels(q),
                            scalars=ctx.scalar_labels(scalars), a=ctx.module.labels[a])


def _collapse_tuples(ctx: ModuleContext):
    ring = ctx.ring
    for scalars in multisets(ring.size, ctx.n):
        yield scalars, ring.multiply(scalars)


def _weakly_faithful_collapse(ctx: ModuleContext, t: Tally) -> None:
    zero_r = ctx.ring.zero.index
    for q in ctx.proper:
        if not ctx.wcp(q):
            t.check(False, True)
            continue
        for a in range(ctx.module.size):
            if q >> a & 1 or ctx.torsion(1 << a) != ctx.ring.zero_mask:
                continue
            colon_a = ctx.colon(q, 1 << a)
            for scalars, value in _collapse_tuples(ctx):
                premise = value != zero_r and colon_a >> value & 1
                t.check(premise, any(colon_a >> r & 1 for r in scalars),
                        q=ctx.labels(q), a=ctx.module.labels[a], scalars=ctx.scalar_labels(scalars))


def _phi_collapse_forward(ctx: ModuleContext, t: Tally) -> None:
    for name in PHI_REGISTRY:
        for ring_name, ring_phi in IDEAL_PHI_REGISTRY.items():
            for q in ctx.proper:
                value = ctx.phi_value(name, q)
                if value is None:
                    t.skip(f"phi {name} leaves the subhypermodule lattice")
                    continue
                if not ctx.phi_cp(name, q):
                    t.check(False, True)
                    continue
                for a in range(ctx.module.size):
                    if q >> a & 1:
                        continue
                    colon_a = ctx.colon(q, 1 << a)
                    phi_colon = ctx.colon(value, 1 << a) if value else 0
                    reduced = ring_phi(ctx.ring, colon_a)
                    if not is_subset(phi_colon, reduced):
                        t.check(False, True)
                        continue
                    for scalars, collapsed in _collapse_tuples(ctx):
                        premise = bool(colon_a >> collapsed & 1) and not reduced >> collapsed & 1
                        t.check(premise, any(colon_a >> r & 1 for r in scalars), phi=name, ring_phi=ring_name,
                                q=ctx.labels(q), a=ctx.module.labels[a], scalars=ctx.scalar_labels(scalars))


def _collapse_condition(ctx: ModuleContext, q: int, value: int, ring_phi) -> bool:
    """For every a outside Q: φ'(Q_a) ⊆ φ(Q)_a, and g'(r) ∈ Q_a − φ'(Q_a) forces some r_i ∈ Q_a."""
    for a in range(ctx.module.size):
        if q >> a & 1:
            continue
        colon_a = ctx.colon(q, 1 << a)
        phi_colon = ctx.colon(value, 1 << a) if value else 0
        reduced = ring_phi(ctx.ring, colon_a)
        if not is_subset(reduced, phi_colon):
            return False
        for scalars, collapsed in _collapse_tuples(ctx):
            if colon_a >> collapsed & 1 and not reduced >> collapsed & 1:
                if not any(colon_a >> r & 1 for r in scalars):
                    return False
    return True


def _phi_collapse_converse(ctx: ModuleContext, t: Tally) -> None:
    if not ctx.module.unital:
        t.skip("needs a unital hypermodule")
        return
    for name in PHI_REGISTRY:
        for ring_name, ring_phi in IDEAL_PHI_REGISTRY.items():
            for q in ctx.proper:
                value = ctx.phi_value(name, q)
                if value is None:
                    t.skip(f"phi {name} leaves the subhypermodule lattice")
                    continue
                t.check(_collapse_condition(ctx, q, value, ring_phi), bool(ctx.phi_cp(name, q)),
                        phi=name, ring_phi=ring_name, q=ctx.labels(q))


COLON_PROPERTIES = (
    ("weakly-colon-cover", _weakly_colon_cover),
    ("phi-colon-cover", _phi_colon_cover),
    ("weakly-faithful-scalar-collapse", _weakly_faithful_collapse),
    ("phi-scalar-collapse-forward", _phi_collapse_forward),
    ("phi-scalar-collapse-converse", _phi_collapse_converse),
)


def check_colon_containments(view: CorpusView, rec: Recorder) -> None:
    for ctx in view.contexts:
        for theorem, body in COLON_PROPERTIES:
            rec.run(theorem, ctx.id, ctx.verified, lambda t, ctx=ctx, body=body: body(ctx, t))
