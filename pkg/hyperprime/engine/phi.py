# hyperprime/engine/phi.py
"""Functions φ from subhypermodules to subhypermodules-or-empty.

The empty set is represented by the mask 0.
"""
from dataclasses import dataclass
from typing import Callable, Dict

from hyperprime.core.errors import PhiNotSub, StructureError
from hyperprime.engine.subobjects import subobjects
from hyperprime.engine.tables import components, eval_action, eval_subsets, rectangle
from hyperprime.models.structures import Homomorphism, Hypermodule, Hyperring


@dataclass(frozen=True)
class PhiFunction:
    name: str
    rule: Callable[[Hypermodule, int], int]

    def apply(self, module: Hypermodule, subset: int) -> int:
        value = self.rule(module, subset)
        if value and not subobjects.is_subhypermodule(module, value):
            raise PhiNotSub(
                f"phi {self.name} sends {module.format_mask(subset)} to {module.format_mask(value)}, "
                f"which is not a subhypermodule of {module.name}"
            )
        return value


def _ideal_rule(module: Hypermodule, subset: int) -> int:
    # g(S_Q, 1^(n-2), Q)
    scalars = subobjects.colon_mask(module, subset, module.full_mask)
    if not scalars:
        return 0
    ones = [1 << module.ring.one.index] * (module.n - 2)
    return eval_action(module.g, [scalars] + ones, subset)


PHI_EMPTY = PhiFunction("empty", lambda module, subset: 0)
PHI_ZERO = PhiFunction("zero", lambda module, subset: module.zero_mask)
PHI_IDEAL = PhiFunction("ideal", _ideal_rule)
PHI_ID = PhiFunction("id", lambda module, subset: subset)

PHI_REGISTRY: Dict[str, PhiFunction] = {
    phi.name: phi for phi in (PHI_EMPTY, PHI_ZERO, PHI_IDEAL, PHI_ID)
}

# Ring-side functions on hyperideals, used where a statement pairs φ with a φ′ on R.
IDEAL_PHI_REGISTRY: Dict[str, Callable[[Hyperring, int], int]] = {
    "empty": lambda ring, ideal: 0,
    "zero": lambda ring, ideal: ring.zero_mask,
}


def lift_phi(phi: PhiFunction, projection: Homomorphism, subset: int) -> PhiFunction:
    """φ_N on M/N: K/N ↦ f(φ(K), N, 0^(m-2))/N."""
    source, target = projection.source, projection.target

    def rule(module: Hypermodule, lifted: int) -> int:
        if module is not target:
            raise StructureError(f"{phi.name}_N is defined on {target.name}, not {module.name}")
        image = phi.apply(source, projection.pull(lifted))
        if not image:
            return 0
        pad = [source.zero_mask] * (source.m - 2)
        return projection.apply(eval_subsets(source.f, [image, subset] + pad))

    return PhiFunction(f"{phi.name}_N", rule)


def product_phi(left: PhiFunction, right: PhiFunction, m1: Hypermodule, m2: Hypermodule) -> PhiFunction:
    """φ1 × φ2 on rectangles Q1 × Q2; every other subset goes to the empty set."""

    def rule(module: Hypermodule, subset: int) -> int:
        q1, q2 = components(subset, m2.size)
        if rectangle(q1, q2, m2.size) != subset:
            return 0
        v1 = left.apply(m1, q1)
        v2 = right.apply(m2, q2)
        if not v1 or not v2:
            return 0
        return rectangle(v1, v2, m2.size)

    return PhiFunction(f"{left.name}x{right.name}", rule)
