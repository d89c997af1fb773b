# hyperprime/render.py
"""Plain-text report lines. The output of `describe` is the golden-file format."""
from typing import Iterable, List, Optional, Sequence

from hyperprime.core.errors import GeneratedNotIdeal, PhiNotSub
from hyperprime.engine import axioms, classify, subobjects
from hyperprime.engine.phi import PHI_REGISTRY
from hyperprime.models.structures import (
    ClassicalZeroWitness, Counterexample, Hypermodule, Hyperring,
)
from hyperprime.schemas.axiom import AxiomReport
from hyperprime.schemas.harness import HarnessReport, PropertyStatus

KIND_LABELS = {
    "prime": "prime",
    "classical": "classical-prime",
    "weakly": "weakly-classical-prime",
    "phi": "phi-classical-prime",
}


def word(flag: bool) -> str:
    return "true" if flag else "false"


def masks(structure, values: Iterable[int]) -> str:
    return " ".join(structure.format_mask(v) for v in values)


# --- axioms ---

def axiom_lines(report: AxiomReport, *, details: bool = False) -> List[str]:
    lines = [report.summary()]
    failures = report.failures()
    if not failures:
        return lines
    if not details:
        return lines + ["  failing: " + ", ".join(c.axiom for c in failures)]
    for check in failures:
        witness = f" [{' '.join(check.witness)}]" if check.witness else ""
        lines.append(f"  {check.axiom}{witness}: {check.detail}")
    return lines


def verify_lines(rings: Sequence[Hyperring], modules: Sequence[Hypermodule]) -> List[str]:
    lines: List[str] = []
    for ring in rings:
        lines += axiom_lines(axioms.verify_ring_axioms(ring), details=True)
    for module in modules:
        lines += axiom_lines(axioms.verify_module_axioms(module, check_ring=False), details=True)
    return lines


# --- lattices ---

def ideal_lines(ring: Hyperring) -> List[str]:
    ideals = subobjects.enumerate_hyperideals(ring)
    generated = []
    for x in range(ring.size):
        try:
            generated.append(f"<{ring.labels[x]}>={subobjects.generated_hyperideal(ring, x)}")
        except GeneratedNotIdeal:
            generated.append(f"<{ring.labels[x]}>=not a hyperideal")
    return [
        "  hyperideals: " + masks(ring, (h.members for h in ideals)),
        "  generated: " + " ".join(generated),
    ]


def lattice_lines(module: Hypermodule) -> List[str]:
    subs = subobjects.enumerate_subhypermodules(module)
    maximal = subobjects.maximal_subhypermodules(module)
    return [
        "  subhypermodules: " + masks(module, (h.members for h in subs)),
        "  maximal: " + (masks(module, (h.members for h in maximal)) or "none"),
    ]


# --- classification ---

def _phi_word(module: Hypermodule, subset: int, name: str) -> str:
    try:
        return word(classify.is_phi_classical_prime(module, subset, PHI_REGISTRY[name]))
    except PhiNotSub:
        return "-"


def sub_line(module: Hypermodule, subset: int) -> str:
    scalars = subobjects.colon_sn(module, subset)
    phis = ",".join(_phi_word(module, subset, name) for name in PHI_REGISTRY)
    return (
        f"  sub {module.format_mask(subset)}: S={scalars}"
        f" prime={word(classify.is_prime(module, subset))}"
        f" classical={word(classify.is_classical_prime(module, subset))}"
        f" weakly={word(classify.is_weakly_classical_prime(module, subset))}"
        f" phi({','.join(PHI_REGISTRY)})={phis}"
    )


def flag_line(module: Hypermodule) -> str:
    return (
        f"  flags: faithful={word(subobjects.is_faithful(module))}"
        f" torsion-free={word(classify.is_torsion_free(module))}"
        f" multiplication={word(classify.is_multiplication_module(module))}"
    )


def describe(rings: Sequence[Hyperring], modules: Sequence[Hypermodule]) -> List[str]:
    lines: List[str] = []
    for ring in rings:
        lines += axiom_lines(axioms.verify_ring_axioms(ring))
        lines += ideal_lines(ring)
    for module in modules:
        lines += axiom_lines(axioms.verify_module_axioms(module, check_ring=False))
        lines += lattice_lines(module)
        for handle in subobjects.enumerate_subhypermodules(module):
            if handle.members != module.full_mask:
                lines.append(sub_line(module, handle.members))
        lines.append(flag_line(module))
    return lines


def counterexample_text(module: Hypermodule, witness: Counterexample) -> str:
    scalars = ",".join(module.ring.labels[r] for r in witness.scalars)
    element = module.labels[witness.element]
    value = module.g.entries[(witness.scalars, witness.element)]
    return f"g({scalars}|{element})={module.format_mask(value)}"


def verdict_lines(
    module: Hypermodule, subset: int, kind: str, verdict: bool,
    witness: Optional[Counterexample] = None, phi: Optional[str] = None,
) -> List[str]:
    head = f"{KIND_LABELS[kind]}: {word(verdict)}"
    if phi is not None:
        head += f" (phi={phi})"
    lines = [head]
    if witness is not None:
        lines.append(f"  counterexample: {counterexample_text(module, witness)}")
    return lines


def zero_lines(module: Hypermodule, subset: int, zeros: Sequence[ClassicalZeroWitness], weakly: bool) -> List[str]:
    lines = [
        f"classical zeros of {module.format_mask(subset)} in {module.name}: {len(zeros)}"
        + ("" if weakly else " (not weakly classical prime)")
    ]
    for z in zeros:
        scalars = ",".join(module.ring.labels[r] for r in z.scalars)
        lines.append(f"  ({scalars}) {module.format_mask(z.subset)}")
    return lines


# --- harness ---

def harness_lines(report: HarnessReport, required: Sequence[str]) -> List[str]:
    lines: List[str] = []
    for r in report.results:
        if r.status != PropertyStatus.FAIL:
            continue
        tag = "FAIL" if r.verified else "fail (unverified structure)"
        witness = " ".join(f"{k}={v}" for k, v in (r.witness or {}).items())
        lines.append(f"{tag} {r.theorem} {r.structure}: {witness}")
    counts = report.counts()
    lines.append("summary: " + " ".join(f"{status}={counts[status]}" for status in counts))
    gaps = report.coverage_gaps(required)
    lines.append("coverage: " + ("complete" if not gaps else "missing " + ", ".join(gaps)))
    return lines
