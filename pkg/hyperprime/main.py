# hyperprime/main.py
import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from hyperprime import render
from hyperprime.core.config import get_settings
from hyperprime.core.errors import (
    CapExceeded, HyperprimeError, NotHom, ParseError, UnknownLabel, USAGE_ERRORS,
)
from hyperprime.engine import PHI_REGISTRY, ClassKind, axioms, classify, construct, subobjects
from hyperprime.formats.structure_file import load_structures, parse_structure, serialize_structures
from hyperprime.harness import REQUIRED_COVERAGE, THEOREM_IDS, harness
from hyperprime.models.structures import Hypermodule, Hyperring
from hyperprime.schemas import (
    ClassificationVerdict, CommandConfig, CounterexampleOut, ZeroListing, ZeroWitnessOut,
)
from hyperprime.schemas.command import split_labels
from hyperprime.utils.diff_utils import structure_diff

logger = logging.getLogger(__name__)

Output = Tuple[int, List[str], Any]  # exit code, text lines, JSON payload


class Workspace:
    """Structures parsed from the input file, with label-level selection."""

    def __init__(self, path: Path):
        self.path = path
        self.rings, self.modules = load_structures(path)

    def module(self, name: Optional[str]) -> Hypermodule:
        if name is None:
            if len(self.modules) == 1:
                return self.modules[0]
            raise UnknownLabel(f"{self.path} has {len(self.modules)} modules; choose one with --module")
        for module in self.modules:
            if module.name == name:
                return module
        raise UnknownLabel(f"no module named '{name}' in {self.path}")


def _sub_mask(module: Hypermodule, labels: Optional[List[str]]) -> int:
    if not labels:
        raise UnknownLabel("--sub is required")
    return module.mask_of_labels(labels)


def _emit(path: Path, rings: Sequence[Hyperring], module: Hypermodule) -> List[str]:
    text = serialize_structures(rings, [module])
    path.write_text(text, encoding="utf-8")
    _, reparsed = parse_structure(text)
    diff = structure_diff(module, reparsed[0])
    if diff:
        raise HyperprimeError(f"{path} does not round-trip: {diff}")
    return [f"wrote {path}"]


# --- subcommands ---

def cmd_verify(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    ring_reports = [axioms.verify_ring_axioms(r) for r in ws.rings]
    module_reports = [axioms.verify_module_axioms(m, check_ring=False) for m in ws.modules]
    ok = all(r.ok for r in ring_reports + module_reports)
    payload = [r.model_dump(mode="json") for r in ring_reports + module_reports]
    return (0 if ok else 1), render.verify_lines(ws.rings, ws.modules), payload


def cmd_describe(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    lines = render.describe(ws.rings, ws.modules)
    return 0, lines, {"lines": lines}


def cmd_subs(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    module = ws.module(cfg.module)
    if args.ideals:
        ring = module.ring
        ideals = subobjects.enumerate_hyperideals(ring)
        lines = [f"hyperideals of {ring.name}:"] + render.ideal_lines(ring)
        return 0, lines, {"ring": ring.name, "hyperideals": [h.labels for h in ideals]}
    subs = subobjects.enumerate_subhypermodules(module)
    maximal = subobjects.maximal_subhypermodules(module)
    lines = [f"subhypermodules of {module.name}:"] + render.lattice_lines(module)
    payload = {
        "module": module.name,
        "subhypermodules": [h.labels for h in subs],
        "maximal": [h.labels for h in maximal],
    }
    return 0, lines, payload


def cmd_colon(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    module = ws.module(cfg.module)
    subset = _sub_mask(module, cfg.sub)
    if cfg.elem is None:
        handle = subobjects.colon_sn(module, subset)
        name = f"S_{module.format_mask(subset)}"
    else:
        handle = subobjects.colon_na(module, subset, module.index_of(cfg.elem))
        name = f"{module.format_mask(subset)}_{cfg.elem}"
    return 0, [f"{name} = {handle}"], {"colon": name, "scalars": handle.labels}


def cmd_classify(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    module = ws.module(cfg.module)
    subset = _sub_mask(module, cfg.sub)
    kind = ClassKind(cfg.kind)
    phi = PHI_REGISTRY[cfg.phi] if kind == ClassKind.PHI else None
    witness = classify.counterexample(module, subset, kind, phi)
    if kind == ClassKind.PRIME:
        verdict = classify.is_prime(module, subset)
    else:
        verdict = witness is None
    shown = witness if args.witness and not verdict else None
    lines = render.verdict_lines(module, subset, kind.value, verdict, shown, phi.name if phi else None)
    result = ClassificationVerdict(
        module=module.name, sub=module.labels_of_mask(subset), kind=kind.value,
        phi=phi.name if phi else None, verdict=verdict,
        counterexample=CounterexampleOut(
            scalars=[module.ring.labels[r] for r in shown.scalars], element=module.labels[shown.element],
        ) if shown else None,
    )
    return 0, lines, result.model_dump(mode="json")


def cmd_zeros(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    module = ws.module(cfg.module)
    subset = _sub_mask(module, cfg.sub)
    zeros = classify.find_classical_zeros(module, subset)
    weakly = classify.is_weakly_classical_prime(module, subset)
    listing = ZeroListing(
        module=module.name, sub=module.labels_of_mask(subset), weakly_classical_prime=weakly,
        zeros=[
            ZeroWitnessOut(scalars=[module.ring.labels[r] for r in z.scalars], subset=module.labels_of_mask(z.subset))
            for z in zeros
        ],
    )
    return 0, render.zero_lines(module, subset, zeros, weakly), listing.model_dump(mode="json")


def cmd_quotient(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    module = ws.module(cfg.module)
    subset = _sub_mask(module, cfg.sub)
    quotient, projection = construct.quotient(module, subset)
    if quotient.size > cfg.max_carrier:
        logger.warning("%s has %d elements, above the cap of %d", quotient.name, quotient.size, cfg.max_carrier)
    report = axioms.verify_module_axioms(quotient, check_ring=False)
    kernel = construct.kernel(projection)
    lines = [f"quotient {quotient.name}: {quotient.size} cosets"]
    lines += [f"  {label}" for label in quotient.labels]
    lines.append(f"  kernel of projection: {kernel}")
    lines += render.axiom_lines(report)
    if args.emit:
        lines += _emit(Path(args.emit), [], quotient)
    payload = {
        "quotient": quotient.name,
        "cosets": quotient.labels,
        "kernel": kernel.labels,
        "report": report.model_dump(mode="json"),
    }
    return 0, lines, payload


def cmd_product(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    if len(cfg.modules) != 2:
        raise UnknownLabel("--modules takes exactly two module names")
    left, right = (ws.module(name) for name in cfg.modules)
    if left.size * right.size > cfg.max_carrier:
        raise CapExceeded(
            f"{left.name} x {right.name} has {left.size * right.size} elements, above the cap of {cfg.max_carrier}"
        )
    if args.product_ring:
        product = construct.product_module_over_product_ring(left, right)
    else:
        product = construct.product_same_ring(left, right)
    ring_report = axioms.verify_ring_axioms(product.ring)
    report = axioms.verify_module_axioms(product, check_ring=False)
    lines = [f"product {product.name} over {product.ring.name}: {product.size} elements"]
    if args.product_ring:
        lines += render.axiom_lines(ring_report)
    lines += render.axiom_lines(report)
    if args.emit:
        lines += _emit(Path(args.emit), [product.ring], product)
    payload = {
        "product": product.name,
        "ring": product.ring.name,
        "elements": product.labels,
        "report": report.model_dump(mode="json"),
    }
    return 0, lines, payload


def _parse_map(text: str, source: Hypermodule, target: Hypermodule) -> List[int]:
    pairs: Dict[int, int] = {}
    for item in split_labels(text):
        if ":" not in item:
            raise UnknownLabel(f"expected 'source:target' in '{item}'")
        a, b = item.rsplit(":", 1)
        pairs[source.index_of(a.strip())] = target.index_of(b.strip())
    missing = [source.labels[a] for a in range(source.size) if a not in pairs]
    if missing:
        raise NotHom(f"map leaves {', '.join(missing)} unassigned")
    return [pairs[a] for a in range(source.size)]


def cmd_hom(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    ws = Workspace(cfg.inputs[0])
    source, target = ws.module(args.source), ws.module(args.target)
    h = construct.check_homomorphism(_parse_map(args.map, source, target), source, target)
    kernel = construct.kernel(h)
    image = construct.image(h, source.full_mask)
    lines = [
        f"homomorphism {source.name} -> {target.name}: true",
        f"  injective={render.word(h.is_injective)} surjective={render.word(h.is_surjective)}",
        f"  kernel: {kernel}",
        f"  image: {image}",
    ]
    payload = {
        "source": source.name,
        "target": target.name,
        "injective": h.is_injective,
        "surjective": h.is_surjective,
        "kernel": kernel.labels,
        "image": image.labels,
    }
    return 0, lines, payload


def cmd_harness(cfg: CommandConfig, args: argparse.Namespace) -> Output:
    directory = cfg.inputs[0]
    if not directory.is_dir():
        raise ParseError(f"{directory} is not a directory")
    unknown = sorted(set(cfg.theorems or ()) - set(THEOREM_IDS))
    if unknown:
        raise UnknownLabel(f"unknown theorem id(s): {', '.join(unknown)}")
    corpus = harness.load_corpus(directory, max_carrier=cfg.max_carrier)
    report = harness.run(corpus, theorems=cfg.theorems)
    code = 1 if report.blocking_failures() else 0
    payload = report.model_dump(mode="json")
    payload["coverage_gaps"] = report.coverage_gaps(REQUIRED_COVERAGE)
    return code, render.harness_lines(report, REQUIRED_COVERAGE), payload


COMMANDS: Dict[str, Callable[[CommandConfig, argparse.Namespace], Output]] = {
    "verify": cmd_verify,
    "describe": cmd_describe,
    "subs": cmd_subs,
    "colon": cmd_colon,
    "classify": cmd_classify,
    "zeros": cmd_zeros,
    "quotient": cmd_quotient,
    "product": cmd_product,
    "hom": cmd_hom,
    "harness": cmd_harness,
}


# --- argument parsing ---

def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--deterministic", action=argparse.BooleanOptionalAction, default=settings.HYPERPRIME_DETERMINISTIC,
        help="omit timing lines so identical inputs give identical reports",
    )
    common.add_argument("--max-carrier", type=int, default=settings.HYPERPRIME_MAX_CARRIER)
    common.add_argument(
        "--log-level", default=settings.HYPERPRIME_LOG_LEVEL, type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )

    parser = argparse.ArgumentParser(
        prog="hyperprime", description="Finite Krasner (m,n)-hyperrings, hypermodules and classical prime subhypermodules",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", type=Path)
        return p

    command("verify", "check every axiom of every structure in FILE")
    command("describe", "axiom summaries, lattices and per-subhypermodule classification")

    p = command("subs", "list subhypermodules (or hyperideals of the ring)")
    p.add_argument("--module")
    p.add_argument("--ideals", action="store_true")

    p = command("colon", "print S_N, or N_a with --elem")
    p.add_argument("--module")
    p.add_argument("--sub", required=True)
    p.add_argument("--elem")

    p = command("classify", "decide one classification of a proper subhypermodule")
    p.add_argument("--module")
    p.add_argument("--sub", required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in ClassKind])
    p.add_argument("--phi", choices=list(PHI_REGISTRY))
    p.add_argument("--witness", action="store_true", help="print the first counterexample")

    p = command("zeros", "list classical zeros of a subhypermodule")
    p.add_argument("--module")
    p.add_argument("--sub", required=True)

    p = command("quotient", "build M/N")
    p.add_argument("--module")
    p.add_argument("--sub", required=True)
    p.add_argument("--emit", help="write the quotient as a structure file")

    p = command("product", "build M1 x M2")
    p.add_argument("--modules", required=True)
    p.add_argument("--product-ring", action="store_true", help="act by R1 x R2 instead of a common ring")
    p.add_argument("--emit", help="write the product as a structure file")

    p = command("hom", "check a map between modules of FILE")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--map", required=True, help="'a:b,...' from source labels to target labels")

    p = command("harness", "run every property over the corpus built from DIR")
    p.add_argument("--theorem", help=f"comma-separated ids out of: {', '.join(THEOREM_IDS)}")
    return parser


def _config(args: argparse.Namespace) -> CommandConfig:
    return CommandConfig(
        subcommand=args.subcommand,
        inputs=[args.input],
        module=getattr(args, "module", None),
        modules=getattr(args, "modules", None) or [],
        sub=getattr(args, "sub", None),
        elem=getattr(args, "elem", None),
        kind=getattr(args, "kind", None),
        phi=getattr(args, "phi", None),
        theorems=getattr(args, "theorem", None),
        json_output=args.json,
        deterministic=args.deterministic,
        max_carrier=args.max_carrier,
        zero_search_cap=get_settings().HYPERPRIME_ZERO_SEARCH_CAP,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(
        level=args.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr,
    )
    try:
        cfg = _config(args)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2
    if cfg.kind == ClassKind.PHI.value and cfg.phi is None:
        print("error: --kind phi needs --phi", file=sys.stderr)
        return 2

    started = time.perf_counter()
    try:
        code, lines, payload = COMMANDS[cfg.subcommand](cfg, args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HyperprimeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    if cfg.json_output:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))
    if not cfg.deterministic:
        print(f"elapsed: {time.perf_counter() - started:.3f}s")
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
