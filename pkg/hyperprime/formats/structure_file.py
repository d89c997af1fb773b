# hyperprime/formats/structure_file.py
"""Line-based structure files.

    ring R arity 3 3
    elements 0 1 2
    zero 0
    one 1
    f 0 0 1 = 1
    g 0 1 2 = 0
    module M over R
    elements 0 1 2 3
    zero 0
    unital false
    f 0 1 2 = 0 1 2
    g 1 2 | 1 = 2

Tuples may be listed in any order; they are stored sorted, so a permutation
of an already listed tuple is a duplicate.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from hyperprime.core.errors import ParseError, StructureError
from hyperprime.models.structures import (
    ActionTable, Element, HyperOpTable, Hypermodule, Hyperring,
)

logger = logging.getLogger(__name__)

_DIRECTIVES = {"ring", "module", "elements", "zero", "one", "unital", "f", "g"}


@dataclass
class _Entry:
    line: int
    args: List[str]
    result: List[str]
    element: Optional[str] = None  # module g only


@dataclass
class _Block:
    kind: str
    name: str
    line: int
    m: Optional[int] = None
    n: Optional[int] = None
    over: Optional[str] = None
    labels: Optional[List[str]] = None
    zero: Optional[Tuple[int, str]] = None
    one: Optional[Tuple[int, str]] = None
    unital: bool = False
    f: List[_Entry] = field(default_factory=list)
    g: List[_Entry] = field(default_factory=list)


def _split_entry(line_no: int, tokens: List[str]) -> Tuple[List[str], List[str]]:
    if "=" not in tokens:
        raise ParseError(f"expected '=' in '{' '.join(tokens)}'", line_no)
    eq = tokens.index("=")
    return tokens[1:eq], tokens[eq + 1:]


def _scan(text: str) -> List[_Block]:
    blocks: List[_Block] = []
    current: Optional[_Block] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head = tokens[0]
        if head not in _DIRECTIVES:
            raise ParseError(f"unknown directive '{head}'", line_no)
        if head == "ring":
            if len(tokens) != 5 or tokens[2] != "arity":
                raise ParseError("expected 'ring NAME arity M N'", line_no)
            try:
                m, n = int(tokens[3]), int(tokens[4])
            except ValueError:
                raise ParseError("arities must be integers", line_no) from None
            current = _Block(kind="ring", name=tokens[1], line=line_no, m=m, n=n)
            blocks.append(current)
            continue
        if head == "module":
            if len(tokens) != 4 or tokens[2] != "over":
                raise ParseError("expected 'module NAME over RING'", line_no)
            current = _Block(kind="module", name=tokens[1], line=line_no, over=tokens[3])
            blocks.append(current)
            continue
        if current is None:
            raise ParseError(f"'{head}' outside a ring or module block", line_no)
        if head == "elements":
            if current.labels is not None:
                raise ParseError("elements listed twice", line_no)
            labels = tokens[1:]
            if not labels:
                raise ParseError("empty element list", line_no)
            for label in labels:
                if label in ("=", "|"):
                    raise ParseError(f"'{label}' cannot be an element label", line_no)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate element label", line_no)
            current.labels = labels
        elif head in ("zero", "one"):
            if len(tokens) != 2:
                raise ParseError(f"expected '{head} LABEL'", line_no)
            if head == "one" and current.kind != "ring":
                raise ParseError("'one' belongs to ring blocks", line_no)
            setattr(current, head, (line_no, tokens[1]))
        elif head == "unital":
            if current.kind != "module" or len(tokens) != 2 or tokens[1] not in ("true", "false"):
                raise ParseError("expected 'unital true|false' inside a module block", line_no)
            current.unital = tokens[1] == "true"
        elif head == "f":
            args, result = _split_entry(line_no, tokens)
            current.f.append(_Entry(line_no, args, result))
        else:
            args, result = _split_entry(line_no, tokens)
            element = None
            if current.kind == "module":
                if args.count("|") != 1 or args[-2:-1] != ["|"]:
                    raise ParseError("expected 'g r_1 .. r_{n-1} | a = ...'", line_no)
                element = args[-1]
                args = args[:-2]
            current.g.append(_Entry(line_no, args, result, element))
    return blocks


class _Resolver:
    def __init__(self, block: _Block, labels: Sequence[str]):
        self.block = block
        self.index = {label: i for i, label in enumerate(labels)}

    def __call__(self, label: str, line: int, where: str = "") -> int:
        try:
            return self.index[label]
        except KeyError:
            raise ParseError(f"unknown element label '{label}'{where}", line) from None


def _format(labels: Sequence[str], key: Sequence[int]) -> str:
    return "(" + ",".join(labels[i] for i in key) + ")"


def _build_op(
    block: _Block, entries: List[_Entry], arity: int, labels: Sequence[str], table: str
) -> Dict[Tuple[int, ...], int]:
    resolve = _Resolver(block, labels)
    out: Dict[Tuple[int, ...], int] = {}
    for entry in entries:
        if len(entry.args) != arity:
            raise ParseError(f"{table} expects {arity} arguments, got {len(entry.args)}", entry.line)
        key = tuple(sorted(resolve(a, entry.line) for a in entry.args))
        if key in out:
            raise ParseError(f"duplicate tuple {_format(labels, key)} in table {table}", entry.line)
        if not entry.result:
            raise ParseError(f"empty hyperproduct for {_format(labels, key)}", entry.line)
        mask = 0
        for r in entry.result:
            mask |= 1 << resolve(r, entry.line)
        out[key] = mask
    for key in combinations_with_replacement(range(len(labels)), arity):
        if key not in out:
            raise ParseError(
                f"incomplete table {table} of {block.name}: missing tuple {_format(labels, key)}", block.line
            )
    return out


def _require_labels(block: _Block) -> List[str]:
    if block.labels is None:
        raise ParseError(f"{block.kind} {block.name} has no elements line", block.line)
    return block.labels


def _special(block: _Block, which: str, labels: Sequence[str]) -> Element:
    value = getattr(block, which)
    if value is None:
        raise ParseError(f"{block.kind} {block.name} has no '{which}' line", block.line)
    line, label = value
    if label not in labels:
        raise ParseError(f"unknown element label '{label}'", line)
    return Element(labels.index(label), label)


def _build_ring(block: _Block) -> Hyperring:
    labels = _require_labels(block)
    if block.m < 2 or block.n < 2:
        raise ParseError(f"arities must be at least 2, got ({block.m},{block.n})", block.line)
    if len(labels) < 2:
        raise ParseError(f"ring {block.name}: single-element rings are not supported", block.line)
    f_prime = _build_op(block, block.f, block.m, labels, "f")
    g_prime = _build_op(block, block.g, block.n, labels, "g")
    for entry in block.g:
        if len(entry.result) != 1:
            raise ParseError("g' must be single-valued", entry.line)
    zero = _special(block, "zero", labels)
    one = _special(block, "one", labels)
    try:
        return Hyperring(
            name=block.name, m=block.m, n=block.n,
            carrier=tuple(Element(i, label) for i, label in enumerate(labels)),
            f_prime=HyperOpTable(block.m, len(labels), f_prime),
            g_prime=HyperOpTable(block.n, len(labels), g_prime),
            zero=zero, one=one,
        )
    except StructureError as e:
        raise ParseError(str(e), block.line) from e


def _build_module(block: _Block, ring: Hyperring) -> Hypermodule:
    labels = _require_labels(block)
    f = _build_op(block, block.f, ring.m, labels, "f")
    ring_index = _Resolver(block, ring.labels)
    element_index = _Resolver(block, labels)
    width = ring.n - 1
    action: Dict[Tuple[Tuple[int, ...], int], int] = {}
    for entry in block.g:
        if len(entry.args) != width:
            raise ParseError(f"g expects {width} scalars before '|', got {len(entry.args)}", entry.line)
        scalars = tuple(sorted(ring_index(r, entry.line, f" of ring {ring.name}") for r in entry.args))
        a = element_index(entry.element, entry.line)
        key = (scalars, a)
        if key in action:
            raise ParseError(
                f"duplicate tuple {_format(ring.labels, scalars)} | {labels[a]} in table g", entry.line
            )
        if not entry.result:
            raise ParseError(f"empty hyperproduct for {_format(ring.labels, scalars)} | {labels[a]}", entry.line)
        mask = 0
        for r in entry.result:
            mask |= 1 << element_index(r, entry.line)
        action[key] = mask
    for scalars in combinations_with_replacement(range(ring.size), width):
        for a in range(len(labels)):
            if (scalars, a) not in action:
                raise ParseError(
                    f"incomplete table g of {block.name}: missing tuple "
                    f"{_format(ring.labels, scalars)} | {labels[a]}", block.line
                )
    zero = _special(block, "zero", labels)
    try:
        return Hypermodule(
            name=block.name, ring=ring,
            carrier=tuple(Element(i, label) for i, label in enumerate(labels)),
            f=HyperOpTable(ring.m, len(labels), f),
            g=ActionTable(width, ring.size, len(labels), action),
            zero=zero, unital=block.unital,
        )
    except StructureError as e:
        raise ParseError(str(e), block.line) from e


def parse_structure(text: str) -> Tuple[List[Hyperring], List[Hypermodule]]:
    rings: Dict[str, Hyperring] = {}
    modules: List[Hypermodule] = []
    module_names = set()
    for block in _scan(text):
        if block.kind == "ring":
            if block.name in rings:
                raise ParseError(f"duplicate ring name '{block.name}'", block.line)
            rings[block.name] = _build_ring(block)
        else:
            if block.over not in rings:
                raise ParseError(f"module {block.name} is over unknown ring '{block.over}'", block.line)
            if block.name in module_names:
                raise ParseError(f"duplicate module name '{block.name}'", block.line)
            module_names.add(block.name)
            modules.append(_build_module(block, rings[block.over]))
    logger.debug("parsed %d rings, %d modules", len(rings), len(modules))
    return list(rings.values()), modules


def load_structures(path: Union[str, Path]) -> Tuple[List[Hyperring], List[Hypermodule]]:
    return parse_structure(Path(path).read_text(encoding="utf-8"))


def _op_lines(head: str, labels: Sequence[str], entries) -> List[str]:
    lines = []
    for key in sorted(entries):
        result = " ".join(labels[i] for i in range(len(labels)) if entries[key] >> i & 1)
        lines.append(f"{head} {' '.join(labels[i] for i in key)} = {result}")
    return lines


def serialize_ring(ring: Hyperring) -> List[str]:
    labels = ring.labels
    lines = [
        f"ring {ring.name} arity {ring.m} {ring.n}",
        f"elements {' '.join(labels)}",
        f"zero {ring.zero.label}",
        f"one {ring.one.label}",
    ]
    lines += _op_lines("f", labels, ring.f_prime.entries)
    lines += _op_lines("g", labels, ring.g_prime.entries)
    return lines


def serialize_module(module: Hypermodule) -> List[str]:
    labels = module.labels
    ring_labels = module.ring.labels
    lines = [
        f"module {module.name} over {module.ring.name}",
        f"elements {' '.join(labels)}",
        f"zero {module.zero.label}",
        f"unital {'true' if module.unital else 'false'}",
    ]
    lines += _op_lines("f", labels, module.f.entries)
    for scalars, a in sorted(module.g.entries):
        mask = module.g.entries[(scalars, a)]
        result = " ".join(labels[i] for i in range(len(labels)) if mask >> i & 1)
        lines.append(f"g {' '.join(ring_labels[r] for r in scalars)} | {labels[a]} = {result}")
    return lines


def serialize_structures(rings: Sequence[Hyperring], modules: Sequence[Hypermodule]) -> str:
    """Rings first, then modules; a module's ring is added if it is not listed."""
    ordered: List[Hyperring] = list(rings)
    for module in modules:
        if not any(r is module.ring for r in ordered):
            ordered.append(module.ring)
    lines: List[str] = []
    for ring in ordered:
        lines += serialize_ring(ring)
    for module in modules:
        lines += serialize_module(module)
    return "\n".join(lines) + "\n"
