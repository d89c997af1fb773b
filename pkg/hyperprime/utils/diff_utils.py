# hyperprime/utils/diff_utils.py
from deepdiff import DeepDiff
from typing import Any, Dict, List, Sequence

from hyperprime.models.structures import Hyperring, Structure


def _op_snapshot(labels: Sequence[str], entries) -> Dict[str, List[str]]:
    return {
        " ".join(labels[i] for i in key): [labels[i] for i in range(len(labels)) if mask >> i & 1]
        for key, mask in entries.items()
    }


def structure_snapshot(structure: Structure) -> Dict[str, Any]:
    """Label-level view of a structure, independent of internal indices."""
    labels = structure.labels
    if isinstance(structure, Hyperring):
        return {
            "name": structure.name,
            "arity": [structure.m, structure.n],
            "elements": labels,
            "zero": structure.zero.label,
            "one": structure.one.label,
            "f": _op_snapshot(labels, structure.f_prime.entries),
            "g": _op_snapshot(labels, structure.g_prime.entries),
        }
    ring_labels = structure.ring.labels
    return {
        "name": structure.name,
        "ring": structure_snapshot(structure.ring),
        "elements": labels,
        "zero": structure.zero.label,
        "unital": structure.unital,
        "f": _op_snapshot(labels, structure.f.entries),
        "g": {
            f"{' '.join(ring_labels[r] for r in scalars)} | {labels[a]}": [
                labels[i] for i in range(len(labels)) if mask >> i & 1
            ]
            for (scalars, a), mask in structure.g.entries.items()
        },
    }


def structure_diff(left: Structure, right: Structure) -> Dict[str, Any]:
    """Empty dict iff the two structures are extensionally identical."""
    diff = DeepDiff(structure_snapshot(left), structure_snapshot(right), ignore_order=True, verbose_level=0)
    return diff.to_dict()


def report_diff(expected: Sequence[str], actual: Sequence[str]) -> Dict[str, Any]:
    """Line-level difference between two plain-text reports (order matters)."""
    diff = DeepDiff(list(expected), list(actual), verbose_level=0)
    return diff.to_dict()
