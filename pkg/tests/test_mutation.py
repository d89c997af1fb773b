# tests/test_mutation.py
"""Single-entry table mutations must be caught by verification or by the describe report."""
import dataclasses
import random

import pytest

from hyperprime import render
from hyperprime.engine.axioms import axioms
from hyperprime.engine.classify import classify
from hyperprime.harness import harness
from hyperprime.models.structures import ActionTable, HyperOpTable
from hyperprime.schemas.harness import PropertyStatus

MUTATIONS = 20


def _other_mask(rng: random.Random, current: int, size: int, singleton: bool) -> int:
    if singleton:
        choices = [1 << i for i in range(size) if 1 << i != current]
    else:
        choices = [mask for mask in range(1, 1 << size) if mask != current]
    return rng.choice(choices)


def _mutate(rng: random.Random, ring, module):
    """One changed entry in one of f', g', f or g; returns (ring, module, what)."""
    target = rng.choice(["f'", "g'", "f", "g"])
    if target in ("f'", "g'"):
        table = ring.f_prime if target == "f'" else ring.g_prime
        key = rng.choice(sorted(table.entries))
        entries = dict(table.entries)
        entries[key] = _other_mask(rng, entries[key], ring.size, singleton=target == "g'")
        field = "f_prime" if target == "f'" else "g_prime"
        mutated_ring = dataclasses.replace(ring, **{field: dataclasses.replace(table, entries=entries)})
        return mutated_ring, dataclasses.replace(module, ring=mutated_ring), f"{target}{key}"
    if target == "f":
        table = module.f
        key = rng.choice(sorted(table.entries))
        entries = dict(table.entries)
        entries[key] = _other_mask(rng, entries[key], module.size, singleton=False)
        return ring, dataclasses.replace(module, f=dataclasses.replace(table, entries=entries)), f"f{key}"
    table = module.g
    key = rng.choice(sorted(table.entries))
    entries = dict(table.entries)
    entries[key] = _other_mask(rng, entries[key], module.size, singleton=False)
    return ring, dataclasses.replace(module, g=dataclasses.replace(table, entries=entries)), f"g{key}"


def _caught(ring, module, baseline) -> bool:
    ok = axioms.verify_ring_axioms(ring).ok and axioms.verify_module_axioms(module, check_ring=False).ok
    return not ok or render.describe([ring], [module]) != baseline


@pytest.mark.parametrize("name, seed", [("fix_a", 7), ("fix_b", 11)])
def test_random_single_entry_mutations_are_caught(request, name, seed):
    ring, module = request.getfixturevalue(name)
    baseline = render.describe([ring], [module])
    rng = random.Random(seed)
    escaped = []
    for _ in range(MUTATIONS):
        mutated_ring, mutated_module, what = _mutate(rng, ring, module)
        if not _caught(mutated_ring, mutated_module, baseline):
            escaped.append(what)
    assert escaped == []


def test_fix_a_ring_mutation_has_witness(fix_a):
    ring, _ = fix_a
    entries = dict(ring.f_prime.entries)
    entries[(0, 0, 2)] = 0b010
    mutated = dataclasses.replace(ring, f_prime=HyperOpTable(3, 3, entries))
    failures = axioms.verify_ring_axioms(mutated).failures()
    assert failures
    assert any(c.witness for c in failures)


def test_fix_a_action_mutation_has_witness(fix_a):
    _, module = fix_a
    entries = dict(module.g.entries)
    entries[((1, 2), 1)] = 0b0010
    mutated = dataclasses.replace(module, g=ActionTable(2, 3, 4, entries))
    failures = axioms.verify_module_axioms(mutated, check_ring=False).failures()
    assert any(c.witness for c in failures)


def test_klein_action_mutation_fails_verification(fix_b):
    _, klein = fix_b
    entries = dict(klein.g.entries)
    entries[((1, 1), 1)] = 0b0110
    mutated = dataclasses.replace(klein, g=ActionTable(2, 2, 4, entries))
    assert not axioms.verify_module_axioms(mutated).ok


def test_broken_classifier_is_caught_by_harness(monkeypatch, z4):
    _, module = z4
    # claims every proper subhypermodule is classical prime
    monkeypatch.setattr(classify, "counterexample", lambda *args, **kwargs: None)
    corpus = harness.build_corpus([("z4", [module])], max_carrier=4)
    report = harness.run(corpus, theorems=["classical-ideal-form"])
    failing = [r for r in report.blocking_failures() if r.structure == "z4/Z4M"]
    assert failing
    assert failing[0].status == PropertyStatus.FAIL
    assert failing[0].witness["sub"] == ["0"]
