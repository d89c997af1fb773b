# tests/test_cli.py
import json
import shutil

import pytest

from hyperprime.formats.structure_file import load_structures
from hyperprime.main import run
from hyperprime.utils.diff_utils import report_diff


def test_classify_example(capsys, fixtures_dir):
    code = run(["classify", str(fixtures_dir / "fix_a.hyp"), "--module", "M", "--sub", "0,2", "--kind", "classical"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "classical-prime: true"


def test_classify_full_module_is_a_usage_error(capsys, fixtures_dir):
    code = run(["classify", str(fixtures_dir / "fix_a.hyp"), "--module", "M", "--sub", "0,1,2,3", "--kind", "classical"])
    assert code == 2
    assert "subhypermodule must be proper" in capsys.readouterr().err


def test_classify_with_witness(capsys, fixtures_dir):
    code = run(["classify", str(fixtures_dir / "z4.hyp"), "--sub", "0", "--kind", "classical", "--witness"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["classical-prime: false", "  counterexample: g(2,2|1)={0}"]


def test_classify_json(capsys, fixtures_dir):
    code = run([
        "classify", str(fixtures_dir / "z4.hyp"), "--sub", "0", "--kind", "phi", "--phi", "zero", "--json",
    ])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] is True
    assert payload["phi"] == "zero"
    assert payload["sub"] == ["0"]


def test_phi_kind_needs_phi(capsys, fixtures_dir):
    code = run(["classify", str(fixtures_dir / "z4.hyp"), "--sub", "0", "--kind", "phi"])
    assert code == 2
    assert "--phi" in capsys.readouterr().err


def test_verify_exit_codes(capsys, fixtures_dir):
    assert run(["verify", str(fixtures_dir / "fix_b.hyp")]) == 0
    out = capsys.readouterr().out
    assert "module H: pass (unital=true)" in out
    assert run(["verify", str(fixtures_dir / "fix_a.hyp")]) == 1
    out = capsys.readouterr().out
    assert "f'.associativity [0 0 1 1 1]" in out


@pytest.mark.parametrize("name", ["fix_a", "fix_b"])
def test_describe_matches_golden(capsys, fixtures_dir, golden_dir, name):
    assert run(["describe", str(fixtures_dir / f"{name}.hyp")]) == 0
    actual = capsys.readouterr().out.splitlines()
    expected = (golden_dir / f"{name}.txt").read_text(encoding="utf-8").splitlines()
    assert report_diff(expected, actual) == {}


def test_timing_line_only_when_not_deterministic(capsys, fixtures_dir):
    run(["subs", str(fixtures_dir / "z2.hyp"), "--no-deterministic"])
    assert capsys.readouterr().out.splitlines()[-1].startswith("elapsed: ")
    run(["subs", str(fixtures_dir / "z2.hyp")])
    assert "elapsed" not in capsys.readouterr().out


def test_subs_and_ideals(capsys, fixtures_dir):
    assert run(["subs", str(fixtures_dir / "z4.hyp"), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["subhypermodules"] == [["0"], ["0", "2"], ["0", "1", "2", "3"]]
    assert payload["maximal"] == [["0", "2"]]
    assert run(["subs", str(fixtures_dir / "fix_a.hyp"), "--ideals"]) == 0
    assert "  hyperideals: {0} {0,2} {0,1,2}" in capsys.readouterr().out.splitlines()


def test_colon(capsys, fixtures_dir):
    assert run(["colon", str(fixtures_dir / "fix_a.hyp"), "--sub", "0,2"]) == 0
    assert capsys.readouterr().out.strip() == "S_{0,2} = {0,1,2}"
    assert run(["colon", str(fixtures_dir / "fix_a.hyp"), "--sub", "0", "--elem", "1"]) == 0
    assert capsys.readouterr().out.strip() == "{0}_1 = {0}"


def test_zeros(capsys, fixtures_dir):
    assert run(["zeros", str(fixtures_dir / "z4.hyp"), "--sub", "0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["weakly_classical_prime"] is True
    assert {"scalars": ["2", "2"], "subset": ["1"]} in payload["zeros"]


def test_quotient_emit_round_trips(capsys, fixtures_dir, tmp_path):
    target = tmp_path / "klein_quotient.hyp"
    code = run(["quotient", str(fixtures_dir / "fix_b.hyp"), "--sub", "0,x", "--emit", str(target)])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "quotient H/[0,x]: 2 cosets"
    assert out[-1] == f"wrote {target}"
    _, modules = load_structures(target)
    assert modules[0].labels == ["[0,x]", "[y,z]"]


def test_product(capsys, fixtures_dir):
    assert run(["product", str(fixtures_dir / "fix_b.hyp"), "--modules", "H,H"]) == 0
    assert "16 elements" in capsys.readouterr().out.splitlines()[0]
    assert run(["product", str(fixtures_dir / "fix_b.hyp"), "--modules", "H,H", "--max-carrier", "8"]) == 2
    assert "above the cap" in capsys.readouterr().err


def test_hom(capsys, fixtures_dir):
    path = str(fixtures_dir / "fix_b.hyp")
    assert run(["hom", path, "--from", "H", "--to", "H", "--map", "0:0,x:y,y:x,z:z"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "homomorphism H -> H: true"
    assert out[1] == "  injective=true surjective=true"
    assert run(["hom", path, "--from", "H", "--to", "H", "--map", "0:0,x:x,y:x,z:z"]) == 1
    assert run(["hom", path, "--from", "H", "--to", "H", "--map", "0:0,x:x"]) == 1
    assert "unassigned" in capsys.readouterr().err


def test_usage_errors(capsys, fixtures_dir, tmp_path):
    assert run(["subs", str(fixtures_dir / "fix_b.hyp"), "--module", "Nope"]) == 2
    assert "no module named 'Nope'" in capsys.readouterr().err
    assert run(["verify", str(tmp_path / "missing.hyp")]) == 2
    assert run(["classify", str(fixtures_dir / "z4.hyp"), "--sub", "0,9", "--kind", "prime"]) == 2
    assert run(["verify"]) == 2
    assert run(["verify", str(fixtures_dir / "z2.hyp"), "--log-level", "loud"]) == 2


def test_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "broken.hyp"
    path.write_text("ring R arity 3 3\nelements 0 1\nbanana\n", encoding="utf-8")
    assert run(["verify", str(path)]) == 2
    assert "line 3:" in capsys.readouterr().err


def test_harness_command(capsys, fixtures_dir, tmp_path):
    shutil.copy(fixtures_dir / "z2.hyp", tmp_path / "z2.hyp")
    code = run(["harness", str(tmp_path), "--theorem", "phi-empty-is-classical,classical-implies-weakly"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-2].startswith("summary: pass=")
    assert out[-1].startswith("coverage: ")


def test_harness_rejects_files_and_unknown_ids(capsys, fixtures_dir):
    assert run(["harness", str(fixtures_dir / "z2.hyp")]) == 2
    assert run(["harness", str(fixtures_dir), "--theorem", "no-such-theorem"]) == 2
    assert "unknown theorem id" in capsys.readouterr().err
