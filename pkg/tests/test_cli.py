import json
import subprocess
import sys

import pytest

from modforge import cli
from modforge.corpus import corpus_generate
from modforge.serialize import load_document
from modforge.errors import SpecError

Z4_MIXED = {"ring": {"kind": "zmod", "n": 4},
            "presentation": {"rows": 2, "cols": 1, "entries": [[[2]], [[0]]]}}
Z4_FREE = {"ring": {"kind": "zmod", "n": 4},
           "presentation": {"rows": 2, "cols": 0, "entries": [[], []]}}
F2XY_RESIDUE = {"ring": {"kind": "truncated_poly", "base": {"kind": "zmod", "n": 2},
                         "vars": 2, "degree": 2},
                "presentation": {"rows": 1, "cols": 2, "entries": [[[0, 1, 0], [0, 0, 1]]]}}
NONCOMMUTATIVE = {"ring": {"kind": "table", "orders": [2, 2], "one": [1, 0],
                           "mul": [[[1, 0], [0, 1]], [[0, 0], [0, 1]]]}}


def write(tmp_path, doc, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(argv):
    report, code, _ = cli.run(argv)
    return report, code


@pytest.mark.parametrize("command", ["validate", "analyze", "decompose", "gl"])
def test_report_commands_exit_zero(tmp_path, command):
    report, code = run([command, "-i", write(tmp_path, Z4_MIXED)])
    assert code == 0 and report["exit_code"] == 0
    assert report["command"] == command and len(report["input_sha256"]) == 64


def test_analyze_fields(tmp_path):
    report, _ = run(["analyze", "-i", write(tmp_path, Z4_MIXED)])
    res = report["result"]
    assert res["free"] is False and res["oracle_free"] is False
    assert res["flattening_ideal"]["elements"] == [[0], [2]]
    assert res["universal_property"]["passed"]


def test_certify_exit_three_and_recheck(tmp_path):
    path = write(tmp_path, Z4_MIXED)
    out = tmp_path / "cert.json"
    assert cli.main(["certify", "-i", path, "-o", str(out)]) == 3
    report = json.loads(out.read_text())
    assert report["result"]["verdict"] == "non-representable"
    again, code = run(["recheck", "-i", str(out)])
    assert code == 3 and again["result"]["valid"]


def test_certify_free_exit_zero(tmp_path):
    report, code = run(["certify", "-i", write(tmp_path, Z4_FREE)])
    assert code == 0 and report["result"]["verdict"] == "representable"


def test_recheck_tampered_exit_five(tmp_path):
    path = write(tmp_path, F2XY_RESIDUE)
    report, code = run(["certify", "-i", path])
    assert code == 3
    report["result"]["phantoms"] = report["result"]["phantoms"][:1]
    bad, code = run(["recheck", "-i", write(tmp_path, report, "bad.json")])
    assert code == 5 and bad["error"]["type"] == "InvariantViolation"


def test_recheck_malformed_exit_two(tmp_path):
    _, code = run(["recheck", "-i", write(tmp_path, {"verdict": "non-representable"})])
    assert code == 2


def test_input_errors_exit_two(tmp_path):
    report, code = run(["validate", "-i", write(tmp_path, NONCOMMUTATIVE)])
    assert code == 2 and report["error"]["type"] == "RingAxiomError"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["validate", "-i", str(bad)])[1] == 2
    assert run(["validate", "-i", str(tmp_path / "missing.json")])[1] == 2
    nonlocal_doc = {"ring": {"kind": "zmod", "n": 6},
                    "presentation": {"rows": 1, "cols": 1, "entries": [[[2]]]}}
    assert run(["analyze", "-i", write(tmp_path, nonlocal_doc)])[1] == 2
    assert run(["certify", "-i", write(tmp_path, nonlocal_doc)])[1] == 2


def test_cap_exceeded_exit_four(tmp_path):
    report, code = run(["analyze", "-i", write(tmp_path, Z4_MIXED), "--cap-ring", "2"])
    assert code == 4 and report["error"]["type"] == "CapExceeded"
    _, code = run(["gl", "-i", write(tmp_path, Z4_MIXED), "--cap-enum", "4"])
    assert code == 4


def test_gl_with_quotient_and_submodule(tmp_path):
    doc = dict(Z4_MIXED, quotient=[[2]], submodule=[0])
    report, code = run(["gl", "-i", write(tmp_path, doc)])
    assert code == 0
    assert report["result"]["order"] == 6
    assert report["result"]["parabolic"]["order"] == 2


def test_decompose_modes(tmp_path):
    direct, _ = run(["decompose", "-i", write(tmp_path, Z4_MIXED)])
    assert direct["result"]["mode"] == "direct"
    assert all(direct["result"]["decomposition"]["checks"].values())
    reduced, _ = run(["decompose", "-i", write(tmp_path, F2XY_RESIDUE)])
    assert reduced["result"]["mode"] == "reduced"
    assert len(reduced["result"]["trace"]["steps"]) == 1


def test_timing_is_opt_in(tmp_path):
    path = write(tmp_path, Z4_MIXED)
    assert "timing_seconds" not in run(["validate", "-i", path])[0]
    assert "timing_seconds" in run(["validate", "-i", path, "--timing"])[0]


def test_human_output(tmp_path, capsys):
    assert cli.main(["analyze", "-i", write(tmp_path, Z4_MIXED), "--human"]) == 0
    out = capsys.readouterr().out
    assert "verdict: not locally free" in out


def test_console_script_stdin():
    proc = subprocess.run([sys.executable, "-m", "modforge.cli", "validate"],
                          input=json.dumps(Z4_MIXED), capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["module"]["order"] == 8


def test_corpus_command(tmp_path):
    report, code = run(["corpus", "--bound", "4", "-o", str(tmp_path / "c")])
    assert code == 0
    names = [r["name"] for r in report["result"]["rings"]]
    assert names == ["Z2", "Z4", "F4", "F2_eps"]
    manifest = json.loads((tmp_path / "c" / "manifest.json").read_text())
    assert manifest["bound"] == 4


def test_corpus_sizes(tmp_path):
    manifest = corpus_generate(16, tmp_path)
    assert sum(r["presentations"] for r in manifest) == 2628
    assert all((tmp_path / f"{r['name']}.modules.json").exists() for r in manifest)


def test_load_document_rejects_non_object():
    with pytest.raises(SpecError):
        load_document("[1, 2]")
