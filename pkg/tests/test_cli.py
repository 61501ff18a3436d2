import io
import json
import shutil

import pytest

from dimerlab.cli import COMMANDS, run
from dimerlab.monomials import SemigroupAlgebra
from dimerlab.tiling import tiling_from_dict

from conftest import FIXTURES


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_validate_conifold():
    code, out, _ = invoke("validate", "conifold")
    assert code == 0
    assert out.startswith("conifold: ok")


def test_matchings_conifold():
    code, out, _ = invoke("matchings", "conifold", "--json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["perfect"]) == 4 and len(doc["simple"]) == 4


def test_center_report_json():
    code, out, _ = invoke("center-report", "fig1-Q", "--contract", "green", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["special_fiber"]["gdim"] == 2
    assert doc["cyclic"]["verdict"] == "cyclic"
    assert SemigroupAlgebra.from_dict(doc["S"]).rank == 3


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_is_deterministic(command):
    argv = (command, "fig1-Q", "--contract", "green")
    for fmt in ((), ("--json",)):
        first = invoke(*argv, *fmt)
        second = invoke(*argv, *fmt)
        assert first == second
        assert first[0] == 0
        if fmt:
            doc = json.loads(first[1])
            assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == first[1]


def test_contract_output_round_trips():
    _, out, _ = invoke("contract", "fig1-Q", "--contract", "4,5,6,7", "--json")
    doc = json.loads(out)
    target = tiling_from_dict(doc["target"])
    _, out2, _ = invoke("validate", "conifold", "--json")
    assert target.vertices == 2 and len(target.arrows) == 4
    assert json.loads(out2)["ok"]


def test_usage_errors():
    assert invoke("frobnicate", "conifold")[0] == 2
    assert invoke("validate", "no-such-fixture")[0] == 2
    assert invoke("validate", "conifold", "--deg-bound", "x")[0] == 2
    assert invoke("check-cyclic", "fig1-Q", "--contract", "blue")[0] == 2
    assert invoke("check-cyclic", "fig1-Q", "--contract", "99")[0] == 2
    assert invoke("matchings", "k-plus-xS")[0] == 2


def test_unreadable_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert invoke("validate", str(bad))[0] == 2


def test_invalid_quiver_exits_1(tmp_path):
    doc = json.loads((FIXTURES / "conifold.json").read_text())
    doc["faces"][1]["color"] = "plus"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, out, _ = invoke("validate", str(path))
    assert code == 1 and "INVALID" in out
    assert invoke("matchings", str(path))[0] == 1


def test_structural_failure_exits_1():
    # no simple matchings before contracting
    assert invoke("center-report", "fig1-Q")[0] == 1


def test_fixture_directory_override(tmp_path, monkeypatch):
    shutil.copy(FIXTURES / "conifold.json", tmp_path / "other.json")
    monkeypatch.setenv("DIMERLAB_FIXTURES", str(tmp_path))
    assert invoke("validate", "other")[0] == 0
    assert invoke("validate", "conifold")[0] == 2


def test_monomial_model_commands():
    code, out, _ = invoke("locus", "k-plus-xS", "--json")
    assert code == 0 and json.loads(out)["gdim"] == 1
    code, out, _ = invoke("witness", "k-plus-xS", "--json")
    assert json.loads(out)["witness"]["h"] == [0, 1]
