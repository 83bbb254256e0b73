"""The command line front end: exit codes, records and determinism."""

import json
import subprocess
import sys

import pytest

from dblcat import fixtures as fx
from dblcat.cli import main
from dblcat.criteria import CLI_CASES, run_cli


@pytest.fixture(scope="module")
def examples(tmp_path_factory):
    d = tmp_path_factory.mktemp("examples")
    fx.export_examples(d)
    return d


@pytest.mark.parametrize("argv,code", CLI_CASES, ids=lambda x: " ".join(x[:2]) if isinstance(x, list) else str(x))
def test_exit_codes(examples, argv, code):
    got, recs = run_cli(argv, examples)
    assert got == code
    for r in recs:
        assert set(r) <= {"check", "status", "witness"}
        assert r["status"] in ("pass", "fail")


def test_chain_report(examples):
    _, recs = run_cli(["freecat", "chain_abc.json"], examples)
    assert {"check": "category", "status": "pass", "witness": {"objects": 3, "morphisms": 6}} in recs


def test_cycle_report(examples):
    code, recs = run_cli(["freecat", "cycle.json"], examples)
    assert code == 1
    assert sorted(recs[0]["witness"]["cycle"]) == ["x", "y"]


def test_repeat_runs_identical(examples):
    argv = ["adjoint", "--f", "adj_F.json", "--g", "adj_G.json", "--unit", "adj_unit.json",
            "--counit", "adj_counit.json", "--mode", "param"]
    assert run_cli(argv, examples) == run_cli(argv, examples)


def test_missing_mode_inputs(examples):
    code, recs = run_cli(["adjoint", "--f", "adj_F.json", "--mode", "uc"], examples)
    assert code == 2 and recs[-1]["check"] == "input"


def test_malformed_json(examples, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, recs = run_cli(["validate", str(p)], examples)
    assert code == 2
    assert recs[0]["witness"]["error"] == "MalformedInput"


def test_invalid_double_category(examples, tmp_path):
    D = json.loads((examples / "terminal.json").read_text())
    D["hcomp_h"] = []
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(D))
    code, recs = run_cli(["validate", str(p)], examples)
    assert code == 1
    assert any(r["status"] == "fail" and r["witness"]["first"] for r in recs)


def test_quintet_with_end_and_mnd(examples):
    code, recs = run_cli(["quintet", "--k", "2cat_M.json", "--variant", "inverse", "--endmnd"], examples)
    assert code == 0
    assert any(r["check"].startswith("Mnd iso") for r in recs)


def test_freemonads_from_files(examples):
    code, _ = run_cli(["freemonads", "--base", "Qbar_Kt.json", "--cofolding", "Qbar_Kt_cofolding.json",
                       "--hfree", "Qbar_Kt_hfree.json"], examples)
    assert code == 0


def test_accept_one_criterion(examples):
    code, recs = run_cli(["--seed", "5", "accept", "7"], examples)
    assert code == 0 and len(recs) == 1 and recs[0]["check"].startswith("criterion 7")


def test_stdout_and_module_entry(examples):
    out = subprocess.run([sys.executable, "-m", "dblcat", "validate", "terminal.json"],
                         cwd=examples, capture_output=True, text=True)
    assert out.returncode == 0
    assert all(json.loads(line)["status"] == "pass" for line in out.stdout.splitlines())


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["validate"])
    assert info.value.code == 2
