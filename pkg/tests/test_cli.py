import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from truncdet.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, build_parser, config_from_args, run


def call(argv):
    cfg = config_from_args(build_parser().parse_args(argv))
    buf = io.StringIO()
    status = run(cfg, buf)
    return status, buf.getvalue()


def schema(name):
    text = resources.files("truncdet").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def test_census_example():
    status, out = call(["census", "--m", "3", "--n", "3", "--r", "2", "--k", "2"])
    doc = json.loads(out)
    assert status == EXIT_OK
    assert [c["codim"] for c in doc["components"]] == [8, 9] and doc["variety_codim"] == 8
    jsonschema.validate(doc, schema("census"))


def test_hilbert_example():
    status, out = call(["hilbert", "--m", "2", "--k", "1"])
    doc = json.loads(out)
    assert status == EXIT_OK and doc["degree"] == 2 and doc["fvector"] == [4, 5, 2]
    assert doc["H"]["2"] == 9
    jsonschema.validate(doc, schema("hilbert"))


def test_gb_check_example():
    status, out = call(["gb-check", "--m", "2", "--k", "2"])
    doc = json.loads(out)
    assert status == EXIT_OK and doc["ok"]
    assert doc["pairwise_coprime"] and doc["spairs_reduce_to_zero"] and doc["lead_terms_squarefree"]
    jsonschema.validate(doc, schema("gb_report"))


def test_gb_check_inconclusive_exit():
    status, out = call(["gb-check", "--m", "3", "--k", "3", "--max-steps", "3"])
    assert status == EXIT_INCONCLUSIVE
    jsonschema.validate(json.loads(out), schema("gb_report"))


def test_ideal_text_examples():
    _, out = call(["ideal", "--m", "2", "--n", "2", "--r", "2", "--k", "1"])
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert body == ["x[1,1,0]*x[2,2,0] - x[1,2,0]*x[2,1,0]"]
    _, out = call(["ideal", "--m", "1", "--n", "2", "--r", "1", "--k", "2"])
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert sorted(body) == ["x[1,1,0]", "x[1,1,1]", "x[1,2,0]", "x[1,2,1]"]
    _, out = call(["ideal", "--m", "2", "--n", "3", "--r", "2", "--k", "2"])
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[0] == "# rows=1,2 cols=1,2 w=0"


def test_ideal_json_schema():
    status, out = call(["ideal", "--m", "2", "--n", "3", "--r", "2", "--k", "2", "--format", "json"])
    doc = json.loads(out)
    assert status == EXIT_OK and len(doc["generators"]) == 6
    jsonschema.validate(doc, schema("ideal"))


def test_ideal_output_file_is_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        status, _ = call(["ideal", "--m", "3", "--n", "3", "--r", "2", "--k", "2", "--output", str(path)])
        assert status == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().count(b"\n# rows=") == 2 * 9 - 1


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "--m", "2", "--n", "3", "--r", "2", "--k", "3"],
        ["count", "--m", "2", "--n", "2", "--r", "2", "--k", "2", "--q", "2", "--ring-level"],
        ["witness", "--kind", "intersection", "--m", "3", "--n", "3", "--k", "4"],
        ["witness", "--kind", "lift", "--m", "3", "--n", "3", "--r", "2", "--k", "2", "--q", "5", "--seed", "7"],
    ],
)
def test_reports_deterministic(argv):
    assert call(argv) == call(argv)


def test_count_schema_and_value():
    status, out = call(["count", "--m", "2", "--n", "2", "--r", "2", "--k", "1", "--q", "2"])
    doc = json.loads(out)
    assert status == EXIT_OK and doc["count"] == 10
    jsonschema.validate(doc, schema("count"))


@pytest.mark.parametrize(
    "argv",
    [
        ["witness", "--kind", "separation", "--m", "3", "--n", "3", "--k", "5", "--s", "1", "--alpha", "1"],
        ["witness", "--kind", "intersection", "--m", "3", "--n", "3", "--k", "3"],
        ["witness", "--kind", "lift", "--m", "3", "--n", "4", "--r", "3", "--k", "2", "--q", "7", "--seed", "1"],
    ],
)
def test_witness_reports(argv):
    status, out = call(argv)
    doc = json.loads(out)
    assert status == EXIT_OK and doc["ok"]
    jsonschema.validate(doc, schema("witness"))


@pytest.mark.parametrize(
    "argv, msg",
    [
        (["census", "--m", "3", "--n", "3", "--r", "4", "--k", "2"], "r <= m required"),
        (["census", "--m", "4", "--n", "3", "--r", "2", "--k", "2"], "m <= n required"),
        (["count", "--m", "2", "--n", "2", "--r", "2", "--k", "1", "--q", "4"], "prime"),
        (["census", "--m", "3", "--n", "3", "--k", "2"], "--r is required"),
        (["witness", "--kind", "separation", "--m", "3", "--n", "3", "--k", "4", "--s", "2"], "floor"),
        (["witness", "--kind", "intersection", "--m", "3", "--n", "3", "--k", "3", "--q", "5"], "too small"),
    ],
)
def test_usage_errors(argv, msg, capsys):
    status, out = call(argv)
    assert status == EXIT_USAGE and out == ""
    assert msg in capsys.readouterr().err


def test_cap_is_inconclusive(capsys):
    status, _ = call(["count", "--m", "3", "--n", "3", "--r", "2", "--k", "3", "--q", "5"])
    assert status == EXIT_INCONCLUSIVE
    assert "exceeds cap" in capsys.readouterr().err


def test_verification_failure_exit(monkeypatch):
    import truncdet.cli as cli

    monkeypatch.setattr(cli, "verify_separation_witness", lambda pt, s, a: {"membership": False})
    status, out = call(["witness", "--kind", "separation", "--m", "3", "--n", "3", "--k", "2"])
    assert status == EXIT_FAIL and json.loads(out)["ok"] is False


def test_argparse_errors_exit_2():
    proc = subprocess.run(
        [sys.executable, "-m", "truncdet.cli", "census", "--m", "x"], capture_output=True, text=True
    )
    assert proc.returncode == EXIT_USAGE


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "truncdet.cli", "census", "--m", "3", "--n", "4", "--r", "2", "--k", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["variety_codim"] == 18


@pytest.mark.parametrize("name", ["ideal", "gb_report", "hilbert", "census", "count", "witness"])
def test_schema_files_are_valid(name):
    jsonschema.Draft202012Validator.check_schema(schema(name))
