import csv
import io
import json

import jsonschema
import pytest

from knotbeta.cli import main
from knotbeta.diagram import parse_long_pd, render_pd, validate
from knotbeta.serialize import BATCH_COLUMNS, BATCH_SCHEMA, COMPUTE_SCHEMA, REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text_paper(capsys):
    code, out, _ = run(capsys, "compute", "--example", "paper")
    assert code == 0
    assert "beta  = -x^-2 + 3x^-1 - 3 + 3x - x^2" in out
    assert "delta = x - 3x^2 + 3x^3 - 3x^4 + x^5" in out
    assert "l = 3" in out


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--example", "paper", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, COMPUTE_SCHEMA)
    assert doc["beta"] == {"-2": -1, "-1": 3, "0": -3, "1": 3, "2": -1}
    assert doc["sigma"] == [1, 1, 1, -1, -1, 1]


def test_compute_inline_braid(capsys):
    code, out, _ = run(capsys, "compute", "--braid", "strands 2; s1 s1 s1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["beta_text"] == "x^-1 - 1 + x"
    assert doc["delta_normalized"] == "1 - x + x^2"
    assert doc["l"] == 2


def test_compute_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    f = tmp_path / "k.braid"
    f.write_text("strands 3\ns1 s2^-1 s1 s2^-1\n")
    _, out, _ = run(capsys, "compute", str(f), "--format", "json")
    assert json.loads(out)["delta_normalized"] == "1 - 3x + x^2"
    monkeypatch.setattr("sys.stdin", io.StringIO("X(0,1,1,0)"))
    _, out, _ = run(capsys, "compute", "-", "--format", "json")
    assert json.loads(out)["n"] == 1


def test_basepoint_override_keeps_delta(capsys):
    outs = []
    for bp in ("0", "5"):
        code, out, _ = run(capsys, "compute", "--example", "paper", "--basepoint", bp,
                           "--format", "json")
        assert code == 0
        outs.append(json.loads(out))
    assert outs[0]["delta_normalized"] == outs[1]["delta_normalized"]
    assert outs[1]["basepoint"] == 5


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("KNOTBETA_FORMAT", "json")
    _, out, _ = run(capsys, "compute", "--example", "trefoil")
    jsonschema.validate(json.loads(out), COMPUTE_SCHEMA)


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--example", "paper")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert code == 0
    assert report["theorem_holds"] and report["sign"] == -1 and report["detW"] == 1


def test_verify_flip_fails(capsys):
    code, out, _ = run(capsys, "verify", "--example", "paper", "--debug-flip-t", "2", "1")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert code == 1
    assert not report["proposition_holds"]
    assert report["failures"]


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--pd", "X(0,1,2"],
        ["compute", "--pd", "X(0,1,1,0) X(2,3,3,2)"],
        ["compute", "--braid", "strands 2; s3"],
        ["compute"],
        ["compute", "--example", "nope"],
        ["compute", "/nonexistent/file.pd"],
        ["verify", "--example", "paper", "--debug-flip-t", "9", "1"],
        ["frobnicate"],
        ["example", "nope"],
    ],
)
def test_bad_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_example_command(capsys):
    code, out, _ = run(capsys, "example", "--list")
    assert code == 0 and "paper" in out.split()
    code, out, _ = run(capsys, "example", "paper")
    assert parse_long_pd(out).n == 6


def test_batch_csv(capsys, tmp_path):
    (tmp_path / "a.braid").write_text("strands 2\ns1 s1 s1\n")
    (tmp_path / "b.pd").write_text("X(0,1,1,0)\n")
    code, out, _ = run(capsys, "batch", str(tmp_path))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0].keys()) == BATCH_COLUMNS
    assert [r["id"].rsplit("/", 1)[-1] for r in rows] == ["a.braid", "b.pd"]
    assert all(r["theorem_ok"] == "True" for r in rows)


def test_batch_bad_file_exit_2(capsys, tmp_path):
    (tmp_path / "bad.pd").write_text("X(0,1\n")
    code, _, err = run(capsys, "batch", str(tmp_path))
    assert code == 2 and "bad.pd" in err


def test_batch_json_parallel_order(capsys):
    _, serial, _ = run(capsys, "batch", "--count", "20", "--seed", "3", "--format", "json")
    code, parallel, _ = run(capsys, "batch", "--count", "20", "--seed", "3",
                            "--format", "json", "--jobs", "3")
    assert code == 0
    rows = json.loads(parallel)
    jsonschema.validate(rows, BATCH_SCHEMA)
    assert serial == parallel
    assert [r["id"] for r in rows] == [f"seed3-{k:04d}" for k in range(1, 21)]


def test_batch_text(capsys):
    code, out, _ = run(capsys, "batch", "--count", "5", "--format", "text")
    assert code == 0
    assert out.strip().endswith("5/5 diagrams passed")


def _gen(capsys, out, *extra):
    code, _, _ = run(capsys, "gen", "--seed", "11", "--count", "15", "--out", str(out), *extra)
    return code


def test_gen_deterministic(capsys, tmp_path):
    assert _gen(capsys, tmp_path / "a") == 0
    assert _gen(capsys, tmp_path / "b") == 0
    a = sorted((tmp_path / "a").iterdir())
    b = sorted((tmp_path / "b").iterdir())
    assert [p.name for p in a] == [f"knot_{k:04d}.pd" for k in range(1, 16)]
    assert [p.read_bytes() for p in a] == [p.read_bytes() for p in b]


def test_gen_files_parse_and_validate(capsys, tmp_path):
    _gen(capsys, tmp_path, "--max-crossings", "8")
    for f in tmp_path.iterdir():
        text = f.read_text()
        assert text.startswith("# braid: ")
        lk = parse_long_pd(text)
        assert 1 <= lk.n <= 8
        assert validate(lk.diagram) == []


def test_gen_then_batch(capsys, tmp_path):
    _gen(capsys, tmp_path)
    code, out, _ = run(capsys, "batch", str(tmp_path), "--format", "text")
    assert code == 0 and "15/15" in out


def test_gen_budget_exhausted(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--count", "50", "--max-attempts", "3",
                       "--out", str(tmp_path))
    assert code == 2 and "error" in err
    assert len(list(tmp_path.iterdir())) <= 3


@pytest.mark.slow
def test_gen_full_corpus(capsys, tmp_path):
    code, _, _ = run(capsys, "gen", "--seed", "1", "--count", "200", "--max-crossings", "12",
                     "--out", str(tmp_path))
    assert code == 0
    assert len(list(tmp_path.iterdir())) == 200


def test_compute_zero_crossings(capsys):
    code, out, _ = run(capsys, "compute", "--pd", "", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["n"] == 0 and doc["beta_text"] == doc["delta_text"] == "1"


def test_gen_single_small(capsys, tmp_path):
    code, _, _ = run(capsys, "gen", "--seed", "1", "--count", "1", "--max-crossings", "3",
                     "--out", str(tmp_path))
    (f,) = tmp_path.iterdir()
    lk = parse_long_pd(f.read_text())
    assert code == 0 and lk.n <= 3
    assert parse_long_pd(render_pd(lk)) == lk
