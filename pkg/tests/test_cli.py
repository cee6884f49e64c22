import csv
import io
import json
import subprocess
import sys

import pytest

from nichols_zn.cli import run


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


@pytest.fixture
def write_json(tmp_path):
    def write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        return str(p)
    return write


def test_qsolve_empty():
    assert call("qsolve", "1", "3", "7", "14") == (0, "[]\n")
    assert call("qsolve", "2", "3", "3", "6")[1].strip() == "[3]"


def test_factor_and_legendre():
    status, text = call("factor", "60")
    assert status == 0 and json.loads(text) == {"n": 60, "factors": [[2, 2], [3, 1], [5, 1]]}
    assert call("legendre", "-3", "7") == (0, "1\n")
    assert call("legendre", "1", "2")[0] == 1


def test_enumerate_csv():
    status, text = call("classify", "--rank", "2", "--n", "3", "--enumerate", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["label"] for r in rows] == ["T2(1)", "T2(1)"]
    assert list(rows[0]) == ["n", "rank", "gdd", "label", "m", "m2", "dimension", "witness"]
    for r in rows:
        w, g = json.loads(r["witness"]), json.loads(r["gdd"])
        n = int(r["n"])
        assert [x * y % n for x, y in zip(w["x"], w["y"])] == g["diag"]


def test_format_anywhere_and_markdown():
    a = call("--format", "md", "classify", "--rank", "2", "--n", "3", "--enumerate")[1]
    b = call("classify", "--rank", "2", "--n", "3", "--format", "md", "--enumerate")[1]
    assert a == b
    assert a.startswith("| n | rank | gdd |")
    assert a.count("T2(1)") == 2


def test_output_is_deterministic():
    args = ("classify", "--rank", "3", "--n", "6", "--enumerate")
    assert call(*args) == call(*args)


def test_dim():
    assert call("dim", "--class", "i", "--m", "3") == (0, "144\n")
    assert call("dim", "--class", "ii") == (0, "10368\n")
    assert call("dim", "--class", "iii", "--m", "3", "--m2", "2") == (0, "576\n")
    assert call("dim", "--class", "i")[0] == 1


def test_realize_matrix_and_gdd(write_json):
    m = write_json("m.json", {"n": 2, "rank": 2, "exponents": [[1, 1], [1, 1]]})
    assert json.loads(call("realize", "--matrix", m)[1]) == {"x": [1, 1], "y": [1, 1]}
    bad = write_json("bad.json", {"n": 4, "rank": 2, "exponents": [[2, 1], [1, 2]]})
    assert call("realize", "--matrix", bad) == (0, "null\n")
    g = write_json("g.json", {"rank": 3, "diag": [2, 3, 3], "edges": {"1,2": 2, "1,3": -2}})
    status, text = call("realize", "--gdd", g, "--n", "6")
    w = json.loads(text)
    assert status == 0
    assert [x * y % 6 for x, y in zip(w["x"], w["y"])] == [2, 3, 3]


def test_classify_single_gdd(write_json):
    g = write_json("g.json", {"n": 12, "rank": 2, "diag": [4, 8], "edges": {"1,2": 9}})
    rows = json.loads(call("classify", "--rank", "2", "--n", "12", "--gdd", g)[1])
    assert rows[0]["label"] == "T4(1)" and rows[0]["witness"] is not None
    assert call("classify", "--rank", "3", "--n", "12", "--gdd", g)[0] == 1
    assert call("classify", "--rank", "2", "--n", "10", "--gdd", g)[0] == 1


def test_reflect_and_orbit(write_json):
    m = write_json("a2.json", {"n": 7, "rank": 2, "exponents": [[3, 4], [0, 3]]})
    status, text = call("reflect", "--matrix", m, "--vertex", "1")
    assert status == 0 and json.loads(text)["n"] == 7
    assert call("reflect", "--matrix", m, "--vertex", "3")[0] == 1
    orbit = json.loads(call("orbit", "--matrix", m)[1])
    assert orbit["size"] == 1 and not orbit["truncated"]
    undefined = write_json("u.json", {"n": 7, "rank": 2, "exponents": [[0, 3], [0, 2]]})
    assert call("reflect", "--matrix", undefined, "--vertex", "1")[0] == 1


def test_verify_suites():
    status, text = call("verify", "--suite", "thm3.1")
    assert status == 0
    assert text.count("[PASS]") == 5


def test_errors(write_json, capsys):
    assert call("frobnicate")[0] == 1
    assert call("qsolve", "1", "2")[0] == 1
    assert call("factor", "10", "--format", "xml")[0] == 1
    broken = write_json("broken.json", "{not json")
    assert call("realize", "--matrix", broken)[0] == 1
    assert "malformed JSON" in capsys.readouterr().err
    assert call("realize", "--matrix", "/nonexistent/file.json")[0] == 1
    short = write_json("short.json", {"n": 6, "rank": 3, "exponents": [[1, 2], [3, 4]]})
    assert call("realize", "--matrix", short)[0] == 1


def test_budget_exit_code(monkeypatch):
    monkeypatch.setenv("NICHOLS_ZN_BUDGET", "10")
    assert call("classify", "--rank", "2", "--n", "5", "--enumerate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nichols_zn", "dim", "--class", "i", "--m", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "256"
