import io
import json
import subprocess
import sys

import pytest

from kospheres import cli
from kospheres.hurwitz import binom_odd


def run(capsys, monkeypatch, *argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def kos(capsys, monkeypatch):
    def call(*argv, stdin=None):
        return run(capsys, monkeypatch, *argv, stdin=stdin)

    return call


@pytest.mark.parametrize(
    "argv, out",
    [
        (["phi", "2", "6"], "2\n"),
        (["phi", "1", "3"], "∞\n"),
        (["phi", "1", "3", "--format", "csv"], "inf\n"),
        (["coeff", "a*a"], "4*l^1\n"),
        (["coeff", "e*e*e"], "0\n"),
    ],
)
def test_simple_queries(kos, argv, out):
    code, stdout, _ = kos(*argv)
    assert code == 0
    assert stdout == out


def test_classify_text(kos):
    code, out, _ = kos("classify", "1", "1")
    assert code == 0
    assert out.startswith("OnlyNullHomotopic (")
    code, out, _ = kos("classify", "2", "4", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "AllDegrees"


def test_unknown_exit_code(kos):
    code, out, _ = kos("classify", "9", "16")
    assert code == 3 and out.startswith("UnknownConjecturedAll")
    code, out, err = kos("certify", "1", "1")
    assert code == 3 and out == "" and "even" in err
    code, _, err = kos("certify", "8", "64", "--budget", "1")
    assert code == 3 and "exhausted" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["phi", "x", "1"],
        ["coeff", "2*"],
        ["ideal", "(q)", "0"],
        ["kgroups", "1", "1", "Q"],
        ["phi", "1", "1", "--format", "xml"],
        ["realize", "/nonexistent/file.json"],
        ["classify-range", "0"],
    ],
)
def test_usage_errors(kos, argv):
    code, out, err = kos(*argv)
    assert code == 2
    assert out == "" and err


def test_tables_and_check(kos):
    code, out, err = kos("phi-table", "--check", "--format", "json")
    assert code == 0 and "agree" in err
    table = json.loads(out)
    assert table[2][6] == 2 and table[1][3] == "inf"
    code, out, _ = kos("order-table", "--format", "csv", "--check")
    assert code == 0
    assert out.splitlines()[0] == "n\\m,0,1,2,3,4,5,6,7"
    assert out.splitlines()[1] == "0,inf,2,2,1,inf,1,1,1"
    code, out, _ = kos("phi-table", "--format", "md")
    assert out.splitlines()[3] == "| 1 | 1 | 1 | 1 | ∞ | 1 | 1 | 1 | ∞ |"


def test_check_detects_mismatch(kos, monkeypatch):
    bad = [list(row) for row in cli.PHI_REFERENCE]
    bad[0][0] = 2
    monkeypatch.setattr(cli, "PHI_REFERENCE", bad)
    code, _, err = kos("phi-table", "--check")
    assert code == 1 and "mismatch at (0,0)" in err


def test_ideal_and_kgroups(kos):
    code, out, _ = kos("ideal", "(2,e2,a)", "0")
    assert code == 0 and out.startswith("IndexK(2)")
    code, out, _ = kos("ideal", "I^1", "-1", "--format", "json")
    assert json.loads(out)["subgroup"] == "Full"
    code, out, _ = kos("kgroups", "2", "6", "R", "--format", "json")
    data = json.loads(out)
    assert data["wedge"]["index"] == 2 and data["wedge"]["subgroup"] == "IndexK(2)"
    code, out, _ = kos("kgroups", "1", "1", "C")
    assert "Zero" in out.splitlines()[1]


def test_round_trip_all_small_pairs(kos, tmp_path):
    checked = 0
    for n in range(0, 9):
        for m in range(0, 9):
            if not binom_odd(n, m):
                continue
            code, cert, _ = kos("certify", str(n), str(m))
            assert code == 0
            code, spec, _ = kos("realize", "-", "--samples", "10", stdin=cert)
            assert code == 0
            data = json.loads(spec)
            assert (data["a"], data["b"], data["c"]) == (n + 1, m + 1, n + m + 1)
            if n and m:
                assert data["scale"] == "1/2" and data["sphere"] == "shifted"
            code, _, err = kos("verify-map", "-", "--samples", "10", stdin=spec)
            assert code == 0, err
            checked += 1
    assert checked > 30


def test_verify_map_locates_tampering(kos, tmp_path):
    _, cert, _ = kos("certify", "5", "2")
    _, spec, _ = kos("realize", "-", stdin=cert)
    data = json.loads(spec)
    data["mats"][3][1][2] += 1
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(data))
    code, out, err = kos("verify-map", str(path), "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert report["normed"] is False and report["ok"] is False
    assert "coefficient identity fails at" in err
    assert report["samples"]["failures"] > 0


def test_verify_map_plain_bilinear(kos, tmp_path):
    path = tmp_path / "cm.json"
    path.write_text(json.dumps({"a": 2, "b": 2, "c": 2, "mats": [[[1, 0], [0, -1]], [[0, 1], [1, 0]]]}))
    code, out, _ = kos("verify-map", str(path))
    assert code == 0 and "nice=False" in out


def test_realize_rejects_invalid_derivation(kos):
    bad = json.dumps({"target": [1, 3], "steps": ["Base", "AddLeft(3)", "Swap", "AddLeft(1)"]})
    code, out, err = kos("realize", "-", stdin=bad)
    assert code == 1 and out == "" and "invalid derivation" in err


def test_audit_and_range(kos, tmp_path):
    code, out, err = kos("audit", "8", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True
    fig = tmp_path / "grid.png"
    code, out, _ = kos("classify-range", "6", "--format", "csv", "--figure", str(fig))
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "n,m,verdict,evidence,binom_odd" and len(rows) == 37
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_table_figure(kos, tmp_path):
    fig, again = tmp_path / "phi.png", tmp_path / "again.png"
    code, _, err = kos("phi-table", "--figure", str(fig))
    assert code == 0 and fig.stat().st_size > 1000
    kos("phi-table", "--figure", str(again))
    assert fig.read_bytes() == again.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["classify-range", "10", "--format", "json"],
        ["realize", "-"],
        ["phi-table", "--format", "md"],
        ["kgroups", "3", "6", "H", "--format", "json"],
    ],
)
def test_output_is_deterministic(kos, argv):
    stdin = json.dumps({"target": [4, 3], "steps": ["Base", "AddLeft(3)", "Swap", "AddLeft(4)"]})
    first = kos(*argv, stdin=stdin)
    second = kos(*argv, stdin=stdin)
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kospheres", "phi", "2", "6"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
    proc = subprocess.run([sys.executable, "-m", "kospheres"], capture_output=True, text=True)
    assert proc.returncode == 2
