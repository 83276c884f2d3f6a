import json
import subprocess
import sys

import pytest

from e6mono import cli, report
from e6mono.errors import UnknownSuiteError
from e6mono.lattice import named, parse_lattice


def test_empty_json():
    assert json.loads(report.to_json([], "")) == {"version": 1, "suite": "", "records": []}
    assert list(json.loads(report.to_json([], "")).keys()) == ["version", "suite", "records"]


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        report.run("bogus")
    with pytest.raises(SystemExit) as exc:
        cli.main(["--suite", "bogus"])
    assert exc.value.code == 2


@pytest.mark.parametrize("suite", ["hodge", "cohomology", "lattices", "exterior", "lr"])
def test_suite_passes_and_is_deterministic(suite, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["--suite", suite, "--out", str(out1)]) == 0
    assert cli.main(["--suite", suite, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert doc["suite"] == suite and doc["version"] == 1
    for rec in doc["records"]:
        assert list(rec) == ["id", "description", "paper_ref", "expected", "actual", "status"]
        assert rec["status"] == "pass"


def test_hodge_record():
    recs = {r.id: r for r in report.run("hodge")}
    r = recs["chi_Y g=4"]
    assert (r.expected, r.actual, r.status) == ("72", "72", "pass")
    lat = {r.id: r for r in report.run("lattices")}
    assert lat["disc_Lambda"].expected == "-3"


def test_markdown_tables(tmp_path):
    out = tmp_path / "r.md"
    assert cli.main(["--suite", "hodge", "--format", "markdown", "--out", str(out)]) == 0
    text = out.read_text()
    assert "h20" in text and "h11" in text and "h10" in text
    assert "| Y | 17 | 52 | 4 |" in text
    assert "| s+ | 35 | 13 | 13 | 22 | 0 |" in text


def test_failure_exit_code(tmp_path):
    # a cap below |W(E6)| turns the Weyl checks into failures
    out = tmp_path / "w.json"
    assert cli.main(["--suite", "weyl", "--max-order", "1000", "--out", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert any(r["status"] == "fail" for r in doc["records"])


def test_invalid_path():
    assert cli.main(["--suite", "hodge", "--out", "/nonexistent-dir/x.json"]) == 2


def test_dump_gram_and_lattice_info(tmp_path):
    g = tmp_path / "g.txt"
    assert cli.main(["--dump-gram-lx", "--out", str(g)]) == 0
    L = parse_lattice(g.read_text())
    assert L.rank == 28
    info = tmp_path / "i.json"
    assert cli.main(["--lattice", str(g), "--out", str(info)]) == 0
    assert json.loads(info.read_text())["signature"] == [13, 15]
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1\n2 0\n")
    assert cli.main(["--lattice", str(bad)]) == 2


def test_console_entry_runs():
    proc = subprocess.run([sys.executable, "-m", "e6mono", "--suite", "cohomology", "--format", "markdown"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Z^34 + (Z/2)^9" in proc.stdout
