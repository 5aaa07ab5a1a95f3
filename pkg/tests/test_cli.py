from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from homometry.cli import EX_USAGE, run


def call(*argv):
    out = io.StringIO()
    code = run(["--threads", "1", *argv], out=out)
    return code, out.getvalue()


def test_count_large_n_refined():
    assert call("count", "--n", "15000", "--refined") == (0, "15000,14068747,14067498,1249\n")


def test_count_range_with_header_and_types():
    code, text = call("count", "--n-max", "20", "--refined", "--by-type", "--header")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "n,h_n,pairs,triples,A,B,C,D,E,F,G"
    assert lines[18] == "18,14,13,1,9,0,1,3,1,0,0"
    assert lines[20] == "20,22,22,0,12,6,0,0,0,0,4"


def test_classify_empty_and_nonempty():
    assert call("classify", "--n", "11") == (0, "")
    code, text = call("classify", "--n", "12")
    records = [json.loads(line) for line in text.splitlines()]
    assert [(r["type"], r["i"]) for r in records] == [("A", 1), ("A", 2), ("C", 1)]
    code, text = call("classify", "--n", "12", "--format", "table")
    assert text.splitlines()[0] == "A(1,2)     12:[0,1,2,4,7]  12:[0,1,3,5,6]"


def test_gf_show():
    code, text = call("gf", "--show")
    assert code == 0
    assert text == ("H(x) = 2x^10/((1-x^2)(1-x^4)^2) + (x^10 + 4x^15)/((1-x^5)(1-x^10)) + "
                    "(x^12 + x^18)/((1-x^6)(1-x^12)) + 4x^16/((1-x^8)^2) + 4x^20/(1-x^20)\n")
    code, text = call("gf", "--terms", "16")
    assert text == "3x^10 + 3x^12 + 6x^14 + 5x^15 + 10x^16 + ...\n"


def test_oracle():
    code, text = call("oracle", "--n", "10")
    assert code == 0 and len(text.splitlines()) == 3
    first = json.loads(text.splitlines()[0])
    assert set(first) == {"n", "distances", "members"}


def test_minimal_tables_sampled():
    code, text = call("minimal-tables", "--pq", "0,2", "--sample", "200", "--seed", "1")
    records = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and len(records) == 1
    assert records[0]["equivalent_to"] == "B1"
    assert records[0]["solution"][0]["range"] == "0 < x1 < 1/10"


def test_minimal_tables_dump_cells_uses_plain_constraint_lines():
    code, text = call("minimal-tables", "--pq", "2,2", "--sample", "0", "--dump-cells")
    record = json.loads(text.splitlines()[0])
    for cell in record["cells"]:
        for line in cell:
            *coeffs, rel, const = line.split()
            assert len(coeffs) == 4 and rel in {"=", "<", "<="}


def test_minimal_tables_full_with_checkpoint(tmp_path, monkeypatch):
    monkeypatch.setenv("HOMOMETRY_CHECKPOINT_DIR", str(tmp_path))
    code, _ = call("minimal-tables", "--pq", "0,2", "--full", "--max-chunks", "2")
    assert code == 0
    state = json.loads((tmp_path / "minimal-tables-02.json").read_text())
    assert len(state["completed_chunks"]) == 2


def test_intersections():
    code, text = call("intersections")
    assert code == 0
    assert "A1 & A2: x = (x1, 1/6 + x1, 1/3 + x1, 1/2) : 0 < x1 <= 1/12" in text
    assert "A3 & B3: x = (1/10, 3/10, 2/5, 3/5)" in text
    assert "C & D4: x = (1/4, 1/3, 5/12, 2/3)" in text
    assert text.rstrip().endswith("nonempty triples: 0")


def test_verify_exit_codes_and_json():
    code, text = call("verify", "--n-max", "20", "--long-counts", "--format", "json")
    assert code == 0
    reports = json.loads(text)
    assert [r["suite"] for r in reports] == ["cross-check", "long-counts"]
    code, text = call("un-action", "--n-max", "20")
    assert code in (0, 2) and "status: PASS" in text


@pytest.mark.parametrize("argv", [
    ["count"],
    ["count", "--n", "0"],
    ["count", "--n", "3", "--n-max", "4"],
    ["classify", "--n", "x"],
    ["minimal-tables", "--pq", "3,3"],
    ["minimal-tables", "--pq", "0,2", "--sample", "5", "--checkpoint", "f.json"],
    ["nonsense"],
])
def test_usage_errors_exit_64(argv, capsys):
    assert run(argv, out=io.StringIO()) == EX_USAGE
    assert "error" in capsys.readouterr().err


def test_output_is_deterministic():
    assert call("classify", "--n", "60") == call("classify", "--n", "60")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homometry", "count", "--n", "26"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "26,30\n"
    proc = subprocess.run([sys.executable, "-m", "homometry", "count"], capture_output=True, text=True)
    assert proc.returncode == EX_USAGE
