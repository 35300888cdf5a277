import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cyclicnp.cli import main
from cyclicnp.polygon import parse

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "name, argv",
    [
        ("compute_11_119_p3", ["compute", "--m", "11", "--a", "1,1,9", "--p", "3", "--format", "json"]),
        ("table_4", ["table", "--m", "4", "--format", "json"]),
        (
            "search_13_third",
            ["search", "--m-min", "13", "--m-max", "13", "--polygon", "(1/3,2/3)^2",
             "--format", "json", "--compress-congruences"],
        ),
        ("verify_5_113_p2", ["verify", "--m", "5", "--a", "1,1,3", "--p", "2", "--format", "json"]),
    ],
)
def test_golden_json(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / f"{name}.json").read_text())


def test_compute_schema(capsys):
    _, out, _ = run(capsys, "compute", "--m", "3", "--a", "1,1,1", "--class", "1", "--format", "json")
    rec = json.loads(out)
    assert {"m", "a", "classes", "slopes", "p_rank", "supersingular", "label"} <= rec.keys()
    assert rec["label"] == "ord"
    for s in rec["slopes"]:
        assert set(s) == {"num", "den", "mult"}


def test_compute_large_class(capsys):
    _, out, _ = run(capsys, "compute", "--m", "2027", "--a", "1,1,2025", "--class", "3", "--format", "json")
    rec = json.loads(out)
    assert [(s["num"], s["den"], s["mult"]) for s in rec["slopes"]] == [(490, 1013, 1013), (523, 1013, 1013)]
    assert parse(rec["label"]) == parse("(523/1013,490/1013)")


def test_compute_text_and_orbits(capsys):
    code, out, _ = run(capsys, "compute", "--m", "7", "--a", "1,1,5", "--p", "2", "--orbits")
    assert code == 0
    assert "Newton polygon: (1/3,2/3)" in out
    assert "orbit (1,2,4): order 7, alpha=2, beta=1, slope 2/3" in out


def test_compute_subgroup(capsys):
    code, out, _ = run(capsys, "compute", "--m", "13", "--a", "1,2,10", "--subgroup", "1,3,9", "--format", "json")
    assert code == 0
    assert json.loads(out)["label"] == "(1/3,2/3)^2"


def test_compute_oracle(capsys):
    code, out, _ = run(capsys, "compute", "--m", "7", "--a", "1,2,4", "--p", "2", "--oracle", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["oracle"]["agree"] and rec["label"] == "ord^3"


def test_canonicalization_notice(capsys):
    code, out, err = run(capsys, "compute", "--m", "9", "--a", "1,3,5", "--p", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["a"] == [1, 2, 6]
    assert "canonicalized" in err


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["compute", "--m", "5", "--a", "1,1,2", "--p", "2"], 2, "a(1) + a(2) + a(3)"),
        (["compute", "--m", "6", "--a", "2,2,2", "--p", "5"], 2, "gcd"),
        (["compute", "--m", "6", "--a", "0,1,5", "--p", "5"], 2, ""),
        (["compute", "--m", "9", "--a", "1,1,7", "--p", "3"], 3, "divides"),
        (["compute", "--m", "9", "--a", "1,1,7", "--class", "6"], 3, "unit"),
        (["compute", "--m", "9", "--a", "1,1,7", "--p", "4"], 2, "prime"),
        (["compute", "--m", "7", "--a", "1,1,5", "--subgroup", "1,2"], 2, ""),
        (["verify", "--m", "11", "--a", "1,1,9", "--p", "23"], 4, "budget"),
        (["verify", "--m", "9", "--a", "1,1,7", "--p", "3"], 3, ""),
        (["table", "--m", "2"], 2, ""),
        (["search", "--m-min", "5", "--m-max", "4", "--prank0"], 2, ""),
        (["search", "--m-min", "5", "--m-max", "5", "--polygon", "bogus"], 2, ""),
        (["compute", "--m", "7", "--a", "x,y", "--p", "2"], 2, ""),
    ],
)
def test_exit_codes(capsys, argv, code, needle):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert needle in err


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--m", "3", "--a", "1,1,1", "--p", "2")
    assert code == 0
    assert "point counts:  ss" in out and out.strip().endswith("agree")


def test_table_formats_agree(capsys):
    _, md, _ = run(capsys, "table", "--m", "12")
    _, csv_out, _ = run(capsys, "table", "--m", "12", "--format", "csv")
    _, js, _ = run(capsys, "table", "--m", "12", "--format", "json")
    data = json.loads(js)
    json_labels = [[c["label"] for c in r["cells"]] for r in data["rows"]]
    rows = list(csv.reader(io.StringIO(csv_out)))
    assert rows[0][:2] == ["a", "signature"] and len(rows) == 6
    csv_labels = [r[2:] for r in rows[1:]]
    md_rows = [ln for ln in md.splitlines() if ln.startswith("| (")]
    md_labels = [[c.strip() for c in ln.strip("|").split("|")[2:]] for ln in md_rows]
    assert json_labels == csv_labels == md_labels
    for r in data["rows"]:
        for c in r["cells"]:
            assert {(s.numerator, s.denominator, k) for s, k in parse(c["label"]).slopes} == {
                (s["num"], s["den"], s["mult"]) for s in c["slopes"]
            }
    assert "| | prime orbits |" in md.replace("|  |", "| |")


def test_table_md_m7(capsys):
    _, md, _ = run(capsys, "table", "--m", "7")
    assert "| (1,1,5) | (1,1,1,0,0,0) | ord^3 | (1/3,2/3) | ss^3 | ss^3 |" in md
    assert "1 mod 7 | 2,4 mod 7 | 3,5 mod 7 | 6 mod 7" in md


def test_table_csv_m10(capsys):
    _, out, _ = run(capsys, "table", "--m", "10", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 4 and all(len(r) == 5 for r in rows)


def test_search_text(capsys):
    _, out, _ = run(capsys, "search", "--m-min", "23", "--m-max", "23", "--supersingular")
    assert out.splitlines()[0].startswith("m=23, any a")
    assert "p ≡ 5,7,10,11,14,15,17,19,20,21,22 mod 23" in out.splitlines()[0]
    _, out, _ = run(capsys, "search", "--m-min", "19", "--m-max", "19", "--polygon", "(4/9,5/9)")
    lines = out.splitlines()
    assert lines[0] == "m=19, a=(1,2,16), g=9, (4/9,5/9), p ≡ 4,5,6,9,16,17 mod 19"
    # a second inertia type shares the polygon
    assert lines[1:] == ["m=19, a=(1,3,15), g=9, (4/9,5/9), p ≡ 4,5,6,9,16,17 mod 19"]


def test_search_ascii_and_slope(capsys):
    _, out, _ = run(capsys, "search", "--m-min", "15", "--m-max", "15", "--slope", "1/4", "--ascii")
    assert "(1/4,3/4) + ss^3" in out and "⊕" not in out
    _, out, _ = run(capsys, "search", "--m-min", "9", "--m-max", "9", "--supersingular", "--compress-congruences")
    assert "p ≡ 2 mod 3" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "cyclicnp", "compute", "--m", "3", "--a", "1,1,1", "--class", "2"],
        capture_output=True, text=True, check=True,
    )
    assert "Newton polygon: ss" in res.stdout
