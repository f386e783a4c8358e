"""CLI golden files and exit codes.

Golden outputs live in ``tests/golden``; regenerate them with
``python3 tests/test_cli.py`` after an intentional format change.
"""

import sys
from pathlib import Path

import pytest

from czdg.cli import SCAN_HEADER, main

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    (["graph", "Z16", "--format", "edgelist"], "z16_czdg.edgelist"),
    (["graph", "Z16", "--format", "json"], "z16_czdg.json"),
    (["graph", "Z16", "--format", "dot"], "z16_czdg.dot"),
    (["graph", "Z8", "--kind", "zdg", "--format", "dot"], "z8_zdg.dot"),
    (["graph", "Z8", "--format", "edgelist"], "z8_czdg.edgelist"),
    (["graph", "Z4 x F4", "--format", "json"], "z4xf4_czdg.json"),
    (["graph", "Z4[x]/(x^2)", "--format", "dot"], "z4x2_czdg.dot"),
    (["graph", "Z9[x]/(x^2)", "--kind", "zdg", "--format", "edgelist"], "z9x2_zdg.edgelist"),
    (["graph", "Z64", "--format", "json"], "z64_czdg.json"),
    (["invariants", "Z64", "--format", "json"], "z64_invariants.json"),
    (["invariants", "Z10"], "z10_invariants.txt"),
    (["invariants", "Z7", "--format", "csv"], "z7_invariants.csv"),
    (["info", "Z16"], "z16_info.txt"),
    (["info", "F9"], "f9_info.txt"),
    (["info", "Z4[x]/(2x, x^2 - 2)"], "z4_2x_info.txt"),
    (["scan", "Zn:4..20"], "scan_4_20.csv"),
    (["scan", str(GOLDEN / "family.txt")], "scan_family.csv"),
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,name", CASES, ids=[c[1] for c in CASES])
def test_golden(argv, name, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_z16_edgelist_is_path_through_class_of_8(capsys):
    _, out, _ = run(["graph", "Z16", "--format", "edgelist"], capsys)
    # classes by representative: [2], [4], [8]; only [8] annihilates the others
    assert out == "0 2\n1 2\n"


def test_scan_examples(capsys, tmp_path):
    out_file = tmp_path / "s.csv"
    assert main(["scan", "Zn:4..20", "--out", str(out_file)]) == 0
    rows = [ln.split(",") for ln in out_file.read_text().splitlines()]
    assert rows[0] == SCAN_HEADER and len(rows) == 18
    by_expr = {r[0]: dict(zip(SCAN_HEADER, r)) for r in rows[1:]}
    assert by_expr["Z4"]["mdim"] == "0" and by_expr["Z6"]["mdim"] == "1"
    _, out, _ = run(["scan", "Zn:5..5"], capsys)
    assert out.splitlines()[1].split(",")[5] == "undefined"


def test_scan_threads_identical(capsys):
    _, a, _ = run(["scan", "Zn:4..40"], capsys)
    _, b, _ = run(["scan", "Zn:4..40", "--threads", "3"], capsys)
    assert a == b


@pytest.mark.parametrize(
    "argv,code",
    [
        (["info", "Z4[x"], 2),
        (["info", "Z1"], 2),
        (["info", "Z2[x,y]/(x^3, xy, x^2)"], 3),
        (["info", "Z2[x,y]/(x^9, y^9)"], 3),
        (["graph", "F4"], 4),
        (["graph", "Z7", "--format", "json"], 4),
        (["invariants", "Z2 x Z2 x Z2 x Z2 x Z2 x Z2", "--limit-subsets", "10"], 6),
        (["scan", "Zn:4"], 2),
        (["scan", "Zn:4..6", "--out", "/nonexistent-dir/x.csv"], 3),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_undefined_graph_message(capsys):
    code, _, err = run(["graph", "F4"], capsys)
    assert code == 4 and err.strip() == "Γ_E undefined: R is an integral domain"


def test_verify_exit_and_errata(capsys):
    code, out, _ = run(["verify", "--suite", "3.3", "--max-p", "13"], capsys)
    assert code == 0 and "fail: 0" in out
    code, out, _ = run(["verify", "--suite", "z16-example"], capsys)
    assert code == 0 and "ann(14) in Z16" in out


def test_verify_failure_exit(monkeypatch, capsys):
    from czdg import verifier

    monkeypatch.delitem(verifier.ERRATA, ("z16-example", "ann(14) in Z16"))
    code, out, _ = run(["verify", "--suite", "z16-example"], capsys)
    assert code == 5 and "FAIL ann(14) in Z16" in out


def test_help_documents_grammar(capsys):
    with pytest.raises(SystemExit):
        main(["info", "--help"])
    out, _ = capsys.readouterr()
    assert 'product  := atom ( "x" atom )+' in out


def regenerate():
    import contextlib
    import io

    for argv, name in CASES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main(argv)
        (GOLDEN / name).write_text(buf.getvalue(), encoding="utf-8")


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    regenerate()
