import json

import pytest

from circspec.cli import main
from circspec.graphs import graph_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_icg(capsys):
    code, out, _ = run(capsys, "spectrum", "--icg", "9", "1")
    assert code == 0
    entries = json.loads(out)["entries"]
    assert [(e["value"], e["multiplicity"]) for e in entries] == [("6", 1), ("0", 6), ("-3", 2)]


def test_spectrum_is_deterministic(capsys):
    _, a, _ = run(capsys, "spectrum", "--circulant", "13", "1,3,4,9,10,12")
    _, b, _ = run(capsys, "spectrum", "--circulant", "13", "1,3,4,9,10,12")
    assert a == b and "1.30277563773" in a


def test_exact_on_non_integral_is_usage_error(capsys):
    code, _, err = run(capsys, "spectrum", "--circulant", "13", "1,3,4,9,10,12", "--exact")
    assert code == 2 and "integral" in err


def test_exact_on_integral_symbol(capsys):
    code, out, _ = run(capsys, "spectrum", "--circulant", "6", "1,5", "--exact")
    assert code == 0 and json.loads(out)["entries"][0]["exact"]


def test_bad_symbol_is_usage_error(capsys):
    code, _, _ = run(capsys, "spectrum", "--circulant", "7", "1,2")
    assert code == 2


def test_classify_paley(capsys):
    code, out, _ = run(capsys, "classify", "--circulant", "13", "1,3,4,9,10,12")
    srg = json.loads(out)["srg"]
    assert code == 0 and (srg["v"], srg["r"], srg["a"], srg["c"]) == (13, 6, 2, 3)


def test_search_prime(capsys):
    code, out, _ = run(capsys, "search-prime", "13", "--distinct", "3")
    assert code == 0 and json.loads(out)["count"] == 2
    code, _, _ = run(capsys, "search-prime", "37", "--distinct", "3")
    assert code == 2


def test_verify_writes_reports(capsys, tmp_path):
    out, csvp = tmp_path / "r.json", tmp_path / "r.csv"
    code, _, err = run(capsys, "verify", "T9-ucg-4eig", "--max-n", "40", "--out", str(out),
                       "--csv", str(csvp), "--jobs", "1")
    assert code == 0 and "39/39" in err
    assert json.loads(out.read_text())["pass"] is True
    assert len(csvp.read_text().splitlines()) == 40


def test_verify_failure_exit_code(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "T4.7-cubic", "--max-n", "7", "--out", str(tmp_path / "r.json"))
    assert code == 1
    code, _, _ = run(capsys, "verify", "T4.7-cubic", "--max-n", "7", "--cubic-closure",
                     "--out", str(tmp_path / "r.json"))
    assert code == 0


def test_verify_unknown_id(capsys):
    assert run(capsys, "verify", "T99")[0] == 2


def test_export_edgelists(capsys):
    code, out, _ = run(capsys, "export", "--icg", "6", "1", "--format", "edgelist")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "export", "--icg", "5", "1", "--line", "1")
    assert len(out.splitlines()) == 30


def test_export_json_roundtrip(capsys, tmp_path):
    path = tmp_path / "paley.json"
    code, _, _ = run(capsys, "export", "--circulant", "13", "1,3,4,9,10,12", "--format", "json",
                     "--out", str(path))
    assert code == 0
    g = graph_from_json(path.read_text())
    assert g.n == 13 and g.symbol == (1, 3, 4, 9, 10, 12)
    code, out, _ = run(capsys, "spectrum", "--json", str(path))
    assert code == 0


def test_export_io_error(capsys, tmp_path):
    code, _, _ = run(capsys, "export", "--icg", "6", "1", "--out", str(tmp_path / "missing" / "x.txt"))
    assert code == 3


def test_export_dense_cap(capsys):
    code, _, _ = run(capsys, "export", "--icg", "30000", "1")
    assert code == 2


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["spectrum"])
    assert exc.value.code == 2
