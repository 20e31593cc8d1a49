import csv
import io
import json

import pytest

from gbsmcs.cli import run

from conftest import EXAMPLE_D3


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_mcs_d3():
    code, out, err = call("enumerate-mcs", "--d", "3")
    assert code == 0 and err == ""
    objs = [json.loads(line) for line in out.splitlines()]
    assert len(objs) == 4
    assert {frozenset(map(tuple, o["elements"])) for o in objs} == {frozenset(s) for s in EXAMPLE_D3}
    assert all(o["d"] == 3 and o["elements"] == sorted(o["elements"]) for o in objs)


def test_check_set_separating_example():
    code, out, _ = call("check-set", "--d", "8", "--set", "0,0;5,6;6,3;6,5;7,6")
    assert code == 0
    assert "C[2,2] (disjoint)" in out
    code, out, _ = call("check-set", "--d", "8", "--set", "0,0;5,6;6,3;6,5;7,6", "--json")
    rep = json.loads(out)
    assert rep["theorem2"] == {"index": [2, 2], "branch": "disjoint"}
    assert rep["theorem2_all"] == [{"index": [2, 2], "branch": "disjoint"}]
    assert rep["theorem31"] == {"condition1": None, "condition2": False, "condition3": False}


def test_check_set_undetected_exit_code():
    code, out, _ = call("check-set", "--d", "3", "--set", "0,0;1,0;2,0;0,1", "--json")
    assert code == 1
    assert json.loads(out)["detected"] is False


def test_set_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text("[[0,0],[5,6],[6,3],[6,5],[7,6]]")
    code, out, _ = call("check-set", "--d", "8", "--set-file", str(f), "--json")
    assert code == 0 and json.loads(out)["detected"]
    code, _, err = call("check-set", "--d", "8", "--set-file", str(tmp_path / "missing.json"))
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        ("check-set", "--d", "8", "--set", "0,0;0,0"),
        ("check-set", "--d", "8", "--set", "0,0;9,1"),
        ("check-set", "--d", "8", "--set", "0,0;x"),
        ("check-set", "--d", "1", "--set", "0,0"),
        ("check-set", "--d", "3", "--set", "0,0;1,1", "--bogus"),
        ("check-set", "--d", "3", "--set", "0,0"),
        ("enumerate-mcs",),
        ("enumerate-mcs", "--d", "0"),
        ("frobnicate",),
        ("sample-rates", "--d-min", "9", "--d-max", "7", "--n-min", "5", "--n-max", "6"),
        ("per-mcs-rates", "--d", "3", "--n", "12"),
        ("per-detector-rates", "--d", "3", "--n", "1", "--exhaustive"),
    ],
)
def test_input_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_duplicate_diagnostic():
    _, _, err = call("check-set", "--d", "8", "--set", "0,0;0,0")
    assert "duplicate" in err


def test_verify_disjoint_branch_passes():
    code, out, _ = call("verify", "--d", "8", "--set", "0,0;5,6;6,3;6,5;7,6", "--json")
    assert code == 0
    oracle = json.loads(out)["oracle"]
    assert oracle["mcs"] == [2, 2] and oracle["passed"] and oracle["max_overlap"] <= 1e-9
    code, out, _ = call("verify", "--d", "8", "--set", "0,0;5,6;6,3;6,5;7,6")
    assert "PASS" in out


def test_verify_oracle_dimension_limit():
    code, _, err = call("verify", "--d", "70", "--set", "0,0;1,1")
    assert code == 3 and "oracle" in err


def test_verify_undetected():
    code, _, _ = call("verify", "--d", "3", "--set", "0,0;1,0;2,0;0,1")
    assert code == 1


def test_sample_rates_csv(tmp_path):
    out_file = tmp_path / "rates.csv"
    code, out, _ = call(
        "sample-rates", "--d-min", "7", "--d-max", "8", "--n-min", "5", "--n-max", "6",
        "--trials", "200", "--seed", "3", "--out", str(out_file),
    )
    assert code == 0 and out == ""
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith("# gbsmcs 0.1.0 sample-rates")
    rows = list(csv.DictReader(lines[1:]))
    assert [(r["d"], r["n"]) for r in rows] == [("7", "5"), ("7", "6"), ("8", "5"), ("8", "6")]
    assert all(float(r["rate_t2"]) >= float(r["rate_t31"]) for r in rows)


def test_per_detector_exhaustive():
    code, out, _ = call("per-detector-rates", "--d", "2", "--n", "2", "--exhaustive")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()[1:]))
    assert len(rows) == 4
    assert float(rows[0]["rate"]) == 0.0
    assert rows[0]["trials"] == "6"


def test_per_mcs_rates_csv():
    code, out, _ = call("per-mcs-rates", "--d", "4", "--n", "3", "--trials", "100", "--batches", "2")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()[1:]))
    assert len(rows) == 7 * 3
    assert {r["batch"] for r in rows} == {"all", "0", "1"}
