import json
import subprocess
import sys

import pytest

from exckit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_split_pass(capsys):
    code, out, _ = run(capsys, "check", "--p", "1", "--a", "1,1", "--system", "split")
    assert code == 0
    assert "overall: pass" in out


def test_check_split_fail_lists_subset(capsys):
    code, out, _ = run(capsys, "check", "--p", "1", "--a", "-1,1", "--system", "split", "--format", "json")
    assert code == 1
    data = json.loads(out)
    failing = [r["pattern"] for r in data["records"] if not r["pass"]]
    assert failing == [{"mode": "subset", "indices": [1]}]
    assert data["schema"] == "exckit.v1"


def test_check_zero_vector(capsys):
    code, out, _ = run(capsys, "check", "--p", "2", "--a", "0,0", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["overall"]
    assert {r["value"] for r in data["records"]} == {"0"}


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--p", "1", "--a", "1,x"],
        ["check", "--p", "1", "--a", "1"],
        ["check", "--p", "1", "--a", "1,1", "--codim", "3"],
        ["check", "--p", "1"],
        ["enumerate", "--bound", "20"],
        ["verify", "--suite", "bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().out == ""


def test_hilbert_paper_example(capsys):
    code, out, _ = run(capsys, "hilbert", "--p", "2", "--a", "5,1", "--rmax", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["embedding_dimension"] == "24"
    assert data["values"] == ["1", "24"]
    assert data["rational"] is True


def test_hilbert_conifold_human(capsys):
    code, out, _ = run(capsys, "hilbert", "--p", "1", "--a", "1,1", "--rmax", "3")
    assert code == 0 and "1,4,9,16" in out


def test_hilbert_negative_is_hypothesis_error(capsys):
    code, out, err = run(capsys, "hilbert", "--p", "1", "--a", "-1,3")
    assert code == 2 and out == ""
    assert "hypothesis" in err


def test_enumerate_flops_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "1", "--codim", "2", "--bound", "3", "--filter", "crepant")
    assert code == 0
    assert out.splitlines() == ["a1,a2", "-1,3", "0,2", "1,1"]


def test_enumerate_bound_zero(capsys):
    code, out, _ = run(capsys, "enumerate", "--bound", "0", "--format", "json")
    data = json.loads(out)
    assert data["vectors"] == [["0", "0"]]


def test_enumerate_writes_identical_files(tmp_path, capsys):
    paths = [tmp_path / "one.json", tmp_path / "two.json"]
    for path in paths:
        assert main(["enumerate", "--p", "2", "--codim", "3", "--bound", "3",
                     "--format", "json", "--out", str(path)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


def test_enumerate_unwritable_path(tmp_path, capsys):
    code, _, err = run(capsys, "enumerate", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_leading_coeff_json(capsys):
    code, out, _ = run(capsys, "leading-coeff", "--p", "2", "--a", "5,1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["leading_coeff_I"] == {"num": "31", "den": "24"}
    assert data["sum_T"] == "31" and data["identity_holds"]
    assert data["J"][0]["h"] == 1


def test_leading_coeff_single_h(capsys):
    code, out, _ = run(capsys, "leading-coeff", "--p", "1", "--a", "1,2", "--h", "1")
    assert code == 0 and "4/3" in out


def test_human_and_json_same_quantities(capsys):
    _, human, _ = run(capsys, "check", "--p", "3", "--a", "-1,3,2", "--system", "split")
    _, js, _ = run(capsys, "check", "--p", "3", "--a", "-1,3,2", "--system", "split", "--format", "json")
    values = [r["value"] for r in json.loads(js)["records"]]
    for v in values:
        assert f"value={v}" in human
    assert len([ln for ln in human.splitlines() if "value=" in ln]) == len(values)


def test_big_integers_serialized_as_strings(capsys):
    code, out, _ = run(capsys, "hilbert", "--p", "12", "--a", "40,50,60", "--rmax", "8", "--format", "json")
    data = json.loads(out)
    big = int(data["values"][-1])
    assert big > 2**53
    assert all(isinstance(v, str) for v in data["values"])


def test_verify_default_and_none(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "overall: pass" in out
    code, out, _ = run(capsys, "verify", "--suite", "none")
    assert code == 0 and "(0 suites)" in out


def test_verify_comb_lemma_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "comb-lemma", "--kmax", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["overall"]
    assert data["suites"][0]["name"] == "comb-lemma"


def test_verify_reports_counterexample(monkeypatch, capsys):
    from exckit import verify

    def broken(opts):
        res = verify.SuiteResult("broken")
        res.expect(False, "k=1 j=0: 2 != 1")
        return res

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    assert code == 1
    assert "counterexample: k=1 j=0" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "exckit", "check", "--p", "1", "--a", "-1,3", "--system", "split"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "overall: pass" in proc.stdout
