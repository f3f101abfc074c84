import json
import subprocess
import sys

import pytest

from signedalg.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def rs_gen(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("# R1, S1\ns=1 p=0 sign=+\ns=0 p=1 sign=+\n")
    return str(path)


def test_oracle_example(capsys, rs_gen):
    code, out, _ = _run(capsys, "oracle", "--gen", rs_gen)
    rep = json.loads(out)
    assert code == 0
    assert (rep["order"], rep["ac_count"], rep["s_plus"]) == (8, 6, 1)


def test_classify_example(capsys):
    code, out, _ = _run(capsys, "classify", "--n", "7", "--nplus", "0")
    assert code == 0 and json.loads(out)["label"] == "R_{7:3}(0)"


def test_factor_identity(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("3 3\n100\n010\n001\n")
    code, out, _ = _run(capsys, "factor", "--matrix", str(p))
    assert code == 0 and json.loads(out) == {"factors": [], "perm": "identity"}


def test_validation_errors_exit_2(capsys, tmp_path, rs_gen):
    code, _, err = _run(capsys, "oracle", "--gen", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("s=1 p=0 sign=+\ns=1 p=0 sign=+\n")
    code, _, err = _run(capsys, "oracle", "--gen", str(bad))
    assert code == 2 and "NotBasic" in err
    code, _, err = _run(capsys, "count", "--kind", "di", "--n", "5")
    assert code == 2 and "TooLarge" in err
    code, _, _ = _run(capsys, "classify")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys, tmp_path):
    args = ["count", "--kind", "commutant", "--n", "4", "--samples", "2000", "--seed", "7"]
    first = _run(capsys, *args)[1]
    assert _run(capsys, *args)[1] == first
    dest = tmp_path / "r.json"
    assert run(args + ["--output", str(dest)]) == 0
    assert dest.read_text() == first


def test_paper_literal_switches_formula(capsys):
    corrected = json.loads(_run(capsys, "count", "--kind", "s-plus", "--n", "2")[1])
    literal = json.loads(_run(capsys, "count", "--kind", "s-plus", "--n", "2", "--paper-literal")[1])
    assert corrected["match"] is True and literal["match"] is False
    ac = json.loads(_run(capsys, "count", "--kind", "ac", "--n", "3", "--paper-literal")[1])
    assert ac["exact"] == 24 and ac["match"] is False and ac["paper_discrepancies"]


def test_count_kinds(capsys):
    rep = json.loads(_run(capsys, "count", "--kind", "di", "--n", "3")[1])
    assert rep["exact"] == 168
    rep = json.loads(_run(capsys, "count", "--kind", "km", "--n", "4", "--j", "1")[1])
    assert rep["exact"] == 96 and rep["match"] is True
    rep = json.loads(_run(capsys, "count", "--kind", "p0", "--n", "6")[1])
    assert rep["exact"] == 7


def test_partition_and_replace(capsys, rs_gen):
    rep = json.loads(_run(capsys, "partition", "--gen", rs_gen)[1])
    assert rep["problems"] == [] and rep["same_group"] is True
    rep = json.loads(_run(capsys, "replace", "--gen", rs_gen, "--multiply", "0")[1])
    assert rep["same_group"] and rep["basic"]
    rep = json.loads(_run(capsys, "replace", "--gen", rs_gen, "--op", "ac-to-chain")[1])
    assert rep["same_group"]


def test_represent_and_ortho(capsys):
    code, out, _ = _run(capsys, "represent", "--element", "s=1 p=1 sign=+")
    assert code == 0 and out == "# s=1 p=1 sign=+\n0 -1\n1 0\n"
    code, out, _ = _run(capsys, "ortho", "--n", "5", "--vector", "11100")
    assert code == 0 and out.startswith("5 5\n")
    code, _, err = _run(capsys, "ortho", "--n", "3", "--vector", "111")
    assert code == 2 and "FlatlineInSpan" in err


def test_dual(capsys):
    rep = json.loads(_run(capsys, "dual", "--recipe", "2", "--i", "1", "--j", "1")[1])
    assert rep["match"] is True and rep["exact"] == 3 * 2 ** (2 * rep["N"] - 3)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signedalg.cli", "classify", "--n", "4",
                           "--nplus", "1"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["n"] == 4
