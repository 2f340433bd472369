import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from pbern import cli
from pbern.pbernoulli import PBernoulliTable, Route


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_csv_recurrence(capsys):
    code, out, _ = run(["table", "--nmax", "2", "--pmax", "1", "--method", "recurrence", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,p,value"
    assert "1,1,-1/3" in lines and "2,0,1/6" in lines
    assert len(lines) == 1 + 3 * 2


def test_table_seed_row(capsys):
    code, out, _ = run(["table", "--nmax", "0", "--pmax", "3", "--method", "bivariate", "--format", "csv"], capsys)
    assert code == 0
    assert [l.split(",")[2] for l in out.splitlines()[1:]] == ["1"] * 4


def test_table_json_shape(capsys):
    code, out, _ = run(["table", "--nmax", "3", "--pmax", "2", "--method", "theorem1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert (doc["nmax"], doc["pmax"], doc["method"]) == (3, 2, "theorem1")
    e = doc["entries"][0]
    assert set(e) == {"n", "p", "num", "den"}
    assert isinstance(e["num"], str) and isinstance(e["den"], str)


def test_csv_json_round_trip(capsys):
    args = ["table", "--nmax", "8", "--pmax", "4", "--method", "all"]
    _, csv_out, _ = run(args + ["--format", "csv"], capsys)
    _, json_out, _ = run(args + ["--format", "json"], capsys)
    a, b = cli.parse_csv(csv_out), cli.parse_json(json_out)
    assert a == b
    assert a[1, 1] == F(-1, 3) and len(a) == 9 * 5


def test_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(["table", "--method", "corollary", "--format", "csv", "-o", str(path)], capsys)
    assert code == 0 and out == ""
    values = cli.parse_csv(path.read_text())
    assert len(values) == 21 * 11  # default nmax 20, pmax 10


def test_table_all_detects_fault(monkeypatch, capsys):
    real = cli.build_table

    def faulty(route, nmax, pmax):
        table = real(route, nmax, pmax)
        if route is Route.COROLLARY1:
            values = dict(table.values)
            values[1, 1] = F(1, 3)
            table = PBernoulliTable(nmax, pmax, route, values)
        return table

    monkeypatch.setattr(cli, "build_table", faulty)
    code, out, err = run(["table", "--nmax", "3", "--pmax", "2", "--method", "all", "--format", "csv"], capsys)
    assert code == 1
    assert out == ""
    assert "corollary (n=1,p=1)" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--method", "all"],
        ["table", "--format", "csv"],
        ["table", "--method", "nope", "--format", "csv"],
        ["table", "--nmax", "-1", "--method", "all", "--format", "csv"],
        ["verify"],
        ["verify", "--suite", "everything"],
        [],
    ],
)
def test_invalid_flags_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_verify_identities(capsys):
    code, out, _ = run(["verify", "--suite", "identities", "--nmax", "40", "--pmax", "12"], capsys)
    assert code == 0
    assert "binomial-harmonic: PASS (820 cases" in out
    assert out.splitlines()[-1].endswith(", 0 failures")


def test_verify_pde(capsys):
    code, out, _ = run(["verify", "--suite", "pde", "--nmax", "12", "--pmax", "6"], capsys)
    assert code == 0 and "pde: PASS" in out


def test_verify_all(capsys):
    code, out, _ = run(["verify", "--suite", "all", "--nmax", "8", "--pmax", "4"], capsys)
    assert code == 0
    total = out.splitlines()[-1]
    assert total.startswith("total: ") and not total.startswith("total: 0 ")


def test_verify_failure_exit_1(monkeypatch, capsys):
    from pbern import verify as V
    from pbern.polynomial import Polynomial

    monkeypatch.setattr(V, "collapse_rhs", lambda p: Polynomial.monomial(p + 1))
    code, out, _ = run(["verify", "--suite", "identities", "--nmax", "4", "--pmax", "3"], capsys)
    assert code == 1
    assert "collapse: FAIL" in out


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "pbern", "table", "--nmax", "6", "--pmax", "3", "--method", "all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
