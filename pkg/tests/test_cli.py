import csv
import io
import json
import subprocess
import sys

import pytest

from shadowring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def data_lines(out):
    return [line for line in out.splitlines() if not line.startswith("#")]


def test_rsk(capsys):
    code, out, _ = run(capsys, "rsk", "4,1,8,5,3,6,2,7")
    assert code == 0
    assert "P (1,2,6,7),(3,5),(4),(8)" in out
    assert "Q (1,3,6,8),(2,4),(5),(7)" in out


def test_rsk_json(capsys):
    code, out, _ = run(capsys, "rsk", "4,1,8,5,3,6,2,7", "--format", "json")
    data = json.loads(out)
    assert data["P"] == [[1, 2, 6, 7], [3, 5], [4], [8]]
    assert data["shape"] == [4, 2, 1, 1]


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "# n=4 field=QQ count=4"
    assert data_lines(out) == ["1,9,13,1"]


def test_hilbert_prime_field(capsys):
    _, out, _ = run(capsys, "hilbert", "--n", "4", "--field", "2")
    assert data_lines(out) == ["1,9,13,1"]


def test_shadow_and_check_rook(capsys, tmp_path):
    code, out, _ = run(capsys, "shadow", "4,1,8,5,3,6,2,7")
    assert "shadow set 8; (2,4) (4,8) (5,5) (7,3)" in out
    assert "iterate 2: 8; (5,8) (7,4)" in out
    rook = tmp_path / "r.txt"
    rook.write_text("8; (2,8) (3,7) (5,3) (6,5) (7,6)\n")
    code, out, _ = run(capsys, "check-rook", str(rook))
    assert code == 0 and "shadow_set no" in out
    code, out, _ = run(capsys, "check-rook", "8; (2,4) (4,8) (5,5) (7,3)", "--format", "json")
    assert json.loads(out)["permutation"] == "4,1,8,5,3,6,2,7"


def test_basis_csv(capsys):
    code, out, _ = run(capsys, "basis", "--n", "3", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "# n=3 field=QQ count=6"
    rows = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
    assert rows[0] == ["permutation", "degree", "shadow_set"]
    assert rows[-1] == ["3,2,1", "2", "3; (2,3) (3,2)"]


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--n", "2", "x[1,1]")
    assert data_lines(out) == ["x[2,2]"]
    code, out, _ = run(capsys, "reduce", "--n", "3", "x[1,1]*x[2,2] + 1/2", "--format", "json")
    data = json.loads(out)
    assert data["text"] and all("coeff" in t for t in data["normal_form"])


def test_reduce_parse_error(capsys):
    code, _, err = run(capsys, "reduce", "--n", "2", "x[1,1")
    assert code == 1
    assert "position 5" in err


def test_local_basis(capsys):
    code, out, _ = run(capsys, "local-basis", "--n", "3", "--k", "1")
    assert out.splitlines()[0] == "# n=3 k=1 field=QQ count=5"


def test_localize(capsys, tmp_path):
    path = tmp_path / "inv.csv"
    from shadowring.local_stats import builtin_statistic, write_statistic_csv

    path.write_text(write_statistic_csv(builtin_statistic("inv", 4)))
    code, out, _ = run(capsys, "localize", "--n", "4", str(path))
    assert code == 0 and "k=2" in out.splitlines()[0]
    code, out, _ = run(capsys, "localize", "--n", "4", "--k", "1", str(path))
    assert code == 0 and "not 1-local; minimal locality 2" in out
    code, out, _ = run(capsys, "localize", "--n", "4", "--builtin", "exc", "--format", "json")
    assert json.loads(out)["k"] == 1


def test_localize_rejects_floats(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text('permutation,value\n"1,2",0.5\n"2,1",1\n')
    code, _, err = run(capsys, "localize", "--n", "2", str(path))
    assert code == 1 and "floating-point" in err


def test_char_table_and_alpha(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "3")
    assert '"2,1",-1,0,2' in out
    code, out, _ = run(capsys, "alpha", "--n", "4", "--k", "2", "--format", "json")
    assert json.loads(out)["values"]["1,1,1,1"] == "13"


def test_rational_only(capsys):
    code, _, err = run(capsys, "char-table", "--n", "3", "--field", "5")
    assert code == 1 and "rationals" in err


@pytest.mark.parametrize("check", ["rsk", "hilbert", "basis", "membership", "graded", "novak-rhoades", "equivariant"])
def test_verify(capsys, check):
    code, out, _ = run(capsys, "verify", check, "--n", "4", "--samples", "20")
    assert code == 0
    assert "pass" in out


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "basis", "--n", "12")
    assert code == 2 and "refused" in err
    code, _, _ = run(capsys, "verify", "equivariant", "--n", "12")
    assert code == 2


def test_domain_errors(capsys):
    assert run(capsys, "rsk", "1,1,2")[0] == 1
    assert run(capsys, "hilbert", "--n", "0")[0] == 1
    assert run(capsys, "basis", "--n", "3", "--field", "4")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "alpha", "--n", "3", "--k", "5")[0] == 1


def test_counterexample_exit_code(capsys, monkeypatch):
    from shadowring import checks

    def fake(n):
        return checks.CheckReport("equivariant", n, False, 1, [{"d": 1}], counterexample=True)

    monkeypatch.setitem(checks.VERIFIERS, "equivariant", fake)
    code, out, _ = run(capsys, "verify", "equivariant", "--n", "4")
    assert code == 3 and "counterexample" in out


def test_output_file_and_determinism(capsys, tmp_path):
    target = tmp_path / "out.json"
    run(capsys, "basis", "--n", "4", "--format", "json", "--output", str(target))
    first = target.read_bytes()
    run(capsys, "basis", "--n", "4", "--format", "json", "--output", str(target), "--threads", "4")
    assert target.read_bytes() == first
    assert len(json.loads(first)["basis"]) == 24


def test_console_script():
    result = subprocess.run(
        [sys.executable, "-m", "shadowring.cli", "hilbert", "--n", "3"], capture_output=True, text=True, check=False
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[-1] == "1,4,1"
