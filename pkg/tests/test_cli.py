import json
import subprocess
import sys

import pytest

PRIMES_CSV = "2,3,5\n7,11,13\n17,19,23\n"
SMALL_CSV = "1,2\n3,4\n"


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "quasimm", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


@pytest.fixture()
def primes_path(tmp_path):
    path = tmp_path / "primes.csv"
    path.write_text(PRIMES_CSV)
    return str(path)


@pytest.fixture()
def small_path(tmp_path):
    path = tmp_path / "small.csv"
    path.write_text(SMALL_CSV)
    return str(path)


def test_expand_golden_outputs():
    cases = {
        ("qs", "2,1", "M"): "M[2,1] + M[1,1,1]",
        ("s", "1,1,1", "M"): "M[1,1,1]",
        ("p", "2,1", "Psi"): "Psi[2,1] + Psi[1,2]",
        ("p", "2,1", "Phi"): "Phi[2,1] + Phi[1,2]",
        ("qs", "1,2", "M"): "M[1,2] + M[1,1,1]",
        ("h", "2,1", "M"): "M[3] + 2*M[2,1] + 2*M[1,2] + 3*M[1,1,1]",
        ("e", "2", "M"): "M[1,1]",
    }
    for (basis, index, target), expected in cases.items():
        result = run_cli("expand", basis, index, "--target", target)
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == expected
        assert result.stderr == ""


def test_expand_exponent_shorthand():
    long_form = run_cli("expand", "e", "1,1,1,1")
    short_form = run_cli("expand", "e", "1^4")
    braced = run_cli("expand", "e", "1^{4}")
    assert long_form.returncode == short_form.returncode == braced.returncode == 0
    assert long_form.stdout == short_form.stdout == braced.stdout
    mixed = run_cli("expand", "qs", "2,1^2")
    plain = run_cli("expand", "qs", "2,1,1")
    assert mixed.stdout == plain.stdout


def test_expand_is_deterministic():
    first = run_cli("expand", "h", "2,1")
    second = run_cli("expand", "h", "2,1")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_expand_json_payload(tmp_path):
    out = tmp_path / "expansion.json"
    result = run_cli("expand", "s", "2,1", "--json", str(out))
    assert result.returncode == 0
    payload = json.loads(out.read_text())
    assert payload == {
        "basis": "M",
        "terms": [
            {"index": "2,1", "coeff": "1"},
            {"index": "1,2", "coeff": "1"},
            {"index": "1,1,1", "coeff": "2"},
        ],
    }


def test_expand_usage_errors():
    not_partition = run_cli("expand", "m", "1,2")
    assert not_partition.returncode == 2
    assert "error:" in not_partition.stderr
    malformed = run_cli("expand", "m", "2,x")
    assert malformed.returncode == 2
    unknown_basis = run_cli("expand", "w", "2")
    assert unknown_basis.returncode == 2


def test_qimm_command(primes_path):
    psi = run_cli("qimm", primes_path, "qs", "2,1")
    assert psi.returncode == 0
    assert psi.stdout.strip() == "3278"
    phi = run_cli("qimm", primes_path, "qs", "2,1", "--variant", "phi")
    assert phi.returncode == 0
    assert phi.stdout.strip() == "1950"


def test_qimm_degree_mismatch(small_path):
    result = run_cli("qimm", small_path, "qs", "2,1")
    assert result.returncode == 2
    assert "does not match" in result.stderr


def test_matrix_scalar_commands(primes_path, small_path):
    assert run_cli("d2", primes_path).stdout.strip() == "-316"
    assert run_cli("imm", primes_path, "2,1").stdout.strip() == "-316"
    assert run_cli("imm", primes_path, "1,1,1").stdout.strip() == "-78"
    assert run_cli("det", primes_path).stdout.strip() == "-78"
    assert run_cli("perm", primes_path).stdout.strip() == "3746"
    assert run_cli("det", small_path).stdout.strip() == "-2"
    assert run_cli("perm", small_path).stdout.strip() == "10"


def test_scalar_json_payload(tmp_path, small_path):
    out = tmp_path / "det.json"
    result = run_cli("det", small_path, "--json", str(out))
    assert result.returncode == 0
    assert json.loads(out.read_text()) == {"value": "-2"}


def test_fractional_csv_entries(tmp_path):
    path = tmp_path / "rational.csv"
    path.write_text("1/2,1\n1,1/2\n")
    result = run_cli("det", str(path))
    assert result.returncode == 0
    assert result.stdout.strip() == "-3/4"


def test_json_matrix_input(tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({"n": 2, "entries": [["1", "2"], ["3", "4"]]}))
    result = run_cli("perm", str(path))
    assert result.returncode == 0
    assert result.stdout.strip() == "10"


def test_input_errors_exit_one(tmp_path):
    missing = run_cli("det", str(tmp_path / "nope.csv"))
    assert missing.returncode == 1
    assert "error:" in missing.stderr
    ragged = tmp_path / "ragged.json"
    ragged.write_text(json.dumps({"entries": [[1, 2], [3]]}))
    assert run_cli("det", str(ragged)).returncode == 1


def test_imm_usage_errors(primes_path):
    wrong_order = run_cli("imm", primes_path, "2,2")
    assert wrong_order.returncode == 2
    not_partition = run_cli("imm", primes_path, "1,2")
    assert not_partition.returncode == 2


def test_verify_examples():
    result = run_cli("verify", "examples")
    assert result.returncode == 0
    assert result.stdout.splitlines()[-1] == "16/16 checks passed"
    assert "ccomp-worked-example" in result.stdout


def test_verify_scopes_with_bound(tmp_path):
    th4 = run_cli("verify", "theorem4", "--max-n", "4")
    assert th4.returncode == 0
    assert "hook-rule-n3" in th4.stdout and "hook-rule-n4" in th4.stdout
    assert th4.stdout.splitlines()[-1] == "2/2 checks passed"

    toeplitz = run_cli("verify", "toeplitz", "--max-n", "5")
    assert toeplitz.returncode == 0
    assert toeplitz.stdout.splitlines()[-1] == "7/7 checks passed"

    out = tmp_path / "report.json"
    full = run_cli("verify", "all", "--max-n", "4", "--json", str(out))
    assert full.returncode == 0
    assert full.stdout.splitlines()[-1] == "10/10 checks passed"
    payload = json.loads(out.read_text())
    assert payload["all_pass"] is True
    assert {"id", "expected", "got", "pass"} == set(payload["items"][0])


def test_toeplitz_command():
    result = run_cli("toeplitz", "3")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload == {
        "n": 3,
        "entries": [["0", "1", "0"], ["1", "0", "1"], ["0", "1", "0"]],
    }
    assert run_cli("toeplitz", "0").returncode == 2


def test_missing_subcommand_is_usage_error():
    assert run_cli().returncode == 2
