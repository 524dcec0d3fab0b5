import json

import pytest

from sicherman.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_table(capsys):
    code, out, _ = run(capsys, "solve", "--sides", "6")
    assert code == 0
    assert "2 pairs, 3 distinct dice" in out
    assert "1,2,2,3,3,4 | 1,3,4,5,6,8" in out
    assert "1,2,3,4,5,6 | 1,2,3,4,5,6" in out


def test_solve_json_envelope(capsys):
    code, out, _ = run(capsys, "solve", "--sides", "6", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert set(env) == {"command", "parameters", "results", "status"}
    assert env["command"] == "solve"
    assert env["parameters"] == {"sides": 6}
    assert env["status"] == "ok"
    assert env["results"]["pair_count"] == 2
    assert [[1, 2, 2, 3, 3, 4], [1, 3, 4, 5, 6, 8]] in env["results"]["pairs"]
    # deterministic serialization round-trips byte for byte
    assert json.dumps(env, indent=2, sort_keys=True) == out.strip()


def test_solve_json_and_table_agree(capsys):
    _, table_out, _ = run(capsys, "solve", "--sides", "12")
    _, json_out, _ = run(capsys, "solve", "--sides", "12", "--format", "json")
    env = json.loads(json_out)
    assert f"{env['results']['pair_count']} pairs" in table_out


def test_solve_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--sides", "0")
    assert code == 2
    assert "error" in err


def test_missing_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_bad_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--sides", "six"])
    assert exc.value.code == 2


def test_search_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SICHERMAN_SEARCH_CAP", "5")
    code, _, err = run(capsys, "solve", "--sides", "30")
    assert code == 3
    assert "81" in err
    monkeypatch.setenv("SICHERMAN_SEARCH_CAP", "junk")
    code, _, err = run(capsys, "solve", "--sides", "30")
    assert code == 2


def test_mixed(capsys):
    code, out, _ = run(capsys, "mixed", "--sides", "2,8")
    assert code == 0
    assert "3 pairs" in out
    code, _, err = run(capsys, "mixed", "--sides", "2")
    assert code == 2


def test_unequal(capsys):
    code, out, _ = run(capsys, "unequal", "--sides", "6", "--targets", "4,9")
    assert code == 0
    assert "1,2,2,3 | 1,3,3,5,5,5,7,7,9" in out
    code, _, err = run(capsys, "unequal", "--sides", "6", "--targets", "4,8")
    assert code == 2
    assert "do not multiply" in err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--sides", "6", "--split", "2")
    assert code == 0
    assert "recipe: 1,2,3,3,4,4,5,5,5,6,6,6,7,7,8,8,9,10" in out
    assert "recipe matches expansion: yes" in out
    code, _, err = run(capsys, "decompose", "--sides", "6", "--split", "4")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(
        capsys, "verify", "--die", "1,2,2,3,3,4", "--die", "1,3,4,5,6,8",
        "--reference", "6",
    )
    assert code == 0
    assert out.strip() == "MATCH"
    code, out, _ = run(
        capsys, "verify", "--die", "1,2,3", "--die", "1,2,3", "--reference", "6"
    )
    assert code == 1
    assert out.startswith("MISMATCH at sum")
    code, _, _ = run(capsys, "verify", "--die", "1,2,3", "--reference", "6")
    assert code == 2


def test_verify_json_reports_difference(capsys):
    code, out, _ = run(
        capsys, "verify", "--die", "1,2,3", "--die", "1,2,3",
        "--reference", "3", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["results"]["match"] is True
    code, out, _ = run(
        capsys, "verify", "--die", "1,1,4", "--die", "1,2,3",
        "--reference", "3", "--format", "json",
    )
    assert code == 1
    env = json.loads(out)
    assert env["status"] == "fail"
    assert env["results"]["first_difference"]["sum"] == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--exponent", "5")
    assert code == 0 and out.strip() == "126"
    code, out, _ = run(capsys, "count", "--dice", "2", "--exponent", "5")
    assert code == 0 and out.strip() == "51"
    code, _, _ = run(capsys, "count", "--dice", "2", "--exponent", "0")
    assert code == 2


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "--bound", "12")
    assert code == 0
    assert "pass" in out and "FAIL" not in out
    code, out, _ = run(capsys, "identities", "--bound", "12", "--format", "json")
    env = json.loads(out)
    assert env["results"]["all_passed"] is True


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--sides", "6")
    assert code == 0
    assert "2 pairs" in out
    assert "1,2,2,3,3,4 | 1,3,4,5,6,8" in out
    code, _, err = run(capsys, "oracle", "--sides", "9", "--max-nodes", "5")
    assert code == 3


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--case", "p2q", "--primes", "2,3")
    assert code == 0
    assert "vector (2, 0, 1, 2): coefficient -2 at x^3" in out
    code, out, _ = run(
        capsys, "certify", "--case", "pqr", "--primes", "2,3,5", "--format", "json"
    )
    assert code == 0
    env = json.loads(out)
    assert len(env["results"]["certificates"]) == 4
    assert all(c["coefficient"] < 0 for c in env["results"]["certificates"])
    code, _, _ = run(capsys, "certify", "--case", "p2q", "--primes", "2,4")
    assert code == 2
    code, _, _ = run(capsys, "certify", "--case", "pqr", "--primes", "2,3")
    assert code == 2
