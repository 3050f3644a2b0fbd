"""CLI behavior: exit codes, formats, golden lines, re-rendering."""

import json

import pytest

from gpdim.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_dim_human(capsys):
    code, out = run(["dim", "--n", "38", "--m", "3"], capsys)
    assert code == 0
    assert "dimension=4" in out
    assert "witness=u1 u16 v17 v38" in out
    assert out.rstrip().endswith("status: computed")


def test_dim_jsonl_fields(capsys):
    code, out = run(["dim", "--n", "10", "--m", "2", "--format", "jsonl"], capsys)
    assert code == 0
    (line,) = out.strip().splitlines()
    record = json.loads(line)
    assert record["kind"] == "dim"
    assert (record["n"], record["m"], record["dimension"]) == (10, 2, 3)
    assert record["witness"] == ["u1", "u2", "u3"]


def test_dim_bad_parameters_exit_2(capsys):
    assert main(["dim", "--n", "38", "--m", "19"]) == 2
    assert main(["dim", "--n", "2", "--m", "1"]) == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", "nonsense"])
    assert err.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "lower", "--range", "41:38"],
        ["verify", "lower", "--range", "38"],
        ["verify", "distances", "--mod6", "0,1"],
        ["verify", "distances", "--mod6", "seven"],
        ["dim", "--n", "abc"],
    ],
)
def test_adversarial_flags_exit_2(argv):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


def test_verify_distances_csv_golden(capsys):
    code, out = run(["verify", "distances", "--n", "38", "--format", "csv"], capsys)
    assert code == 0
    assert out == "n,pairs_checked,mismatches\n38,5776,0\n"


def test_verify_distances_domain_error(capsys):
    assert main(["verify", "distances", "--n", "36"]) == 2


def test_verify_lower_pass(capsys):
    code, out = run(
        ["verify", "lower", "--range", "38:41", "--format", "csv"], capsys
    )
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "n,m,size,found,candidates_checked,symmetry"
    assert [r.split(",")[0] for r in rows[1:]] == ["38", "39", "40", "41"]
    assert all(r.split(",")[3] == "0" for r in rows[1:])


def test_verify_lower_gates_small_instances(capsys):
    # k < 6 needs --unchecked; P(14,3) then passes (its dimension is 4).
    assert main(["verify", "lower", "--n", "14"]) == 2
    code, out = run(
        ["verify", "lower", "--n", "14", "--unchecked", "--format", "human"], capsys
    )
    assert code == 0
    assert "status: verified" in out


def test_verify_lower_unchecked_failure_exit_1(capsys):
    # dim(P(37,3)) = 3, so the size-3 search finds a set and the claim fails.
    code, out = run(
        ["verify", "lower", "--n", "37", "--unchecked", "--format", "human"], capsys
    )
    assert code == 1
    assert "status: failed" in out
    assert "lower-counterexample" in out


def test_verify_upper_range(capsys):
    code, out = run(["verify", "upper", "--k", "6:8", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "k,n,resolving,family_mismatches,distinct"
    assert out.splitlines()[1] == "6,38,1,0,1"


def test_verify_good_lists_and_tables(capsys):
    code, out = run(["verify", "good-lists", "--n", "39", "--format", "csv"], capsys)
    assert code == 0
    assert "39,u1,21,21,1" in out
    code, out = run(["verify", "tables", "--n", "39", "--format", "csv"], capsys)
    assert code == 0
    assert "39,60,0,0" in out


def test_verify_witness_pairs(capsys):
    code, out = run(
        ["verify", "witness-pairs", "--n", "41", "--format", "csv"], capsys
    )
    assert code == 0
    assert "41,36,0" in out


def test_report_rerenders_jsonl_to_csv(tmp_path, capsys):
    saved = tmp_path / "lower.jsonl"
    code = main(
        ["verify", "lower", "--range", "38:39", "--format", "jsonl", "--out", str(saved)]
    )
    assert code == 0
    capsys.readouterr()
    code, out = run(["report", "--input", str(saved), "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "n,m,size,found,candidates_checked,symmetry"
    assert out.splitlines()[1].startswith("38,3,3,0,")


def test_report_missing_file_exit_2(capsys):
    assert main(["report", "--input", "/nonexistent.jsonl"]) == 2


def test_mod6_filter(capsys):
    code, out = run(
        ["verify", "distances", "--range", "38:50", "--mod6", "2", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert [r.split(",")[0] for r in out.strip().splitlines()[1:]] == ["38", "44", "50"]


def test_repeated_runs_byte_identical(capsys):
    args = ["verify", "lower", "--range", "38:39", "--format", "human"]
    _, first = run(args, capsys)
    _, second = run(args, capsys)
    assert first == second
