"""Exit codes, output shapes and determinism of the command line."""

from __future__ import annotations

import io
import json

import pytest

from translatable.cli import main

Z4_TEXT = "1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_text_golden(capsys):
    code, out, _ = run(capsys, "build", "--k", "3", "--seq", "1 2 3 4")
    assert code == 0
    assert out == Z4_TEXT


def test_build_json_golden(capsys):
    code, out, _ = run(capsys, "build", "--k", "3", "--seq", "1,2,3,4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 4,
        "table": [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]],
    }


def test_detect_positive_and_negative(capsys, tmp_path):
    code, out, _ = run(capsys, "detect", "--k", "3", "--seq", "1 2 3 4")
    assert (code, out) == (0, "3\n")
    blocked = tmp_path / "reordered.txt"
    blocked.write_text("1 3 4 2\n3 1 2 4\n4 2 3 1\n2 4 1 3\n")
    code, out, _ = run(capsys, "detect", "--table", str(blocked))
    assert (code, out) == (1, "none\n")
    code, out, _ = run(capsys, "detect", "--table", str(blocked), "--format", "json")
    assert code == 1
    assert json.loads(out) == {"n": 4, "steps": []}


def test_detect_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(Z4_TEXT))
    code, out, _ = run(capsys, "detect", "--table", "-")
    assert (code, out) == (0, "3\n")


def test_check_verdicts_and_exit(capsys):
    code, out, _ = run(
        capsys, "check", "--k", "3", "--seq", "1 2 3 4", "--property", "commutative"
    )
    assert code == 0 and out == "commutative: yes\n"
    code, out, _ = run(
        capsys,
        "check",
        "--k",
        "3",
        "--seq",
        "1 2 3 4",
        "--property",
        "idempotent",
        "--format",
        "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["results"]["idempotent"]["holds"] is False
    assert payload["results"]["idempotent"]["witness"]["lhs"] == 3


def test_check_rejects_unknown_property(capsys):
    with pytest.raises(SystemExit) as info:
        run(capsys, "check", "--k", "3", "--seq", "1 2 3 4", "--property", "warm")
    assert info.value.code == 2


def test_lcond_requires_permutation_row(capsys):
    code, _, err = run(capsys, "lcond", "--k", "2", "--seq", "1 1 2 2")
    assert code == 2
    assert "permutation" in err


def test_construct_obstruction_exits_one(capsys):
    code, _, err = run(capsys, "construct", "idempotent", "--n", "6", "--k", "3")
    assert code == 1
    assert "collide" in err


def test_construct_cancellative_list(capsys):
    code, out, _ = run(
        capsys, "construct", "cancellative-semigroups", "--n", "6", "--k", "2"
    )
    assert code == 0
    assert out.splitlines() == [
        "6 2 : 1 2 3 4 5 6",
        "6 2 : 3 4 5 6 1 2",
        "6 2 : 5 6 1 2 3 4",
    ]
    code, out, _ = run(
        capsys, "construct", "cancellative-semigroups", "--n", "5", "--k", "2"
    )
    assert code == 1 and out == ""


def test_construct_union_payload(capsys):
    code, out, _ = run(
        capsys,
        "construct",
        "union-same-step",
        "--n",
        "12",
        "--k",
        "8",
        "--t",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 24 and payload["step"] == 8
    assert len(payload["copies"]) == 2


def test_missing_flags_exit_two(capsys):
    code, _, err = run(capsys, "construct", "left-unitary", "--k", "2")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "build", "--seq", "1 2 3")
    assert code == 2 and "--k" in err
    code, _, err = run(capsys, "build", "--k", "1", "--seq", "1 2 x")
    assert code == 2


def test_dual_subcommand(capsys):
    code, out, _ = run(capsys, "dual", "--n", "7", "--k", "3")
    assert (code, out) == (0, "kstar: 5\n")
    code, out, _ = run(capsys, "dual", "--n", "6", "--k", "2")
    assert (code, out) == (1, "kstar: none\n")
    code, out, _ = run(capsys, "dual", "--n", "5", "--k", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 5, "k": 2, "kstar": 3, "alterable": True}


def test_decompose_golden(capsys):
    code, out, _ = run(
        capsys, "decompose", "--k", "2", "--seq", "1 2 3 4 5 6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 3 and payload["t"] == 2
    assert payload["idempotents"] == [1, 4]
    assert payload["components"] == [[1, 3, 5], [2, 4, 6]]


def test_iso_golden_and_negative(capsys):
    code, out, _ = run(
        capsys,
        "iso",
        "--kind",
        "left-unitary",
        "--k",
        "2",
        "--seq",
        "1 2 3 4 5 6",
        "--seq",
        "3 4 5 6 1 2",
    )
    assert code == 0
    assert out == "map: 1->5 2->6 3->1 4->2 5->3 6->4\n"
    code, out, _ = run(capsys, "iso", "--kind", "cyclic", "--k", "2", "--seq", "1 2 3 4 5 6")
    assert (code, out) == (1, "none\n")


def test_iso_needs_two_sequences(capsys):
    code, _, err = run(capsys, "iso", "--kind", "left-unitary", "--k", "2", "--seq", "1 2 3 4 5 6")
    assert code == 2 and "twice" in err


def test_enumerate_and_exit_codes(capsys):
    code, out, _ = run(
        capsys,
        "enumerate",
        "--n",
        "6",
        "--k",
        "2",
        "--permutation-only",
        "--require",
        "associative",
    )
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--k", "3", "--require", "idempotent")
    assert code == 1 and out == ""
    code, _, err = run(capsys, "enumerate", "--n", "9", "--k", "2", "--permutation-only")
    assert code == 2 and "stops at n = 8" in err


def test_catalog_deterministic_bytes(capsys):
    first = run(capsys, "catalog", "--n", "4")
    second = run(capsys, "catalog", "--n", "4")
    assert first == second
    assert first[0] == 0
    assert "k=2 [idempotent,left-cancellative,permutation] 1" in first[1]


def test_out_writes_file_instead_of_stdout(capsys, tmp_path):
    target = tmp_path / "table.txt"
    code, out, _ = run(
        capsys, "build", "--k", "3", "--seq", "1 2 3 4", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert target.read_text() == Z4_TEXT


def test_verify_stream_and_summary(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "unique-step", "--max-n", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[-1] == {
        "theorem": "unique-step",
        "instances": 6,
        "failures": 0,
        "status": "pass",
    }
    assert all(entry["status"] == "pass" for entry in lines[:-1])
    assert "1 campaign(s), 0 failing" in err


def test_verify_expected_fail_passes(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "idempotent-existence", "--max-n", "6"
    )
    assert code == 0
    statuses = {json.loads(line).get("status") for line in out.splitlines()}
    assert "expected-fail" in statuses


def test_verify_unknown_campaign(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "warm")
    assert code == 2 and "unknown campaign" in err


def test_verify_list_is_complete(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "list")
    assert code == 0
    assert len(out.splitlines()) == 50


def test_rotate_text_shape(capsys):
    code, out, _ = run(capsys, "rotate", "--k", "3", "--seq", "1 4 3 2")
    assert code == 0
    assert out.splitlines()[0] == "1 2 3 4 | 1 4 3 2"
    assert len(out.splitlines()) == 4
