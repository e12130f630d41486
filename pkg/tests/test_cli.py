import json

import pytest

from mdim.cli import main
from mdim.core import parse_vertex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_record(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 1, "one record per invocation"
    return code, json.loads(lines[0])


def payload(record):
    return {k: v for k, v in record.items() if k != "elapsed_ms"}


def test_verify_resolving_exit_zero(capsys):
    code, record = run_record(capsys, "verify", "--n", "5", "--set", "01000,00100,00010,00001")
    assert code == 0
    assert record["schema_version"] == "1"
    assert record["command"] == "verify"
    assert record["result"]["resolving"] is True
    assert record["result"]["witness"] is None
    assert record["result"]["vertices_checked"] == 32


def test_verify_set_notation(capsys):
    code, record = run_record(
        capsys, "verify", "--n", "5", "--set", "{1,2,3,4,5},{1,2,3},{2,4},{2,3,5}"
    )
    assert code == 0
    assert record["inputs"]["set"] == ["11111", "11100", "01010", "01101"]


def test_verify_failure_exit_one_with_witness(capsys):
    code, record = run_record(capsys, "verify", "--n", "5", "--set", "00100,00010,00001")
    assert code == 1
    assert record["result"]["resolving"] is False
    assert record["result"]["witness"] == ["10000", "01000"]


def test_verify_parse_error_exit_two(capsys):
    code, out, err = run(capsys, "verify", "--n", "5", "--set", "00100,0001,00001")
    assert code == 2
    assert out == ""
    assert "landmark 2" in err


def test_verify_fast_flag_same_payload(capsys):
    _, slow = run_record(capsys, "verify", "--n", "6", "--set", "010000,001000,000100,000010,000001")
    _, fast = run_record(
        capsys, "verify", "--n", "6", "--set", "010000,001000,000100,000010,000001", "--fast"
    )
    assert slow["result"] == fast["result"]
    assert slow["inputs"]["fast"] is False
    assert fast["inputs"]["fast"] is True


def test_minimal_of_minimal_set(capsys):
    code, record = run_record(capsys, "minimal", "--n", "5", "--set", "01000,00100,00010,00001")
    assert code == 0
    assert record["result"]["minimal"] is True
    assert record["result"]["removable"] == []


def test_minimal_of_er_set(capsys):
    code, record = run_record(
        capsys, "minimal", "--n", "5", "--set", "11111,01111,10111,11011,11101"
    )
    assert code == 0
    assert record["result"]["minimal"] is False
    assert "11111" in record["result"]["removable"]


def test_minimal_of_padded_set(capsys):
    code, record = run_record(
        capsys, "minimal", "--n", "5", "--set", "01000,00100,00010,00001,11111"
    )
    assert code == 0
    assert record["result"]["removable"] != []


def test_minimal_rejects_non_resolving_with_exit_one(capsys):
    code, record = run_record(capsys, "minimal", "--n", "5", "--set", "00100,00010,00001")
    assert code == 1
    assert record["result"]["resolving"] is False
    assert record["result"]["witness"] == ["10000", "01000"]
    assert record["result"]["minimal"] is None


def test_construct_er_reduced(capsys):
    code, record = run_record(capsys, "construct", "--name", "er-reduced", "--n", "5")
    assert code == 0
    assert record["result"]["members"] == ["01111", "10111", "11011", "11101"]
    assert record["result"]["size"] == 4


def test_construct_er_q5(capsys):
    code, record = run_record(capsys, "construct", "--name", "er-q5")
    assert code == 0
    assert record["result"]["members"] == ["11111", "11100", "01010", "01101"]


def test_construct_level(capsys):
    code, record = run_record(capsys, "construct", "--name", "level", "--n", "5", "--k", "2")
    assert code == 0
    assert record["result"]["size"] == 10
    assert len(record["result"]["members"]) == 10


def test_construct_list(capsys):
    code, record = run_record(capsys, "construct", "--list")
    assert code == 0
    names = [row["name"] for row in record["result"]["catalog"]]
    assert "basis-minimal" in names and "er-q5" in names


def test_construct_errors_exit_two(capsys):
    code, _, err = run(capsys, "construct", "--name", "nope")
    assert code == 2 and "unknown construction" in err
    code, _, err = run(capsys, "construct", "--name", "basis-minimal", "--n", "3")
    assert code == 2 and "n >= 5" in err
    code, _, err = run(capsys, "construct")
    assert code == 2


def test_dimension_q4(capsys):
    code, record = run_record(capsys, "dimension", "--n", "4")
    assert code == 0
    assert record["result"]["min_size"] == 4
    assert record["result"]["exhaustive"] is True
    assert record["result"]["example"] == ["0000", "1000", "0100", "0010"]


def test_dimension_guard(capsys):
    code, _, err = run(capsys, "dimension", "--n", "9")
    assert code == 2 and "forced" in err


def test_graph_verify(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("# path\np 3\n0 1\n1 2\n")
    code, record = run_record(capsys, "graph-verify", "--graph", str(path), "--landmarks", "0")
    assert code == 0
    assert record["result"]["resolving"] is True

    cyc = tmp_path / "c4.txt"
    cyc.write_text("p 4\n0 1\n1 2\n2 3\n3 0\n")
    code, record = run_record(capsys, "graph-verify", "--graph", str(cyc), "--landmarks", "0")
    assert code == 1
    assert record["result"]["witness"] == [1, 3]


def test_graph_verify_hypercube_file(tmp_path, capsys):
    lines = ["p 16"]
    seen = set()
    for v in range(16):
        for i in range(4):
            u = v ^ (1 << i)
            if (min(u, v), max(u, v)) not in seen:
                seen.add((min(u, v), max(u, v)))
                lines.append(f"{v} {u}")
    path = tmp_path / "q4.txt"
    path.write_text("\n".join(lines) + "\n")
    # small_minimum_set(4) = {phi, e2, e3, e4} = indices 0,2,4,8
    code, record = run_record(capsys, "graph-verify", "--graph", str(path), "--landmarks", "0,2,4,8")
    assert code == 0


def test_graph_verify_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3\n0 99\n")
    code, _, err = run(capsys, "graph-verify", "--graph", str(bad), "--landmarks", "0")
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "graph-verify", "--graph", str(tmp_path / "none.txt"), "--landmarks", "0")
    assert code == 2
    disc = tmp_path / "disc.txt"
    disc.write_text("p 4\n0 1\n2 3\n")
    code, _, err = run(capsys, "graph-verify", "--graph", str(disc), "--landmarks", "0")
    assert code == 2 and "connected" in err


def test_printed_vertices_reparse(capsys):
    _, record = run_record(capsys, "construct", "--name", "erdos-renyi", "--n", "7")
    n = record["result"]["n"]
    for text in record["result"]["members"]:
        assert parse_vertex(text, n) >= 0
        assert len(text) == n


def test_threads_flag_does_not_change_payload(capsys):
    records = []
    for t in ("1", "4", "8"):
        _, record = run_record(
            capsys, "verify", "--n", "6", "--set", "010000,001000,000100,000010,000001",
            "--threads", t,
        )
        records.append(payload(record))
    assert records[0] == records[1] == records[2]


def test_env_var_sets_default_threads(capsys, monkeypatch):
    monkeypatch.setenv("MDIM_THREADS", "4")
    _, record = run_record(capsys, "verify", "--n", "4", "--set", "0000,1000,0100,0010")
    assert record["result"]["resolving"] is True
    monkeypatch.setenv("MDIM_THREADS", "junk")
    code, record = run_record(capsys, "verify", "--n", "4", "--set", "0000,1000,0100,0010")
    assert code == 0


def test_seed_is_echoed(capsys):
    _, record = run_record(capsys, "verify", "--n", "4", "--set", "0000,1000,0100,0010", "--seed", "7")
    assert record["inputs"]["seed"] == 7


def test_pretty_output_is_not_json(capsys):
    code, out, err = run(capsys, "verify", "--n", "4", "--set", "0000,1000,0100,0010", "--pretty")
    assert code == 0
    assert "command: verify" in out
    assert "resolving: True" in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "5"])  # missing --set
    assert exc.value.code == 2
