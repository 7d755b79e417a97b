"""Command-line behavior: outputs, pipelines, and exit codes."""

import json

import pytest

from permsnake.cli import run


def _stdout_lines(capsys):
    out = capsys.readouterr().out
    return [ln for ln in out.splitlines() if ln.strip()]


def test_gen_ksnake_emits_valid_json(capsys):
    assert run(["gen", "ksnake", "--n", "5"]) == 0
    (line,) = _stdout_lines(capsys)
    obj = json.loads(line)
    assert obj["n"] == 5
    assert obj["metric"] == "kendall"
    assert obj["cyclic"] is True
    assert len(obj["transitions"]) == 45


def test_gen_linf_variants(capsys):
    assert run(["gen", "linf", "--n", "5"]) == 0
    odd = json.loads(_stdout_lines(capsys)[0])
    assert run(["gen", "linf", "--n", "5", "--variant", "even-top"]) == 0
    even = json.loads(_stdout_lines(capsys)[0])
    assert len(odd["transitions"]) == 18
    assert len(even["transitions"]) == 10


def test_gen_rmgc(capsys):
    assert run(["gen", "rmgc", "--n", "4"]) == 0
    obj = json.loads(_stdout_lines(capsys)[0])
    assert obj["metric"] is None
    assert len(obj["transitions"]) == 24


def test_gen_then_verify_pipeline(capsys, monkeypatch, tmp_path):
    assert run(["gen", "ksnake", "--n", "5"]) == 0
    line = _stdout_lines(capsys)[0]
    path = tmp_path / "code.json"
    path.write_text(line + "\n")
    assert run(["verify", str(path)]) == 0
    report = json.loads(_stdout_lines(capsys)[0])
    assert report["valid"] is True
    assert report["size"] == 45
    assert report["min_pairwise_distance"] == 2


def test_verify_reads_stdin(capsys, monkeypatch):
    import io

    assert run(["gen", "linf", "--n", "4"]) == 0
    line = _stdout_lines(capsys)[0]
    monkeypatch.setattr("sys.stdin", io.StringIO(line + "\n"))
    assert run(["verify", "-"]) == 0
    assert json.loads(_stdout_lines(capsys)[0])["valid"] is True


def test_verify_invalid_code_exits_one(capsys, monkeypatch):
    import io

    bad = json.dumps(
        {
            "n": 3,
            "metric": "kendall",
            "start": [1, 2, 3],
            "transitions": [2],
            "cyclic": False,
        }
    )
    monkeypatch.setattr("sys.stdin", io.StringIO(bad))
    assert run(["verify", "-"]) == 1
    report = json.loads(_stdout_lines(capsys)[0])
    assert report["valid"] is False
    assert report["witness"] == [0, 1]


def test_verify_metric_override(capsys, monkeypatch):
    import io

    line = json.dumps(
        {
            "n": 4,
            "metric": None,
            "start": [1, 2, 3, 4],
            "transitions": [3, 4, 3, 4, 3, 4, 3, 4],
            "cyclic": True,
        }
    )
    monkeypatch.setattr("sys.stdin", io.StringIO(line))
    assert run(["verify", "-", "--metric", "kendall"]) == 0
    # without any metric the command is a usage error
    monkeypatch.setattr("sys.stdin", io.StringIO(line))
    assert run(["verify", "-"]) == 2


def test_byte_identical_round_trip(capsys):
    assert run(["gen", "ksnake", "--n", "7"]) == 0
    line = _stdout_lines(capsys)[0]
    from permsnake.code_model import decode_code, encode_code

    code, metric = decode_code(line)
    assert encode_code(code, metric) == line


def test_rank_and_unrank_are_inverse_through_cli(capsys):
    assert run(["rank", "--family", "ksnake", "--n", "5", "--perm", "[3,1,2,4,5]"]) == 0
    assert _stdout_lines(capsys) == ["14"]
    assert run(["unrank", "--family", "ksnake", "--n", "5", "--rank", "14"]) == 0
    assert _stdout_lines(capsys) == ["[3,1,2,4,5]"]


def test_next_command(capsys):
    assert run(["next", "--family", "linf", "--n", "4", "--perm", "[1,2,4,3]"]) == 0
    assert _stdout_lines(capsys) == ["3"]
    assert run(["next", "--family", "ksnake", "--n", "3", "--perm", "[1,2,3]"]) == 0
    assert _stdout_lines(capsys) == ["3"]


def test_search_command(capsys):
    assert run(["search", "--n", "4", "--metric", "kendall"]) == 0
    obj = json.loads(_stdout_lines(capsys)[0])
    assert obj["size"] == 8
    assert obj["proven_optimal"] is True
    assert obj["best"]["transitions"] == [3, 4, 3, 4, 3, 4, 3, 4]


def test_search_budget_flag(capsys):
    assert run(
        ["search", "--n", "5", "--metric", "linf", "--budget", "1000"]
    ) == 0
    obj = json.loads(_stdout_lines(capsys)[0])
    assert obj["nodes"] <= 1000


def test_search_exhaustive_and_budget_conflict(capsys):
    assert (
        run(
            [
                "search",
                "--n",
                "4",
                "--metric",
                "linf",
                "--budget",
                "10",
                "--exhaustive",
            ]
        )
        == 2
    )
    assert "mutually exclusive" in capsys.readouterr().err


def test_bounds_single_and_range(capsys):
    assert run(["bounds", "--n", "5"]) == 0
    obj = json.loads(_stdout_lines(capsys)[0])
    assert obj["ksnake_size"] == 45
    assert obj["ksnake_density"] == "3/8"
    assert run(["bounds", "--n-range", "4:6"]) == 0
    rows = [json.loads(ln) for ln in _stdout_lines(capsys)]
    assert [r["n"] for r in rows] == [4, 5, 6]


def test_bounds_requires_exactly_one_selector(capsys):
    assert run(["bounds"]) == 2
    assert run(["bounds", "--n", "5", "--n-range", "4:6"]) == 2
    assert run(["bounds", "--n-range", "six"]) == 2


@pytest.mark.parametrize("target", ["ksnake5", "witness", "octal", "bounds"])
def test_repro_targets_pass(capsys, target):
    assert run(["repro", target]) == 0
    summary = json.loads(_stdout_lines(capsys)[0])
    assert summary["ok"] is True
    assert summary["failed"] == 0
    assert summary["target"] == target


def test_usage_errors_exit_two(capsys):
    assert run(["gen", "ksnake", "--n", "4"]) == 2
    assert "odd" in capsys.readouterr().err
    assert run(["verify", "no-such-file.json"]) == 2
    assert "cannot read" in capsys.readouterr().err
    assert run(["rank", "--family", "ksnake", "--n", "5", "--perm", "[1,1,2,3,4]"]) == 2
    assert run(["unrank", "--family", "linf", "--n", "4", "--rank", "99"]) == 2
    assert run(["rank", "--family", "ksnake", "--n", "7", "--perm", "[3,1,2,4,5]"]) == 2
    assert "length" in capsys.readouterr().err


def test_unknown_subcommand_exits_two(capsys):
    assert run(["frobnicate"]) == 2


def test_rank_rejects_non_codeword(capsys):
    assert (
        run(["rank", "--family", "linf", "--n", "4", "--perm", "[1,3,2,4]"]) == 2
    )
    assert "not a codeword" in capsys.readouterr().err
