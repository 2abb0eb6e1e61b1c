import json

import pytest
from click.testing import CliRunner

import intervalpath.cli as cli
from intervalpath.cli import CSV_HEADER, main

PATH3_TEXT = "3\na 1 4\nb 3 6\nc 5 8\n"
STAR5_TEXT = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def path3_file(tmp_path):
    f = tmp_path / "path3.txt"
    f.write_text(PATH3_TEXT)
    return str(f)


def test_gen_proper_exact(runner):
    res = runner.invoke(main, ["gen", "--kind", "proper", "--n", "3", "--seed", "1"])
    assert res.exit_code == 0
    assert res.output == "3\nv1 1 3\nv2 2 5\nv3 4 6\n"


def test_gen_planted_record_count(runner):
    res = runner.invoke(main, ["gen", "--kind", "planted", "--n", "100", "--k", "3"])
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == "103"
    assert len(lines) == 104


def test_gen_rejects_bad_spec(runner):
    res = runner.invoke(main, ["gen", "--kind", "random", "--n", "0"])
    assert res.exit_code == 2


def test_solve_plain(runner, path3_file):
    res = runner.invoke(main, ["solve", path3_file])
    assert res.exit_code == 0
    assert res.output == "3 a b c\n"


def test_solve_json(runner, path3_file):
    res = runner.invoke(main, ["solve", path3_file, "--json"])
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["length"] == 3
    assert doc["path"] == ["a", "b", "c"]
    assert doc["stats"]["kappa"] == 722


def test_solve_missing_file(runner, tmp_path):
    res = runner.invoke(main, ["solve", str(tmp_path / "nope.txt")])
    assert res.exit_code == 2


def test_solve_rejects_weights(runner, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("1\na 1 2 3 1\n")
    res = runner.invoke(main, ["solve", str(f)])
    assert res.exit_code == 2


def test_solve_garbage_input(runner, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("not intervals\n")
    res = runner.invoke(main, ["solve", str(f)])
    assert res.exit_code == 2


def test_solve_verify_oracle_ok(runner, path3_file):
    res = runner.invoke(main, ["solve", path3_file, "--verify-oracle"])
    assert res.exit_code == 0
    assert res.output == "3 a b c\n"


def test_solve_verify_oracle_mismatch(runner, path3_file, monkeypatch):
    monkeypatch.setattr(cli, "brute_longest_path", lambda g: (99, []))
    res = runner.invoke(main, ["solve", path3_file, "--verify-oracle"])
    assert res.exit_code == 3
    assert "verification mismatch" in res.output


def test_reduce_stage1(runner, path3_file):
    res = runner.invoke(main, ["reduce", path3_file, "--stage", "1"])
    assert res.exit_code == 0
    assert res.output == (
        "3\nd0 1 2 0 1\nd1 5 6 0 1\na1 3 4 3 1\n"
        "# d: d0 d1\n# a: a1\n# u_sharp: \n"
    )


def test_reduce_stage2(runner, path3_file):
    res = runner.invoke(main, ["reduce", path3_file, "--stage", "2"])
    assert res.exit_code == 0
    assert res.output == (
        "3\nd0 1 2 0 1\nd1 5 6 0 1\na1 3 4 3 1\n"
        "# a: a1\n# b: d0 d1\n# kappa: 722\n"
    )


def test_reduce_dump_parses_back(runner, path3_file):
    from intervalpath.intervals import parse_intervals

    res = runner.invoke(main, ["reduce", path3_file, "--stage", "2"])
    g = parse_intervals(res.output.split("#")[0])
    assert g.n == 3
    assert set(g.names) == {"d0", "d1", "a1"}


def test_reduce_needs_stage(runner, path3_file):
    res = runner.invoke(main, ["reduce", path3_file])
    assert res.exit_code == 2


def test_bench_rows(runner):
    args = ["bench", "--kind", "random", "--n-list", "6,8", "--k-list", "0", "--reps", "3"]
    res = runner.invoke(main, args)
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 7
    ids = [ln.split(",", 1)[0] for ln in lines[1:]]
    assert ids == [
        "random_n6_k0_s1",
        "random_n6_k0_s2",
        "random_n6_k0_s3",
        "random_n8_k0_s1",
        "random_n8_k0_s2",
        "random_n8_k0_s3",
    ]
    for ln in lines[1:]:
        fields = ln.split(",")
        assert len(fields) == 14
        assert fields[7] == fields[13]


def strip_timings(output):
    rows = []
    for ln in output.splitlines()[1:]:
        f = ln.split(",")
        rows.append(f[:8] + f[13:])
    return rows


def test_bench_deterministic_apart_from_timings(runner, monkeypatch):
    args = ["bench", "--n-list", "12", "--k-list", "1", "--reps", "2"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert strip_timings(first.output) == strip_timings(second.output)
    monkeypatch.setenv("FPT_IP_THREADS", "2")
    third = runner.invoke(main, args)
    assert strip_timings(first.output) == strip_timings(third.output)


def test_bench_csv_file(runner, tmp_path):
    out = tmp_path / "rows.csv"
    args = ["bench", "--n-list", "6", "--k-list", "0", "--csv", str(out)]
    res = runner.invoke(main, args)
    assert res.exit_code == 0
    assert "wrote 1 rows" in res.output
    assert out.read_text().splitlines()[0] == CSV_HEADER


@pytest.mark.parametrize(
    "args",
    [
        ["bench", "--n-list", ",", "--k-list", "1"],
        ["bench", "--n-list", "6", "--k-list", "x"],
        ["bench", "--n-list", "6", "--k-list", "1", "--reps", "0"],
    ],
)
def test_bench_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_match_no(runner, tmp_path):
    f = tmp_path / "star.txt"
    f.write_text(STAR5_TEXT)
    res = runner.invoke(main, ["match", str(f), "--k", "2"])
    assert res.exit_code == 0
    assert res.output == "NO\nremoved_high_degree=1 kernel_n=0 kernel_m=0 k_prime=1\n"


def test_match_yes_without_kernel(runner, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    res = runner.invoke(main, ["match", str(f), "--k", "2"])
    assert res.exit_code == 0
    assert res.output.splitlines()[0] == "YES"
    assert "kernel=none" in res.output


def test_match_needs_k(runner, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert runner.invoke(main, ["match", str(f)]).exit_code == 2
    assert runner.invoke(main, ["match", str(f), "--k", "0"]).exit_code == 2


def test_match_garbage(runner, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("who knows\n")
    res = runner.invoke(main, ["match", str(f), "--k", "1"])
    assert res.exit_code == 2
