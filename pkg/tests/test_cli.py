from __future__ import annotations

import csv
import subprocess
import sys
from decimal import Decimal
from fractions import Fraction

import pytest

from catalan_paths import cli
from catalan_paths.path_lengths import average_length, average_limit
from catalan_paths.tree_oracle import PAIR_BOUND_ENV

# [DERIVED] frozen output of `figure-afinal --n 3,5 --rmax 6 --decimals 6`,
# checked cell by cell against exact fractions in test_golden_cells_are_exact
GOLDEN_SMALL = (
    "r,3,5,inf\n"
    "1,1.800000,2.142857,3.000000\n"
    "2,2.600000,3.285714,5.000000\n"
    "3,2.600000,3.761905,6.500000\n"
    "4,,3.761905,7.750000\n"
    "5,,3.285714,8.843750\n"
    "6,,,9.828125\n"
)


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------------------
# catalan


def test_catalan_lines(capsys):
    code, out, _ = run(["catalan", "3"], capsys)
    assert code == 0
    assert out.split() == ["1", "1", "2", "5"]
    code, out, _ = run(["catalan", "10"], capsys)
    assert out.splitlines()[-1] == "16796"
    code, out, _ = run(["catalan", "0"], capsys)
    assert out == "1\n"


def test_catalan_negative(capsys):
    code, _, err = run(["catalan", "-2"], capsys)
    assert code == cli.EXIT_DOMAIN
    assert "non-negative" in err


# ---------------------------------------------------------------------------
# avg


def test_avg_oracle_example(capsys):
    code, out, _ = run(["avg", "--n", "2", "--r", "1", "--method", "oracle"], capsys)
    assert code == 0
    assert out.startswith("S=6 count=4 A=3/2 (~1.5")


def test_avg_closed_reduces():
    line = cli.cmd_avg(50, 1, "closed")
    assert "A=75/26" in line
    assert line.endswith("(~2.8846153846)")


@pytest.mark.parametrize("n,r", [(1, 1), (4, 2), (7, 3), (9, 9), (12, 5)])
def test_avg_methods_agree(n, r):
    lines = {m: cli.cmd_avg(n, r, m) for m in ("closed", "recursive", "oracle", "series")}
    assert len(set(lines.values())) == 1


def test_avg_decimals_round_half_even():
    # A_2(1) = 3/2: zero decimals rounds the tie to the even neighbour
    assert cli.cmd_avg(2, 1, "closed", decimals=0).endswith("(~2)")
    assert cli.render_fraction(Fraction(5, 2), 0) == "2"
    assert cli.render_fraction(Fraction(7, 2), 0) == "4"
    assert cli.render_fraction(Fraction(-1, 8), 2) == "-0.12"
    assert cli.render_fraction(Fraction(1, 3), 5) == "0.33333"


def test_avg_out_of_range(capsys):
    code, _, err = run(["avg", "--n", "5", "--r", "9"], capsys)
    assert code == cli.EXIT_DOMAIN
    assert "r out of range" in err


def test_avg_bad_decimals(capsys):
    code, _, _ = run(["avg", "--n", "5", "--r", "1", "--decimals", "51"], capsys)
    assert code == cli.EXIT_DOMAIN


def test_avg_series_bound(capsys):
    code, _, err = run(["avg", "--n", "40", "--r", "30", "--method", "series"], capsys)
    assert code == cli.EXIT_BOUND
    assert "--order 64" in err
    code, out, _ = run(["avg", "--n", "40", "--r", "30", "--method", "series", "--order", "69"], capsys)
    assert code == 0
    assert out == cli.cmd_avg(40, 30, "closed") + "\n"


def test_avg_oracle_env_bound(capsys, monkeypatch):
    monkeypatch.setenv(PAIR_BOUND_ENV, "5")
    code, _, err = run(["avg", "--n", "6", "--r", "1", "--method", "oracle"], capsys)
    assert code == cli.EXIT_BOUND
    assert "5" in err
    code, _, _ = run(["avg", "--n", "5", "--r", "1", "--method", "oracle"], capsys)
    assert code == 0


def test_argparse_errors_are_domain_errors(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["avg", "--n", "5"])
    assert info.value.code == cli.EXIT_DOMAIN
    with pytest.raises(SystemExit) as info:
        cli.main(["avg", "--n", "5", "--r", "1", "--method", "magic"])
    assert info.value.code == cli.EXIT_DOMAIN
    capsys.readouterr()


# ---------------------------------------------------------------------------
# figure-afinal


def test_golden_small_figure(tmp_path, capsys):
    out = tmp_path / "fig.csv"
    code, msg, _ = run(["figure-afinal", "--n", "3,5", "--rmax", "6", "--decimals", "6", "--out", str(out)], capsys)
    assert code == 0
    assert "6 rows" in msg
    assert out.read_bytes() == GOLDEN_SMALL.encode("utf-8")


def test_golden_cells_are_exact():
    rows = list(csv.reader(GOLDEN_SMALL.splitlines()))
    for row in rows[1:]:
        r = int(row[0])
        for n, cell in zip((3, 5), row[1:3]):
            want = cli.render_fraction(average_length(n, r), 6) if r <= n else ""
            assert cell == want
        assert row[3] == cli.render_fraction(average_limit(r), 6)


def test_figure_examples():
    rows = cli.figure_rows([50], rmax=4, decimals=6)
    assert rows[0] == ["r", "50", "inf"]
    assert rows[1] == ["1", "2.884615", "3.000000"]
    assert rows[4][2] == "7.750000"


def test_figure_default_rmax_is_largest_n():
    rows = cli.figure_rows([4, 7], decimals=3)
    assert len(rows) == 1 + 7
    assert rows[5][1] == "" and rows[5][2] != ""


def test_figure_roundtrip(tmp_path):
    out = tmp_path / "rt.csv"
    n_values = [50, 100, 200]
    cli.cmd_figure_afinal(n_values, None, str(out), decimals=12)
    raw = out.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(raw.decode("utf-8").splitlines()))
    assert rows[0] == ["r", "50", "100", "200", "inf"]
    half_ulp = Fraction(1, 2 * 10**12)
    for row in rows[1:]:
        r = int(row[0])
        for n, cell in zip(n_values, row[1:4]):
            if r > n:
                assert cell == ""
                continue
            assert abs(Fraction(Decimal(cell)) - average_length(n, r)) <= half_ulp
            assert cell == cli.render_fraction(average_length(n, r), 12)
        assert abs(Fraction(Decimal(row[4])) - average_limit(r)) <= half_ulp


def test_figure_large_n_cells_match_exact():
    rows = cli.figure_rows([20000], rmax=40, decimals=15)
    for r in (1, 2, 3, 17, 40):
        assert rows[r][1] == cli.render_fraction(average_length(20000, r), 15)


def test_round_guard_falls_back_to_exact(monkeypatch):
    # a huge guard forces the exact route for every cell; output must not change
    want = cli.figure_rows([30, 60], rmax=30, decimals=10)
    monkeypatch.setattr(cli, "_TIE_GUARD", Decimal(1))
    assert cli.figure_rows([30, 60], rmax=30, decimals=10) == want


def test_figure_unwritable_path(capsys, tmp_path):
    target = tmp_path / "missing" / "fig.csv"
    code, _, err = run(["figure-afinal", "--n", "3", "--out", str(target)], capsys)
    assert code == cli.EXIT_IO
    assert "error" in err


@pytest.mark.parametrize("text", ["", "3,x", "0,5", "-4"])
def test_figure_bad_n_list(text, capsys, tmp_path):
    code, _, _ = run(["figure-afinal", "--n", text, "--out", str(tmp_path / "f.csv")], capsys)
    assert code == cli.EXIT_DOMAIN


# ---------------------------------------------------------------------------
# verify


@pytest.mark.parametrize("suite,extra", [("identities", ["--order", "64"]), ("oracle", ["--nmax", "10"]), ("asymptotics", [])])
def test_verify_suites_pass(suite, extra, capsys):
    code, out, _ = run(["verify", "--suite", suite] + extra, capsys)
    assert code == 0, out
    lines = out.splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1].startswith(f"{suite}: ")


def test_verify_series_suite(capsys):
    code, out, _ = run(["verify", "--suite", "series"], capsys)
    assert code == 0, out


def test_verify_corrupted_table_fails(capsys):
    code, out, _ = run(["verify", "--suite", "identities", "--corrupt-catalan", "5"], capsys)
    assert code == cli.EXIT_VERIFY
    fails = [line for line in out.splitlines() if line.startswith("FAIL ")]
    assert fails
    assert all(":" in line for line in fails)


def test_verify_oracle_over_bound(capsys, monkeypatch):
    monkeypatch.setenv(PAIR_BOUND_ENV, "6")
    code, _, _ = run(["verify", "--suite", "oracle", "--nmax", "8"], capsys)
    assert code == cli.EXIT_DOMAIN


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catalan_paths", "avg", "--n", "3", "--r", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("S=27 count=15 A=9/5")
