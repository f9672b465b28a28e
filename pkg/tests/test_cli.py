"""The command-line front end, driven through main(argv)."""

import json

import pytest

import gpaths.cli as cli
from gpaths.verification import CheckResult


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_is_deterministic(capsys):
    code, out, _ = run(capsys, ["enumerate", "--avoid", "uvu", "--length", "2"])
    assert code == 0
    assert out.splitlines() == ["uuvv", "uhv", "uvh", "ud", "huv", "hh"]


def test_enumerate_prints_empty_marker(capsys):
    code, out, _ = run(capsys, ["enumerate", "--family", "dyck", "--length", "0"])
    assert code == 0
    assert out == "(empty)\n"


def test_count_polynomial_text(capsys):
    code, out, _ = run(capsys, ["count", "--avoid", "uvu", "--length", "2"])
    assert code == 0
    assert out == "a^2 + 3*a*b + b^2 + c\n"


def test_count_nmax_with_rational_weights(capsys):
    code, out, _ = run(
        capsys, ["count", "--family", "schroder", "--nmax", "5", "--weights", "1,1"]
    )
    assert code == 0
    assert out.splitlines() == ["0\t1", "1\t0", "2\t2", "3\t0", "4\t6", "5\t0"]


def test_count_unweighted(capsys):
    code, out, _ = run(
        capsys, ["count", "--family", "hstring", "--length", "3", "--unweighted"]
    )
    assert code == 0
    assert out == "8\n"


def test_map_text_and_json(capsys):
    code, out, _ = run(capsys, ["map", "--bijection", "sigma", "--input", "uv"])
    assert (code, out) == (0, "ud\n")
    code, out, _ = run(
        capsys,
        ["map", "--bijection", "sigma", "--direction", "inv", "--input", "uudd"],
    )
    assert (code, out) == (0, "ud\n")
    code, out, _ = run(
        capsys,
        ["map", "--bijection", "sigma", "--input", "uv", "--format", "json"],
    )
    assert code == 0
    assert json.loads(out) == {"input": "uv", "output": "ud", "trace": []}
    code, out, _ = run(
        capsys,
        [
            "map", "--bijection", "sigma", "--input", "uv",
            "--format", "json", "--trace",
        ],
    )
    assert json.loads(out) == {"input": "uv", "output": "ud", "trace": ["base"]}


def test_series_coefficients(capsys):
    code, out, _ = run(capsys, ["series", "--name", "C", "--order", "4"])
    assert code == 0
    assert out.splitlines() == ["0\t1", "1\t1", "2\t2", "3\t5", "4\t14"]


def test_riordan_csv_and_json(capsys):
    argv = ["riordan", "--d", "S^3*one_over_1px", "--h", "x*S^2", "--nmax", "2"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    assert out.splitlines() == ["1", "5,1", "25,9,1"]
    code, out, _ = run(capsys, argv + ["--format", "json"])
    payload = json.loads(out)
    assert payload == {
        "d": "S^3*one_over_1px",
        "h": "x*S^2",
        "rows": [[1], [5, 1], [25, 9, 1]],
    }


def test_table_all_methods_agree(capsys):
    code, out, _ = run(capsys, ["table", "--stat", "U", "--nmax", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# brute"
    assert lines.count("1") == 3
    assert lines[-1] == "agree"
    assert "# riordan" in lines and "# formula" in lines


def test_table_single_method_json(capsys):
    code, out, _ = run(
        capsys,
        ["table", "--stat", "V", "--method", "riordan", "--nmax", "2",
         "--format", "json"],
    )
    assert code == 0
    assert json.loads(out) == {
        "stat": "V",
        "method": "riordan",
        "rows": [[1], [4, 1], [20, 8, 1]],
    }


def test_table_disagreement_exits_nonzero(capsys, monkeypatch):
    tables = {"brute": [[1]], "riordan": [[2]], "formula": [[1]]}
    monkeypatch.setattr(cli, "_table_rows", lambda stat, m, nmax: tables[m])
    code, out, _ = run(capsys, ["table", "--stat", "U", "--nmax", "0"])
    assert code == 1
    assert out.splitlines()[-1] == "DISAGREE"


def test_verify_small_suite_passes(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "identities", "--nmax", "3"])
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("PASS (") and lines[-1].endswith(" checks)")


def test_verify_reports_failures(capsys, monkeypatch):
    fake = [CheckResult("good", True, ""), CheckResult("bad", False, "boom")]
    monkeypatch.setattr(cli, "run_suite", lambda suite, nmax: fake)
    code, out, _ = run(capsys, ["verify", "--suite", "counts"])
    assert code == 1
    assert out.splitlines() == [
        "PASS good",
        "FAIL bad: boom",
        "FAIL (1 of 2 checks failed)",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--avoid", "udu", "--length", "2"],
        ["count", "--family", "dyck", "--avoid", "uu", "--length", "2"],
        ["count", "--length", "2", "--weighting", "narayana"],
        ["count", "--length", "1", "--weights", "1"],
        ["map", "--bijection", "sigma", "--input", "uvu"],
        ["riordan", "--d", "T^2", "--h", "x*S^2"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert err.startswith("error: ")


def test_unknown_subcommand_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["transmogrify"])
    assert exc.value.code == 2
