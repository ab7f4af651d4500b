# -*- coding: utf-8 -*-
"""`tl` alt komutları: stdout sözleşmesi ve 0 / 1 / 2 çıkış kodları."""

import io
import json

import pytest

import main
from config import PROG_NAME


def run(capsys, *argv):
    code = main.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestNormalize:
    @pytest.mark.parametrize("argv, expected", [
        (("u1 n1",), "c"),
        (("u1 n2",), "1"),
        (("h1 h1",), "n1 c u1"),
        (("u1 n1", "--theory", "L"), "C1^()"),
        (("h1 h1", "--n", "3"), "c h1"),
        (("h1 h1", "--theory", "Jn", "--n", "3"), "h1"),
    ])
    def test_normal_forms(self, capsys, argv, expected):
        code, out, _ = run(capsys, "normalize", *argv)
        assert code == main.EXIT_OK
        assert out == expected + "\n"

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("u2 n1\n"))
        code, out, _ = run(capsys, "normalize", "-")
        assert code == 0
        assert out == "1\n"

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "normalize", "h1 h2 h1", "--n", "3", "--trace")
        lines = out.splitlines()
        assert code == 0
        assert [line.split("\t")[0] for line in lines[:-1]] == ["hII", "hII"]
        assert lines[-2].split("\t")[1] == "h1"
        assert lines[-1] == "h1"

    def test_trace_needs_finite_theory(self, capsys):
        code, _, err = run(capsys, "normalize", "h1", "--trace")
        assert code == main.EXIT_ERROR
        assert f"{PROG_NAME} normalize: error:" in err

    def test_verbose(self, capsys):
        code, out, _ = run(capsys, "normalize", "u1 u1", "--verbose")
        assert code == 0
        assert out.splitlines() == ["u1 u3", "caps\t-", "circles\t0", "cups\t1 3"]

    def test_parse_error_is_logged(self, capsys, isolated_logs):
        code, out, err = run(capsys, "normalize", "u1 x")
        assert code == main.EXIT_ERROR
        assert out == ""
        assert f"{PROG_NAME} normalize: error:" in err
        entries = json.loads((isolated_logs / "local_errors.json").read_text(encoding="utf-8"))
        assert entries[-1]["type"] == "ParseError"
        assert entries[-1]["context"] == "normalize"

    def test_index_outside_width(self, capsys):
        code, _, _ = run(capsys, "normalize", "h3", "--n", "3")
        assert code == main.EXIT_ERROR


class TestEq:
    def test_equal(self, capsys):
        code, out, _ = run(capsys, "eq", "u1 n2", "1")
        assert (code, out) == (0, "equal\n")

    def test_circles_at_different_heights(self, capsys):
        assert run(capsys, "eq", "--theory", "K", "u1 n1", "u2 n2")[:2] == (0, "equal\n")
        assert run(capsys, "eq", "--theory", "L", "u1 n1", "u2 n2")[:2] == (2, "not equal\n")

    def test_not_equal(self, capsys):
        code, out, _ = run(capsys, "eq", "u1", "u2")
        assert (code, out) == (2, "not equal\n")

    def test_ignore_loops(self, capsys):
        assert run(capsys, "eq", "u1 n1", "1")[0] == 2
        assert run(capsys, "eq", "u1 n1", "1", "--ignore-loops")[0] == 0
        assert run(capsys, "eq", "h1 h1", "h1", "--n", "3", "--ignore-loops")[0] == 0

    def test_ln_identity(self, capsys):
        code, out, _ = run(capsys, "eq", "h1 C2^() h1", "C1^(()) h1", "--theory", "Ln", "--n", "4")
        assert (code, out) == (0, "equal\n")

    def test_arrows(self, capsys):
        code, out, _ = run(capsys, "eq", "phi 0 . gamma 0", "phi 0 . gamma 0", "--theory", "Kc")
        assert (code, out) == (0, "equal\n")
        code, out, _ = run(capsys, "eq", "phi 0", "phi 1", "--theory", "Kc")
        assert (code, out) == (2, "not equal\n")

    def test_lc_zero_caveat_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, "eq", "phi 0 . gamma 0", "phi 0 . gamma 0", "--theory", "Lc")
        assert code == 0
        assert out == "equal\n"
        assert "note:" in err

    def test_unknown_token(self, capsys):
        code, _, _ = run(capsys, "eq", "u1", "x1")
        assert code == main.EXIT_ERROR


class TestRender:
    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "h1")
        assert code == 0
        assert out == "    1   2\nT  T2  T1\nB  B2  B1\nloops: 0\n"

    def test_svg_to_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "h1.svg"
        code, out, _ = run(capsys, "render", "h1 c", "--format", "svg", "--output", str(target))
        assert code == 0
        assert out == ""
        assert "<svg" in target.read_text(encoding="utf-8")


class TestMatrix:
    def test_kn_representation(self, capsys):
        code, out, _ = run(capsys, "matrix", "h1", "--n", "2", "--p", "2")
        assert code == 0
        assert out == "1 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 1\n"

    def test_eta(self, capsys):
        code, out, _ = run(capsys, "matrix", "u1 n1", "--p", "3", "--format", "csv")
        assert (code, out) == (0, "3\n")

    def test_arrow(self, capsys):
        code, out, _ = run(capsys, "matrix", "phi 0 . gamma 0", "--arrow", "--p", "2")
        assert (code, out) == (0, "2\n")

    def test_size_cap(self, capsys):
        code, _, err = run(capsys, "matrix", "h1", "--n", "4", "--p", "2", "--max-dim", "8")
        assert code == main.EXIT_ERROR
        assert "error" in err


class TestBraidCheck:
    def test_p2(self, capsys):
        code, out, _ = run(capsys, "braid-check", "--p", "2", "--n", "3")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 7
        assert all(line.endswith("\tholds") for line in lines)
        assert sum(line.startswith("witness ") for line in lines) == 2

    def test_p3_negative_branch(self, capsys):
        code, out, _ = run(capsys, "braid-check", "--p", "3", "--n", "3", "--branch", "-")
        assert code == 0
        assert "fails" not in out

    def test_rational_alpha(self, capsys):
        code, out, _ = run(capsys, "braid-check", "--p", "3", "--n", "3", "--alpha", "3/2")
        assert code == 0
        assert "fails" not in out

    def test_zero_alpha(self, capsys):
        code, _, err = run(capsys, "braid-check", "--p", "2", "--n", "3", "--alpha", "0")
        assert code == main.EXIT_ERROR
        assert "alpha" in err

    def test_missing_required_option(self, capsys):
        code, _, _ = run(capsys, "braid-check", "--p", "2")
        assert code == main.EXIT_ERROR


class TestCounts:
    @pytest.mark.parametrize("n, count", [(0, 1), (3, 5), (4, 14), (6, 132)])
    def test_jones(self, capsys, n, count):
        code, out, _ = run(capsys, "count", "--jones", str(n))
        assert (code, out) == (0, f"{count}\n")

    def test_jones_list(self, capsys):
        code, out, _ = run(capsys, "count", "--jones", "2", "--list")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "2"
        assert sorted(lines[1:]) == ["1", "h1"]

    def test_jones_with_circles(self, capsys):
        code, out, _ = run(capsys, "count", "--jones", "3", "--circles", "2")
        assert (code, out) == (0, "5\n")

    def test_matchings(self, capsys):
        code, out, _ = run(capsys, "count", "--matchings", "4")
        assert (code, out) == (0, "14\n")

    def test_needs_a_mode(self, capsys):
        assert run(capsys, "count")[0] == main.EXIT_ERROR


class TestInvariants:
    def test_balance(self, capsys):
        assert run(capsys, "balance", "u1", "1")[:2] == (0, "1\n")
        assert run(capsys, "balance", "u1 u1", "n1")[:2] == (0, "3\n")

    def test_collapse(self, capsys):
        assert run(capsys, "balance", "u1 u1", "u1", "--collapse")[:2] == (0, "1\n")
        assert run(capsys, "balance", "u1 n1", "1", "--collapse")[:2] == (2, "no collapse\n")

    @pytest.mark.parametrize("term, pair", [("1", "1 1"), ("u1", "1 3"), ("u1 u1", "1 5"), ("h1", "3 3")])
    def test_crown(self, capsys, term, pair):
        assert run(capsys, "crown", term)[:2] == (0, pair + "\n")


class TestIndependence:
    def test_independent(self, capsys):
        code, out, _ = run(capsys, "independent", "--p", "2", "--n", "3")
        assert (code, out) == (0, "independent (rank 5 of 5)\n")

    def test_faithful(self, capsys):
        code, out, _ = run(capsys, "independent", "--p", "2", "--n", "3", "--faithful", "--circles", "1")
        assert code == 0
        assert out.splitlines() == ["independent (rank 5 of 5)", "faithful\t10 forms"]


class TestKernelSearch:
    def test_p2(self, capsys):
        code, out, _ = run(capsys, "kernel-search", "--p", "2", "--n", "3", "--max-len", "2")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "words\t16"
        assert "kernel\ts1 s1" in lines
        assert not any(line.startswith("candidate") for line in lines)


class TestVerify:
    def test_single_suite(self, capsys, isolated_logs):
        code, _, _ = run(capsys, "verify", "--suite", "catalan", "--quick")
        assert code == 0
        reports = list(isolated_logs.glob("verify_*.json"))
        assert len(reports) == 1
        report = json.loads(reports[0].read_text(encoding="utf-8"))
        assert report["all_passed"]
        assert list(report["suites"]) == ["catalan"]
        assert report["quick"] is True

    def test_html(self, capsys, isolated_logs):
        code, _, _ = run(capsys, "verify", "--suite", "catalan", "--quick", "--html")
        assert code == 0
        assert list(isolated_logs.glob("*.html"))

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "nope")[0] == main.EXIT_ERROR


def test_no_command(capsys):
    code, out, err = run(capsys)
    assert code == main.EXIT_ERROR
    assert out == ""
    assert "usage" in err
