import subprocess
import sys

import pytest

from freeccc import Report, cli
from freeccc.lam import Abs, App, Var
from freeccc.syntax import Atom


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "freeccc", *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_check_eq_equal(sig_file):
    code, out, _ = run("check-eq", sig_file, "f . id[A]", "f")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "EQUAL"
    assert lines[1].startswith("nf1: ") and lines[2].startswith("nf2: ")


def test_check_eq_not_equal(sig_file):
    code, out, _ = run("check-eq", sig_file, "p1[A,A]", "p2[A,A]")
    assert code == 1
    assert out.splitlines()[0] == "NOT-EQUAL"


@pytest.mark.parametrize(
    "args",
    [
        ("typeof", "{sig}", "f . g"),
        ("typeof", "{sig}", "nope"),
        ("typeof", "{sig}", "<f,"),
        ("typeof", "/nonexistent/file.sig", "f"),
        ("check-eq", "{sig}", "id[A]", "id[B]"),
        ("check-eq", "{sig}", "f"),
        ("apply", "--left", "{sig}", "f"),
        ("instantiate", "{sig}", "x", "f"),
        ("frobnicate",),
    ],
)
def test_user_errors_exit_2(sig_file, args):
    code, _, err = run(*(a.format(sig=sig_file) for a in args))
    assert code == 2
    assert err


def test_bad_signature_exit_2(tmp_path):
    bad = tmp_path / "bad.sig"
    bad.write_text("object A\nindeterminate x : A |- A\n")
    code, _, err = run("typeof", bad, "id[A]")
    assert code == 2 and "source T" in err


def test_commands(sig_file):
    code, out, _ = run("typeof", sig_file, "eps[A,B]")
    assert (code, out.strip()) == (0, "A*(A->B) |- B")
    code, out, _ = run("normalize", sig_file, "curry[D,A](h)")
    assert code == 0
    assert out.splitlines()[0] == r"nf: \v0:A. \v1:D. h <v1, v0>"
    code, out, _ = run("abstract", "--left", sig_file, "x")
    assert (code, out.splitlines()[0]) == (0, "p1[D,T]")
    code, out, _ = run("abstract", "--right", sig_file, "x")
    assert out.splitlines() == ["curry[D,T](p1[D,T])", "type: T |- D->D"]
    code, out, _ = run("apply", "--left", sig_file, "p2[D,A]")
    assert (code, out.splitlines()[0]) == (0, "p2[D,A] . <x . k[A], id[A]>")
    code, out, _ = run("apply", "--right", "--simplify", sig_file, "curry[D,A](h)")
    assert (code, out.splitlines()[0]) == (0, "h . <x . k[A], id[A]>")


def test_instantiate(tmp_path):
    sig = tmp_path / "pt.sig"
    sig.write_text("object A D\narrow d : T |- D\narrow q : D |- A\nindeterminate x : T |- D\n")
    code, out, _ = run("instantiate", sig, "q . x . k[A]", "d")
    assert (code, out.splitlines()[0]) == (0, "q . d . k[A]")


def test_selftest_writes_report(sig_file, tmp_path):
    path = tmp_path / "report.txt"
    code, out, _ = run("selftest", sig_file, "--cases", "4", "--depth", "2", "--seed", "5", "--report", path)
    assert code == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())
    report = Report.from_text(path.read_text())
    assert report.passed and report.seed == 5 and report.case_count == 4


def test_selftest_deterministic(sig_file, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run("selftest", sig_file, "--cases", "3", "--depth", "2", "--report", a)
    run("selftest", sig_file, "--cases", "3", "--depth", "2", "--report", b)
    assert a.read_text() == b.read_text()


def test_selftest_needs_indeterminate(tmp_path):
    sig = tmp_path / "plain.sig"
    sig.write_text("object A\n")
    code, _, err = run("selftest", sig, "--cases", "1")
    assert code == 2 and "indeterminate" in err


def test_invariant_breach_exit_3(sig_file, monkeypatch, capsys):
    # a normalizer returning a beta-redex must be reported as an internal error
    redex = Abs(Atom("A"), App(Abs(Atom("A"), Var(1)), Var(0)))
    monkeypatch.setattr(cli, "normal_form", lambda f, sig: redex)
    assert cli.main(["normalize", str(sig_file), "f"]) == 3
    assert "internal error" in capsys.readouterr().err
