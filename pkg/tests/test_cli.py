from __future__ import annotations

import shutil
import subprocess

import pytest

from palbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jones_trefoil(capsys):
    assert run(capsys, "jones", "2", "", "|", "1 1 1") == (0, "t + t^3 - t^4\n", "")
    # the other accepted pair spellings
    assert run(capsys, "jones", "2:|1 1 1")[1] == "t + t^3 - t^4\n"
    assert run(capsys, "jones", "2", "", "1 1 1")[1] == "t + t^3 - t^4\n"
    assert run(capsys, "jones", "2", "|1 1 1")[1] == "t + t^3 - t^4\n"


def test_negative_words_are_not_options(capsys):
    code, out, _ = run(capsys, "alexander", "3", "-1", "2 -1 2")
    assert (code, out) == (0, "-t^-1 + 3 - t\n")
    code, out, _ = run(capsys, "palcheck", "3", "-1 2 -1")
    assert (code, out) == (0, "true\n")


def test_palcheck(capsys):
    assert run(capsys, "palcheck", "4", "1 2")[:2] == (1, "false\n")
    assert run(capsys, "palcheck", "4", "3 -2 1 -3 -2 3")[:2] == (0, "true\n")
    assert run(capsys, "palcheck", "--format=tsv", "2", "1 1")[1] == "2\t1 1\ttrue\n"


def test_closure_prints_pd(capsys):
    code, out, _ = run(capsys, "closure", "2:|1 1 1")
    assert code == 0
    assert out == "X 4 2 5 1 +\nX 2 6 3 5 +\nX 6 4 1 3 +\n"


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "1:|", "stabS first +", "dstab - +")
    assert (code, out) == (0, "4:3 -1|2 1 2\n")
    code, _, err = run(capsys, "apply", "2:1|", "stabS first +")
    assert code == 1 and "sigma_1" in err


def test_search_and_verify_round_trip(capsys, tmp_path):
    _, q, _ = run(capsys, "apply", "2:|1 1 1", "conj 1", "stabS first +")
    q = q.strip()
    code, trace, _ = run(capsys, "search", "2:|1 1 1", q)
    assert code == 0 and trace.count("\n") == 2
    path = tmp_path / "trace.txt"
    path.write_text(trace)
    assert run(capsys, "verify", "2:|1 1 1", q, str(path))[:2] == (0, "true\n")
    path.write_text(trace.replace("+", "-"))
    code, out, _ = run(capsys, "verify", "2:|1 1 1", q, str(path))
    assert code == 1 and out.startswith("false\t")


def test_search_not_found(capsys):
    code, out, _ = run(capsys, "search", "2:|1 1 1", "2:|", "--max-nodes", "20", "--max-conj-len", "1")
    assert (code, out) == (1, "NOT-FOUND\n")


def test_corpus_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "verify")
    lines = out.splitlines()
    assert code == 1 and len(lines) == 10
    assert lines[0] == "3_1 PASS"
    code, tsv, _ = run(capsys, "corpus", "verify", "--format=tsv")
    assert len(tsv.splitlines()) == 40
    good = tmp_path / "c.txt"
    good.write_text("3_1;2;;1 1 1;3_1\n4_1;3;-1;2 -1 2;4_1\n")
    assert run(capsys, "corpus", "verify", str(good))[:2] == (0, "3_1 PASS\n4_1 PASS\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("3_1;two;;1 1 1;3_1\n")
    code, _, err = run(capsys, "corpus", "verify", str(bad))
    assert code == 2 and "line 1" in err


def test_usage_errors(capsys):
    assert run(capsys, "palcheck", "x", "1")[0] == 2
    assert run(capsys, "jones", "2", "1 2", "1")[0] == 2
    assert run(capsys, "jones", "2", "a", "b", "c", "d")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "corpus", "verify", "/nonexistent/file")[0] == 2
    assert run(capsys, "jones", "3:1 2|")[0] == 1  # not palindromic


def test_output_is_byte_stable(capsys):
    first = run(capsys, "corpus", "verify", "--format=tsv")
    second = run(capsys, "corpus", "verify", "--format=tsv")
    assert first == second


@pytest.mark.skipif(shutil.which("palbraid") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["palbraid", "palcheck", "4", "1 2"], capture_output=True, text=True)
    assert res.returncode == 1 and res.stdout == "false\n"
