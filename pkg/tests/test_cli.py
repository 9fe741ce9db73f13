import subprocess
import sys

import pytest

from edsm.cli import bench_rows, main, oracle_check

from conftest import TTA_TEXT


@pytest.fixture
def tta_file(tmp_path):
    f = tmp_path / "tta.eds"
    f.write_text(TTA_TEXT + "\n")
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_match_tta(capsys, tta_file):
    code, out, _ = run(capsys, "match", "-p", "TTA", "-t", tta_file, "--mode", "edit1")
    assert code == 0
    lines = out.splitlines()
    assert "2\thamming1" in lines and "3\tedit1" in lines
    ends = [int(x.split("\t")[0]) for x in lines]
    assert ends == sorted(ends)


def test_match_exact_no_hits(capsys, tmp_path):
    f = tmp_path / "t.eds"
    f.write_text("A")
    assert run(capsys, "match", "-p", "A", "-t", str(f), "--mode", "exact")[:2] == (0, "1\texact\n")
    assert run(capsys, "match", "-p", "C", "-t", str(f), "--mode", "exact")[:2] == (1, "")


def test_match_stdin():
    r = subprocess.run([sys.executable, "-m", "edsm", "match", "-p", "A", "-t", "-", "--mode", "exact"],
                       input=b"A\n", capture_output=True)
    assert r.returncode == 0 and r.stdout == b"1\texact\n"


def test_errors_exit_2(capsys, tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["match", "-t", "x.eds"])
    assert e.value.code == 2
    capsys.readouterr()
    bad = tmp_path / "bad.eds"
    bad.write_text("{A,{B}")
    code, _, err = run(capsys, "match", "-p", "A", "-t", str(bad))
    assert code == 2 and "byte 3" in err
    code, _, err = run(capsys, "match", "-p", "A", "-t", str(tmp_path / "missing.eds"))
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "match", "-p", "A", "-t", str(bad).replace("bad", "x"), "--algo", "errata")
    assert code == 2


def test_decide(capsys, tta_file):
    assert run(capsys, "decide", "-p", "TTA", "-t", tta_file, "--mode", "exact")[:2] == (0, "yes\n")
    assert run(capsys, "match", "-p", "GGGG", "-t", tta_file, "--task", "decide")[:2] == (1, "no\n")


def test_verbose_summary(capsys, tta_file):
    code, _, err = run(capsys, "match", "-p", "TTA", "-t", tta_file, "--verbose")
    assert code == 0 and "7 end positions" in err


def test_gen_deterministic_and_planted(capsys, tmp_path):
    a = run(capsys, "gen", "--seed", "1")[1]
    b = run(capsys, "gen", "--seed", "1")[1]
    assert a == b
    code, out, _ = run(capsys, "gen", "--seed", "4", "--n", "6", "--plant", "ACGTA")
    assert code == 0
    f = tmp_path / "g.eds"
    f.write_text(out)
    assert run(capsys, "match", "-p", "ACGTA", "-t", str(f), "--mode", "exact")[0] == 0
    assert run(capsys, "gen", "--seed", "1", "--n", "0")[0] == 2
    code, out, _ = run(capsys, "gen", "--seed", "2", "--eps-prob", "1")
    assert all("," in g or g == "" for g in out.strip().strip("{}").split("}{"))


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "1024", "2048", "--m", "8", "--algos", "geom", "grid")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "n,m,N,mode,algo,seconds"
    assert len(rows) == 5
    assert rows[1].startswith("16,8,1024,edit1,geom,")
    assert [r[4] for r in bench_rows([1024], 8, 1, ["hamming1"], ["errata", "geom"])] == ["errata", "geom"]


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--count", "20", "--seed", "3")
    assert code == 0 and out.startswith("PASS")
    assert oracle_check(5, 1) is None
