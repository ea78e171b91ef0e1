import subprocess
import sys

import pytest

from sprofile.cli import count, main


def run(*args):
    return subprocess.run([sys.executable, "-m", "sprofile", *args], capture_output=True, text=True)


@pytest.mark.parametrize("text, value", [("10", 10), ("1e6", 10**6), ("10^3", 1000),
                                         ("10**2", 100), ("1_000", 1000)])
def test_count_parser(text, value):
    assert count(text) == value


def test_gen_writes_lines(tmp_path):
    out = tmp_path / "s.txt"
    assert main(["gen", "--preset", "stream1", "--n", "10", "--m", "5", "--seed", "1",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 10
    assert all(1 <= int(l.split()[0]) <= 5 and l.split()[1] in "+-" for l in lines)


def test_gen_p_add_override(tmp_path):
    out = tmp_path / "s.txt"
    main(["gen", "--n", "200", "--m", "9", "--p-add", "1.0", "--out", str(out)])
    assert all(l.endswith(" +") for l in out.read_text().splitlines())


def test_gen_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        r = run("gen", "--preset", "stream3", "--n", "5000", "--m", "77", "--seed", "42",
                "--out", str(path))
        assert r.returncode == 0, r.stderr
    assert a.read_bytes() == b.read_bytes()


def test_gen_bad_args():
    r = run("gen", "--n", "10", "--m", "0", "--out", "x")
    assert r.returncode != 0 and "m" in r.stderr
    r = run("gen", "--preset", "stream9", "--n", "10", "--m", "3", "--out", "x")
    assert r.returncode != 0 and r.stderr


def test_gen_unwritable_path(tmp_path, capsys):
    assert main(["gen", "--n", "3", "--m", "3", "--out", str(tmp_path / "no" / "x")]) != 0
    assert "error" in capsys.readouterr().err


def test_verify_exit_codes(capsys):
    assert main(["verify", "--n", "1e4", "--m", "100", "--seed", "3"]) == 0
    assert main(["verify", "--n", "0", "--m", "5"]) == 0
    assert "ok" in capsys.readouterr().out


def test_bench_csv(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--query", "mode", "--impl", "sprofile,heap", "--preset", "stream1",
                 "--n", "1e4", "--m", "100,1000", "--repeats", "1", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "impl,query,preset,n,m,seed,elapsed_seconds,updates_per_second"
    assert len(lines) == 5


def test_bench_rejects_heap_median(capsys):
    assert main(["bench", "--query", "median", "--impl", "heap", "--n", "10", "--m", "10"]) != 0
    assert "heap" in capsys.readouterr().err


def test_peel_output(tmp_path, capsys):
    g = tmp_path / "k3.txt"
    g.write_text("1 2\n2 3\n1 3\n")
    assert main(["peel", str(g)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "degeneracy 2"
    assert out[1:] == ["1 2", "2 2", "3 2"]
    g.write_text("1 2\n2 3\n3 4\n")
    main(["peel", str(g)])
    assert capsys.readouterr().out.splitlines()[0] == "degeneracy 1"


def test_peel_parse_error(tmp_path, capsys):
    g = tmp_path / "bad.txt"
    g.write_text("1 2\n3\n")
    assert main(["peel", str(g)]) != 0
    assert ":2:" in capsys.readouterr().err
