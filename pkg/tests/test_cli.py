import json
import subprocess
import sys
from pathlib import Path

import pytest

from hyperpart import build_partition, complete_hypergraph, gamma_abstract, parse_hypergraph, serialize
from hyperpart.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_golden(capsys):
    code, out, _ = run(capsys, "gen", "--r", 3, "--d", 2, "--part", 1)
    assert code == 0
    assert out.encode() == (DATA / "omega_r3_d2_part1.json").read_bytes()


def test_gen_all_writes_parts(tmp_path, capsys):
    code, _, _ = run(capsys, "gen", "--r", 2, "--d", 3, "--all", "-o", tmp_path)
    assert code == 0
    files = sorted(tmp_path.iterdir())
    assert len(files) == 3
    parts = [parse_hypergraph(f.read_bytes()) for f in files]
    assert [len(p) for p in parts] == [5, 5, 5]
    assert tuple(parts) == build_partition(2, 3).parts


def test_gen_r1(tmp_path, capsys):
    assert run(capsys, "gen", "--r", 1, "--d", 4, "--all", "-o", tmp_path)[0] == 0
    parts = [parse_hypergraph(f.read_bytes()) for f in sorted(tmp_path.iterdir())]
    assert [p.edges for p in parts] == [((1,),), ((2,),), ((3,),), ((4,),)]


def test_gen_labels(tmp_path, capsys):
    run(capsys, "gen", "--r", 3, "--d", 2, "--all", "--labels", "-o", tmp_path)
    lines = (tmp_path / "labels_r3_d2.txt").read_text().splitlines()
    assert len(lines) == 20
    assert "1 2 3 1" in lines and "4 5 6 2" in lines


def test_gen_txt_and_output_file(tmp_path, capsys):
    out = tmp_path / "p.txt"
    assert run(capsys, "gen", "--r", 3, "--d", 2, "--part", 2, "--format", "txt", "-o", out)[0] == 0
    assert parse_hypergraph(out.read_bytes()) == build_partition(3, 2).parts[1]


def test_gen_usage_errors(capsys):
    assert run(capsys, "gen", "--r", 3, "--d", 2)[0] == 2
    assert run(capsys, "gen", "--r", 3, "--d", 2, "--part", 3)[0] == 2
    code, _, err = run(capsys, "gen", "--r", 10, "--d", 3, "--part", 1)
    assert code == 2 and "guard" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--r", 3, "--d", 2, "--method", "both")
    assert code == 0 and out.strip().endswith("verdict: pass")
    code, out, _ = run(capsys, "verify", "--r", 4, "--d", 3, "--method", "betti")
    assert code == 0
    assert out.count("0 0 0 0 0 [") == 3
    code, out, _ = run(capsys, "verify", "--r", 2, "--d", 5, "--method", "collapse")
    assert code == 0 and out.count("9 steps, residual 0") == 5


def test_betti_command(capsys, tmp_path):
    assert run(capsys, "betti", "-i", DATA / "figure2.json")[1] == "0 0 1 0\n"
    assert run(capsys, "betti", "-i", DATA / "k4_3.txt")[1] == "0 0 0 1\n"
    assert run(capsys, "betti", "-i", DATA / "omega_r3_d2_part1.json")[1] == "0 0 0 0\n"
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 6, "r": 3, "edges": [[1, 1, 2]]}')
    code, _, err = run(capsys, "betti", "-i", bad)
    assert code == 2 and "edges[0]" in err
    assert run(capsys, "betti", "-i", tmp_path / "missing.json")[0] == 2


def test_collapse_command(capsys, tmp_path):
    code, out, _ = run(capsys, "collapse", "--r", 3, "--d", 2, "--strategy", "structured", "--emit", "steps")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 10
    assert lines[:3] == ["3 4 5 | 4 5", "2 4 6 | 4 6", "1 5 6 | 5 6"]
    code, out, _ = run(capsys, "collapse", "-i", DATA / "k4_3.txt")
    assert code == 1 and out == "steps: 0\nresidual: 4\n"
    empty = tmp_path / "empty.txt"
    empty.write_text("4 3\n")
    code, out, _ = run(capsys, "collapse", "-i", empty)
    assert code == 0 and out == "steps: 0\nresidual: 0\n"
    code, _, err = run(capsys, "collapse", "-i", DATA / "figure2.json", "--strategy", "structured")
    assert code == 2 and "structured" in err


def test_decompose_command(capsys):
    code, out, _ = run(capsys, "decompose", "--r", 3, "--d", 2)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert [int(ln.split()[2]) for ln in lines[:-1]] == [1, 1, 1, 2, 2, 2, 1]
    assert lines[-1].startswith("total 10")
    assert run(capsys, "decompose", "--r", 4, "--d", 3)[1].splitlines()[-1].startswith("total 165")
    out = run(capsys, "decompose", "--r", 2, "--d", 2)[1]
    assert out.splitlines() == ["1 3 1", "1 4 1", "2 - 1", "total 3 (expected 3)"]


def test_phi_command(capsys):
    assert run(capsys, "phi", "--r", 3, "--d", 2, "--a", 1)[1] == "6 4 5 1 2 3\n"
    out = run(capsys, "phi", "--r", 3, "--d", 3, "--a", 1)[1]
    assert out.split()[6:] == ["7", "8", "9"]
    code, out, _ = run(capsys, "phi", "--r", 3, "--d", 2, "--a", 1, "--check")
    assert code == 0 and out.splitlines()[-1] == "check: pass"
    assert run(capsys, "phi", "--r", 3, "--d", 2, "--a", 2)[0] == 2


def test_gamma_command(capsys):
    assert run(capsys, "gamma", "--k", 2, "--r", 4, "--a", 0, "--format", "txt")[1] == "1 3\n1 4\n2 3\n"
    out = run(capsys, "gamma", "--k", 2, "--r", 4, "--d", 3, "--js", "5,7", "--format", "txt")[1]
    assert out == "1 3 5 7\n1 4 5 7\n2 3 5 7\n"
    out = run(capsys, "gamma", "--k", 1, "--r", 4, "--a", 0)[1]
    assert json.loads(out) == {"n": 4, "r": 1, "edges": [[4]]}
    assert run(capsys, "gamma", "--k", 2, "--r", 3, "--d", 2, "--js", "4,5")[0] == 2


def test_iso_command(capsys, tmp_path):
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    a.write_text(serialize(gamma_abstract(3, 6, 0)))
    b.write_text(serialize(gamma_abstract(3, 6, 2)))
    c.write_text(serialize(gamma_abstract(3, 6, 3)))
    code, out, _ = run(capsys, "iso", "-i", a, "-j", b)
    assert code == 1 and out.startswith("not isomorphic")
    code, out, _ = run(capsys, "iso", "-i", a, "-j", c)
    assert code == 0 and len(out.split()) == 6
    d = tmp_path / "d.json"
    d.write_text(serialize(complete_hypergraph(6, 2)))
    assert run(capsys, "iso", "-i", a, "-j", d)[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperpart", "phi", "--r", "3", "--d", "2", "--a", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "6 4 5 1 2 3\n"
    proc = subprocess.run([sys.executable, "-m", "hyperpart", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2


@pytest.mark.parametrize("argv", [["gen", "--r", "3", "--d", "2", "--part", "1"],
                                  ["gen", "--r", "4", "--d", "2", "--part", "2", "--format", "txt"]])
def test_gen_deterministic(argv, capsys):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
