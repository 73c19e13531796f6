import json
import subprocess
import sys

import pytest

from cyclicsg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["distance", "cyclic", "12", "1:0", "12:0"], "3"),
    (["distance", "genq", "4", "2:0", "2:0"], "0"),
    (["distance", "dicyclic", "3", "4:0", "3:0"], "3"),
])
def test_distance(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_unknown_selector(capsys):
    code, _, err = run(capsys, "distance", "cyclic", "12", "5:0", "1:0")
    assert code == 2 and "Z5#0" in err


def test_show_dot(capsys):
    code, out, _ = run(capsys, "show", "dihedral", "6", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    nodes = {l.split()[0]: l.split('"')[1] for l in lines if "label=" in l}
    edges = [l.strip().rstrip(";").split(" -- ") for l in lines if " -- " in l]
    assert len(nodes) == 10 and len(edges) == 10
    z6 = next(k for k, v in nodes.items() if v == "Z6#0")
    nbrs = {nodes[b] for a, b in edges if a == z6} | {nodes[a] for a, b in edges if b == z6}
    assert nbrs == {"Z2#0", "Z3#0"}


def test_show_star(capsys):
    code, out, _ = run(capsys, "show", "genq", "3")
    assert code == 0
    assert "star (center Z2#0)" in out


def test_show_trivial(capsys):
    code, out, _ = run(capsys, "show", "cyclic", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 1 and data["edges"] == []


def test_export_to_file(tmp_path, capsys):
    target = tmp_path / "q8.dot"
    code, _, _ = run(capsys, "export", "genq", "3", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith('graph "Q8" {')
    assert target.read_text().count(" -- ") == 4


def test_export_deterministic(capsys):
    _, a, _ = run(capsys, "export", "minnc", "p=2", "r=3", "q=3", "--format", "json")
    _, b, _ = run(capsys, "export", "minnc", "p=2", "r=3", "q=3", "--format", "json")
    assert a == b


def test_audit_missing_spec(capsys):
    code, _, err = run(capsys, "audit", "missing.spec")
    assert code == 2 and "missing.spec" in err


def test_audit_spec_file(tmp_path, capsys):
    spec = tmp_path / "corpus.txt"
    spec.write_text("cyclic 1..30\ndihedral 3..10\n")
    code, out, _ = run(capsys, "audit", str(spec))
    assert code == 0 and out.rstrip().endswith("PASS")


def test_audit_mismatch_exit(tmp_path, capsys):
    spec = tmp_path / "corpus.txt"
    spec.write_text("cyclic 6 figure=4/5\n")
    code, out, _ = run(capsys, "audit", str(spec))
    assert code == 1 and "MISMATCH cyclic 6" in out


def test_audit_csv(tmp_path, capsys):
    spec = tmp_path / "corpus.txt"
    spec.write_text("genq 3\n")
    out_file = tmp_path / "r.csv"
    code, _, _ = run(capsys, "audit", str(spec), "--format", "csv", "--out", str(out_file))
    rows = out_file.read_text().splitlines()
    assert code == 0
    assert rows[0].startswith("descriptor,order,check")
    assert any("documented-discrepancy-confirmed" in r for r in rows)


def test_audit_small_examples_exit_code(capsys):
    code, out, _ = run(capsys, "audit", "--preset", "paper-figures")
    assert code == 0, out


def test_bad_usage():
    with pytest.raises(SystemExit) as exc:
        main(["show"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclicsg", "distance", "cyclic", "12", "1:0", "12:0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "3"
