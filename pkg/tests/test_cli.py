import json
import subprocess
import sys

import pytest

from hooklab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_hooks(capsys):
    code, out = run(capsys, "hooks", "6532", "--kind", "B")
    assert code == 0 and "(2,2)   5" in out
    _, out = run(capsys, "hooks", "6532", "--kind", "D")
    assert "(1,4)   8" in out
    _, out = run(capsys, "hooks", "1", "--kind", "B")
    assert "(1,1)   1" in out


@pytest.mark.parametrize("shape,f", [("432/2", 12), ("42", 5), ("543/543", 1)])
def test_count(capsys, shape, f):
    code, out = run(capsys, "count", shape, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "hooklab/1"
    assert doc["syt"] == doc["naruse_B"] == doc["naruse_D"] == doc["recursive"] == f


def test_verify_identity(capsys):
    code, out = run(capsys, "verify", "theorem1", "432/2", "--kind", "B")
    assert code == 0 and "pass" in out
    code, _ = run(capsys, "verify", "theorem1", "43/21")
    assert code == 0


def test_verify_bijection_json(capsys):
    code, out = run(capsys, "verify", "bijection", "865321/431", "--kind", "D", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["results"][0]["histogram"] == [42672, 11087, 2182, 741, 88, 62]


def test_verify_others(capsys):
    for what in ("sieve", "weighted", "lemw"):
        code, out = run(capsys, "verify", what, "432/2")
        assert code == 0, out


def test_trace(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"kind": "B", "rows": [
        [{"v": 0, "c": "b"}, {"v": 0, "c": "r"}, {"v": 1, "c": "r"}, {"v": 1, "c": "r"}],
        [{"v": 1, "c": "b"}, {"v": 2, "c": "b"}, {"v": 2, "c": "b"}],
        [{"v": 2, "c": "b"}]]}))
    code, out = run(capsys, "trace", "865321/431", "--tableau-file", str(f), "-k", "1", "--kind", "B")
    assert code == 0
    assert "insertions: 3" in out and "step cell=(3,4) dir=S k=inf pot=inf" in out
    code, out = run(capsys, "trace", "865321/431", "--rows", "r0 r0 r0 r2/0 r1 2/r2", "-k", "1", "--kind", "D")
    assert "insertions: 3" in out
    code, out = run(capsys, "trace", "21/1", "--rows", "0", "-k", "2", "--kind", "B")
    assert "insertions: 1" in out


def test_trace_debug_tableaux(capsys):
    code, out = run(capsys, "trace", "865321/431", "--rows", "0 r0 r1 r1/1 2 2/2", "-k", "1",
                    "--kind", "B", "--trace-verbosity", "2")
    assert code == 0 and "0 0 r1 r1 3 / 0 1 2 / 2" in out


def test_bench(capsys):
    code, out = run(capsys, "bench", "1-4", "--json")
    doc = json.loads(out)
    assert code == 0 and [r["insertions"] for r in doc["results"]] == [2, 4, 8, 16]


def test_excited_and_bicolored(capsys):
    code, out = run(capsys, "excited", "432/2", "--kind", "D")
    assert "4 excited diagrams" in out and "(3,4) (3,5)" in out
    code, out = run(capsys, "bicolored", "865321/431", "--kind", "B", "--limit", "2")
    assert "4992 bicolored tableaux" in out


def test_deterministic_output(capsys):
    first = run(capsys, "verify", "weighted", "321/1", "--seed", "7", "--json")[1]
    second = run(capsys, "verify", "weighted", "321/1", "--seed", "7", "--json")[1]
    assert first == second


def test_bad_input(capsys):
    assert main(["count", "33"]) == 2
    assert main(["count", "2/3"]) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hooklab", "count", "42"], capture_output=True, text=True)
    assert res.returncode == 0 and " 5 " in res.stdout
