import json
import subprocess
import sys

import numpy as np
import pytest

from scaffolds import catalog, eval_elimination, io
from scaffolds.cli import main
from scaffolds.diagrams import match_by_edges, reversed_diagram


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


def path4_relations():
    I = np.eye(4, dtype=int)
    M = np.zeros((4, 4), dtype=int)
    for a in range(3):
        M[a, a + 1] = M[a + 1, a] = 1
    return [I, M, 1 - I - M]


def test_params_json(capsys):
    code, out, _ = run(capsys, "scheme", "params", "builtin:z4-cycle", "--json")
    assert code == 0
    info = json.loads(out)
    P = [[x[0] for x in row] for row in info["P"]]
    assert P == [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
    assert info["p"][1][1] == [2, 0, 2]
    assert info["p_polynomial"] and info["q_polynomial"]


def test_params_text(capsys):
    code, out, _ = run(capsys, "scheme", "params", "builtin:h22")
    assert code == 0 and "P-polynomial: True" in out


def test_validate_explicit(capsys, tmp_path):
    rel = [a.ravel().tolist() for a in path4_relations()]
    bad = write(tmp_path, "bad.json", {"kind": "explicit", "size": 4, "relations": rel})
    code, _, err = run(capsys, "scheme", "validate", bad)
    assert code == 2 and "AS4" in err
    I = np.eye(3, dtype=int)
    good = write(tmp_path, "k3.json", {"kind": "explicit", "size": 3,
                                       "relations": [I.tolist(), (1 - I).tolist()]})
    code, out, _ = run(capsys, "scheme", "validate", good)
    assert code == 0 and "1-class" in out


def test_validate_translation_file(capsys, tmp_path):
    f = write(tmp_path, "t.json", {"kind": "translation", "group": {"orders": [4]},
                                   "classes": [[[0]], [[1]], [[2], [3]]]})
    code, _, err = run(capsys, "scheme", "validate", f)
    assert code == 2 and "AS3" in err


def test_malformed_json_reports_position(capsys, tmp_path):
    f = write(tmp_path, "broken.json", '{"kind": "explicit",\n  "size": 3,\n  "relations": [}')
    code, _, err = run(capsys, "scheme", "validate", f)
    assert code == 2 and "line 3" in err


def test_missing_field(capsys, tmp_path):
    f = write(tmp_path, "d.json", {"nodes": ["a"], "edges": [{"id": "e", "tail": "a", "basis": "A", "index": 1}]})
    code, _, err = run(capsys, "diagram", "faces", f)
    assert code == 2 and "diagram.edges[0]" in err and "head" in err


def test_unknown_builtin(capsys):
    code, _, err = run(capsys, "scheme", "validate", "builtin:nope")
    assert code == 2 and "unknown" in err


def test_verify_duality_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "scaffold", "verify-duality", "builtin:triangle", "--scheme", "builtin:h22")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "scaffold", "verify-duality", "builtin:fig1", "--scheme",
                       "builtin:z5-paley", "--json")
    assert code == 0 and json.loads(out)["pass"] is True
    # an impossible tolerance makes the check fail
    code, out, _ = run(capsys, "scaffold", "verify-duality", "builtin:fig1", "--scheme",
                       "builtin:z7-cubic", "--tol", "-1")
    assert code == 1 and out.startswith("FAIL")


def test_scheme_dual(capsys):
    code, out, _ = run(capsys, "scheme", "dual", "builtin:z7-cubic")
    assert code == 0
    du = io.scheme_from_json(json.loads(out))
    assert np.max(np.abs(du.P - catalog.scheme("z7-cubic").Q)) < 1e-9


def test_diagram_dual_twice(capsys, tmp_path):
    d = catalog.fig1()
    src = write(tmp_path, "fig1.json", io.diagram_to_json(d))
    code, out, _ = run(capsys, "diagram", "dual", src)
    once = write(tmp_path, "once.json", out)
    code, out, _ = run(capsys, "diagram", "dual", once)
    dd = io.diagram_from_json(json.loads(out))
    assert match_by_edges(dd, reversed_diagram(d)) is not None


def test_faces(capsys):
    code, out, _ = run(capsys, "diagram", "faces", "builtin:triangle", "--json")
    info = json.loads(out)
    assert code == 0 and info["euler"] == {"nodes": 3, "edges": 6, "faces": 5}
    code, out, _ = run(capsys, "diagram", "faces", "builtin:triangle")
    assert "3 - 6 + 5 = 2" in out


def test_eval_and_out_file(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, _, _ = run(capsys, "scaffold", "eval", "builtin:star:1,1,2", "--scheme", "builtin:z4-cycle",
                     "--method", "brute", "--out", str(target))
    assert code == 0
    t = io.tensor_from_json(json.loads(target.read_text()))
    ref = eval_elimination(catalog.star(1, 1, 2), catalog.scheme("z4-cycle").scheme)
    assert np.max(np.abs(t.entries - ref.entries)) < 1e-10
    code, out, _ = run(capsys, "scaffold", "eval", "builtin:path2", "--scheme", "builtin:z4-cycle",
                       "--order", "v")
    assert code == 0 and json.loads(out)["ell"] == 2


def test_eval_cap(capsys):
    code, _, err = run(capsys, "scaffold", "eval", "builtin:fig1", "--scheme", "builtin:z6-cycle",
                       "--method", "brute", "--max-entries", "100")
    assert code == 2 and "cap" in err


def test_dualize(capsys, tmp_path):
    combo = {"terms": [{"coeff": 1, "diagram": "builtin:ex21-lhs"},
                       {"coeff": [-1, 0], "diagram": io.diagram_to_json(catalog.ex21_rhs())}]}
    f = write(tmp_path, "combo.json", combo)
    code, out, _ = run(capsys, "scaffold", "dualize", f, "--scheme", "builtin:z5-paley")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert [t["coeff"] for t in terms] == [[625.0, 0.0], [-125.0, 0.0]]
    code, _, err = run(capsys, "scaffold", "dualize", f)
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["scheme", "params", "builtin:z6-cycle", "--json"],
    ["diagram", "dual", "builtin:fig1"],
    ["scaffold", "verify-duality", "builtin:fig1", "--scheme", "builtin:h22", "--json"],
    ["scaffold", "eval", "builtin:triangle", "--scheme", "builtin:z3-directed"],
])
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_json_round_trips(tmp_path):
    for name in ("z4-cycle", "h22", "z7-cubic"):
        ts = catalog.scheme(name)
        back = io.scheme_from_json(json.loads(json.dumps(io.scheme_to_json(ts))))
        assert back.connection_sets == ts.connection_sets
        explicit = {"kind": "explicit", "size": ts.scheme.size,
                    "relations": [a.tolist() for a in ts.scheme.relations]}
        assert all(np.array_equal(a, b) for a, b in
                   zip(io.scheme_from_json(explicit).relations, ts.scheme.relations))
    for d in (catalog.fig1(), catalog.loops_nested(), catalog.point0()):
        back = io.diagram_from_json(json.loads(json.dumps(io.diagram_to_json(d))))
        assert back.nodes == d.nodes and back.roots == d.roots and back.edges == d.edges
        assert back.rotation == d.rotation


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "scaffolds", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("scaffolds ")
