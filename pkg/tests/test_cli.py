import json
import subprocess
import sys

import pytest

from csaembed import __version__
from csaembed.cli import main

QUATERNION = {
    "degree": 2,
    "invariants": [
        {"place": "p2", "num": 1, "den": 2},
        {"place": "inf", "kind": "real", "num": 1, "den": 2},
    ],
}
QI = {"degree": 2, "splitting": [{"place": "p2", "parts": [{"id": "w2", "degree": 2}]}, {"place": "inf", "parts": [{"id": "winf", "degree": 2}]}]}


def run(capsys, tmp_path, argv, doc=None):
    if doc is not None:
        path = tmp_path / "in.json"
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        argv = [*argv, str(path)]
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, tmp_path, argv, doc=None):
    code, out = run(capsys, tmp_path, argv, doc)
    return code, json.loads(out)


def test_hom_and_embed_check(capsys, tmp_path):
    doc = {"dim_delta": 1, "module_dim": 2, "factors": [{"source": 0, "m": 1, "dim_d": 1}, {"source": 1, "m": 1, "dim_d": 1}]}
    code, out = run_json(capsys, tmp_path, ["embed-check"], doc)
    assert code == 0 and out == {"feasible": True, "witness": [[1, 1]]}
    doc["module_dim"] = 1
    code, out = run_json(capsys, tmp_path, ["embed-check"], doc)
    assert code == 1 and out["feasible"] is False
    code, out = run_json(capsys, tmp_path, ["hom-check"], doc)
    assert code == 0 and out["witness"] == [[0, 1]]


def test_global_mode(capsys, tmp_path):
    doc = {"target": QUATERNION, "sources": [{"center": QI}]}
    code, out = run_json(capsys, tmp_path, ["embed-check"], doc)
    assert code == 0 and out["feasible"]
    code, out = run_json(capsys, tmp_path, ["orbit-count"], doc)
    assert code == 0 and out == {"status": "finite", "count": 1}


def test_orbit_count(capsys, tmp_path):
    doc = {"dim_delta": 1, "module_dim": 3, "factors": [{"m": 1, "dim_d": 1, "e": 2, "tangent_dim": 1}]}
    assert run_json(capsys, tmp_path, ["orbit-count"], doc) == (0, {"status": "finite", "count": 2})
    doc["factors"][0].update(e=3, tangent_dim=2)
    assert run_json(capsys, tmp_path, ["orbit-count"], doc)[1]["status"] == "infinite"
    doc["base_field_infinite"] = False
    assert run_json(capsys, tmp_path, ["orbit-count"], doc)[1]["status"] == "finite_unknown"
    doc = {"targets": [{"dim_delta": 1, "module_dim": 2, "factors": [{"m": 3, "dim_d": 1, "e": 1}]}]}
    assert run_json(capsys, tmp_path, ["orbit-count"], doc) == (1, {"status": "empty", "count": None})


def test_hasse_check(capsys, tmp_path):
    code, out = run_json(capsys, tmp_path, ["hasse-check"], {"algebra": QUATERNION, "field": QI})
    assert code == 0 and out["status"] == "GlobalEmbedding"


def test_construct_counterexample(capsys, tmp_path):
    code, out = run_json(capsys, tmp_path, ["construct-counterexample", "--k", "2", "--delta", "2,1:3,1", "--enumerate"])
    assert code == 1
    assert out["verdict"]["status"] == "HassePrincipleFailure"
    assert all(r["feasible"] for r in out["verdict"]["local"])
    entry = next(e for e in out["verdict"]["obstruction"] if e["place"] == "w1.1")
    assert entry == {"place": "w1.1", "over": "v1", "x": "3/2", "class": "1/2"}
    code, out = run_json(capsys, tmp_path, ["construct-counterexample", "--k", "4", "--delta", "2,3"])
    assert code == 2 and out["error"] == "PreconditionViolated"


def test_charpoly_check(capsys, tmp_path):
    doc = {"n": 1, "delta": QUATERNION, "factors": [{"degree": 2, "multiplicity": 1, "field": QI}]}
    assert run_json(capsys, tmp_path, ["charpoly-check"], doc)[0] == 0
    doc = {"n": 1, "delta": QUATERNION, "factors": [{"degree": 1, "multiplicity": 1}, {"degree": 1, "multiplicity": 1}]}
    code, out = run_json(capsys, tmp_path, ["charpoly-check"], doc)
    assert code == 1 and out["admissible"] is False
    doc = {"n": 2, "d": 2, "factors": [{"degree": 3, "multiplicity": 1}, {"degree": 1, "multiplicity": 1}]}
    assert run_json(capsys, tmp_path, ["charpoly-check"], doc)[0] == 1


def test_validate(capsys, tmp_path):
    code, out = run_json(capsys, tmp_path, ["validate"], QUATERNION)
    assert code == 0 and out["index"] == 2 and out["capacity"] == 1
    assert run_json(capsys, tmp_path, ["validate"], QI)[0] == 0
    bad = {"degree": 2, "invariants": [{"place": "p", "num": 1, "den": 2}]}
    code, out = run_json(capsys, tmp_path, ["validate"], bad)
    assert code == 2 and out["error"] == "SumNotZero"


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ("{not json", "invalid JSON"),
        ({"invariants": []}, "$.degree: missing field"),
        ({"degree": True}, "$.degree: expected integer"),
        ({"degree": 2, "invariants": [{"place": "p", "num": 1, "den": 0}]}, "$.invariants[0].den"),
        ({"degree": 2, "invariants": [{"place": "p", "kind": "weird", "num": 1, "den": 2}]}, "$.invariants[0].kind"),
    ],
)
def test_malformed_input_exits_2(capsys, tmp_path, doc, fragment):
    code, out = run_json(capsys, tmp_path, ["validate"], doc)
    assert code == 2 and fragment in out["message"]


def test_missing_file(capsys):
    code = main(["validate", "/nonexistent/file.json"])
    assert code == 2 and "cannot read" in json.loads(capsys.readouterr().out)["message"]


def test_text_format(capsys, tmp_path):
    code, out = run(capsys, tmp_path, ["hasse-check", "--format", "text"], {"algebra": QUATERNION, "field": QI})
    assert code == 0 and "status: GlobalEmbedding" in out and "feasible: yes" in out


def test_selftest(capsys, tmp_path):
    code, out = run_json(capsys, tmp_path, ["selftest", "--seed", "3", "--trials", "50"])
    assert code == 0 and out["disagreements"] == 0 and out["trials"] == 50


def test_output_is_deterministic(tmp_path):
    path = tmp_path / "in.json"
    path.write_text(json.dumps({"algebra": QUATERNION, "field": QI}))
    outs = {
        subprocess.run([sys.executable, "-m", "csaembed", "hasse-check", "--enumerate", str(path)], capture_output=True).stdout
        for _ in range(2)
    }
    assert len(outs) == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0 and __version__ in capsys.readouterr().out


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(QUATERNION)))
    assert main(["validate"]) == 0
