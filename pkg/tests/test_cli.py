import json

import pytest

from agclcp import cli
from agclcp.catalog import f4_specs, run_examples
from agclcp.specio import SpecError, parse_pair


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


F4_SPEC = {
    "curve": {"kind": "elliptic", "a": "1", "b": "0", "c": "0", "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]}},
    "G": [{"point": "O", "mult": 6}, {"point": ["0", "0"], "mult": -2}],
    "H": [{"point": "O", "mult": 2}, {"point": ["0", "0", "1"], "mult": 1}],
    "D": [["0", "1"], ["w", "w"], ["w", "w^2"], ["w^2", "w"], ["w^2", "w^2"], ["1", "w"], ["1", "w^2"]],
}


def write(tmp_path, obj, name="spec.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_examples_json_deterministic(capsys):
    s1, out1, _ = run(capsys, "examples", "--which", "all", "--format", "json")
    s2, out2, _ = run(capsys, "examples", "--which", "all", "--format", "json")
    assert s1 == s2 == 0 and out1 == out2
    data = json.loads(out1)
    names = [e["name"] for e in data["entries"]]
    assert "elliptic-f4" in names and "line q=8 s=2" in names


def test_examples_f4(capsys):
    _, out, _ = run(capsys, "examples", "--which", "elliptic-f4", "--format", "json")
    (e,) = json.loads(out)["entries"]
    r = e["report"]
    assert r["is_lcp"] and (r["n"], r["k_C"], r["k_D"]) == (7, 4, 3)


def test_examples_f8_labels(capsys):
    _, out, _ = run(capsys, "examples", "--which", "elliptic-f8", "--format", "json")
    lit, der = json.loads(out)["entries"]
    assert lit["label"] == "as-published" and not lit["report"]["checklist"]["ell(G)+ell(H)=n"]
    assert der["label"] == "theorem-derived" and der["report"]["is_lcp"]


def test_examples_text(capsys):
    status, out, _ = run(capsys, "examples", "--which", "scaled-f4")
    assert status == 0 and "discrepancy:" in out and "a = (1, 0, 0, 1, w, w^2)" in out


def test_check_matches_examples(capsys, tmp_path):
    status, out, _ = run(capsys, "check", write(tmp_path, F4_SPEC), "--format", "json")
    assert status == 0
    (entry,) = json.loads(out)["entries"]
    (ref,) = [e for e in run_examples("elliptic-f4") if e.name == "elliptic-f4"]
    assert entry["report"] == json.loads(json.dumps(ref.report.to_json()))


def test_check_overlap_names_point(capsys, tmp_path):
    spec = dict(F4_SPEC, D=[["0", "0"], ["w", "w"]])
    status, _, err = run(capsys, "check", write(tmp_path, spec))
    assert status == 2 and "(0:0:1)" in err


def test_check_malformed_json(capsys, tmp_path):
    status, _, err = run(capsys, "check", write(tmp_path, "{\n  \"curve\": ,\n}"))
    assert status == 2 and ":2:" in err


def test_check_missing_field(capsys, tmp_path):
    spec = {k: v for k, v in F4_SPEC.items() if k != "H"}
    status, _, err = run(capsys, "check", write(tmp_path, spec))
    assert status == 2 and "H" in err


def test_check_large_degree_still_computed(capsys, tmp_path):
    spec = dict(F4_SPEC, G=[{"point": "O", "mult": 9}])
    status, out, _ = run(capsys, "check", write(tmp_path, spec), "--format", "json")
    r = json.loads(out)["entries"][0]["report"]
    assert status == 0 and not r["checklist"]["2g-2<deg(G)<n"] and r["k_C"] == 7


def test_params_rs(capsys, tmp_path):
    spec = {
        "curve": {"kind": "line", "field": {"p": 5}},
        "G": [{"point": "O", "mult": 1}],
        "H": [{"point": "O", "mult": 0}],
        "D": [["1"], ["2"], ["3"], ["4"]],
    }
    status, out, _ = run(capsys, "params", write(tmp_path, spec), "--format", "json")
    (e,) = json.loads(out)["entries"]
    assert status == 0
    assert e["codes"]["C"]["d"] == 3 and e["codes"]["C"]["mds"]


def test_params_degenerate(capsys, tmp_path):
    spec = {
        "curve": {"kind": "line", "field": {"p": 5}},
        "G": [{"point": "O", "mult": -1}],
        "H": [{"point": "O", "mult": 5}],
        "D": [["1"], ["2"], ["3"], ["4"]],
    }
    status, out, _ = run(capsys, "params", write(tmp_path, spec), "--format", "json")
    (e,) = json.loads(out)["entries"]
    assert status == 0 and e["codes"]["C"]["k"] == 0 and e["codes"]["C"]["d"] is None
    # C and D-perp are both zero codes, so the security parameter is undefined
    assert e["is_lcp"] and e["security_parameter"] is None
    assert e["security_parameter_status"].startswith("undefined")


def test_params_f4_security(capsys, tmp_path):
    status, out, _ = run(capsys, "params", write(tmp_path, F4_SPEC), "--format", "json")
    (e,) = json.loads(out)["entries"]
    assert e["security_parameter"] == min(e["codes"]["C"]["d"], e["codes"]["D_perp"]["d"])


def test_distance_budget_flag(capsys, tmp_path):
    status, out, _ = run(capsys, "--distance-budget", "4", "params", write(tmp_path, F4_SPEC), "--format", "json")
    (e,) = json.loads(out)["entries"]
    assert status == 0 and e["codes"]["C"]["d"] is None and "d_status" in e["codes"]["C"]


def test_auto_D():
    pair = parse_pair(dict(F4_SPEC, D="auto"))
    specG, _ = f4_specs()
    assert set(pair.D) == set(specG.D)


def test_bad_curve_kind():
    with pytest.raises(SpecError, match="curve.kind"):
        parse_pair(dict(F4_SPEC, curve={"kind": "hyperelliptic", "field": {"p": 2}}))
