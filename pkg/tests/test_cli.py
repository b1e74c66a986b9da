import json
import subprocess
import sys


from semisym.cli import Report, main

from fixtures import DATA


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def checks(report):
    return {c["name"]: c for c in report["checks"]}


# -- catalogue ------------------------------------------------------------------------


def test_catalogue_single_entry(capsys):
    code, rep = run_json(capsys, "catalogue", "--entry", "1.3^1")
    assert code == 0 and rep["verdict"] == "pass"
    assert len(rep["checks"]) == 1


def test_catalogue_mismatch_policy(capsys):
    code, rep = run_json(capsys, "catalogue", "--entry", "6.1^1")
    assert code == 0
    assert rep["verdict"].startswith("pass")
    (c,) = rep["checks"]
    assert c["match"] is False
    code, rep = run_json(capsys, "catalogue", "--entry", "6.1^1", "--strict-paper")
    assert code == 1 and rep["verdict"] == "fail"


def test_catalogue_unknown_entry(capsys):
    assert main(["catalogue", "--entry", "nosuch"]) == 2


def test_catalogue_all_entries(capsys):
    code, rep = run_json(capsys, "catalogue")
    assert code == 0
    assert len({c["name"].split()[0] for c in rep["checks"]}) == 26


# -- tensor -------------------------------------------------------------------------------


def test_tensor_item3(capsys):
    code, rep = run_json(capsys, "tensor", str(DATA / "holonomy3_tensor.json"))
    assert code == 0
    cs = checks(rep)
    assert cs["bianchi"]["computed"] is True
    assert cs["semi_symmetric"]["match"] is True
    assert cs["holonomy_dim"]["computed"] == 3


def test_tensor_zero_is_flat(capsys):
    code, rep = run_json(capsys, "tensor", str(DATA / "zero_tensor.json"))
    assert code == 0 and checks(rep)["ricci_type"]["computed"] == "Flat"


def test_tensor_complex(capsys):
    code, rep = run_json(capsys, "tensor", str(DATA / "complex_ricci.json"))
    assert code == 0
    assert checks(rep)["ricci_type"]["computed"].startswith("ComplexRicci")


def test_tensor_at_point(capsys):
    code, rep = run_json(capsys, "tensor", str(DATA / "complex_ricci.json"), "--params", "a=1,b=2")
    assert code == 0
    assert "a" not in checks(rep)["ricci"]["computed"]["char_poly"]


def test_tensor_missing_file(capsys, tmp_path):
    assert main(["tensor", str(tmp_path / "none.json")]) == 2


def _tensor_file(tmp_path, terms):
    p = tmp_path / "t.json"
    obj = json.loads((DATA / "zero_tensor.json").read_text())
    obj["terms"] = terms
    p.write_text(json.dumps(obj))
    return str(p)


def test_tensor_not_bianchi(capsys, tmp_path):
    path = _tensor_file(tmp_path, [{"coeff": "1", "a": ["x", "y"], "b": ["z", "t"]}])
    code, rep = run_json(capsys, "tensor", path)
    assert code == 1 and checks(rep)["bianchi"]["computed"] is False


def test_tensor_malformed_terms(capsys, tmp_path):
    assert main(["tensor", _tensor_file(tmp_path, [["1", ["x", "y"], ["z", "t"]]])]) == 2


# -- pair / group -------------------------------------------------------------------------


def test_pair_ricci_flat(capsys):
    code, rep = run_json(capsys, "pair", str(DATA / "ricci_flat_pair.json"), "--params", "A=1,B=1,C=1,D=1")
    assert code == 0
    cs = checks(rep)
    assert cs["ricci_type"]["computed"] == "RicciFlat"
    assert cs["semi_symmetric"]["computed"] is True
    assert cs["locally_symmetric"]["computed"] is False


def test_pair_excluded_locus(capsys):
    assert main(["pair", str(DATA / "ricci_flat_pair.json"), "--params", "A=1,B=0,C=1,D=1"]) == 2


def test_pair_jacobi_violation(capsys):
    code, rep = run_json(capsys, "pair", str(DATA / "jacobi_violation_pair.json"))
    assert code == 1 and rep["verdict"] == "fail"


def test_group_requires_trivial_isotropy(capsys):
    assert main(["group", str(DATA / "isotropy_1_3_1_pair.json")]) == 2
    assert main(["group", str(DATA / "abelian_pair.json")]) == 0


def test_group_metric_option(capsys):
    code, rep = run_json(capsys, "group", str(DATA / "affine_line_pair.json"), "--metric", "2,0;0,2")
    assert code == 0
    assert checks(rep)["ricci_type"]["computed"].startswith("Einstein")


def test_bad_arguments():
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


# -- reports -------------------------------------------------------------------------------


def test_json_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "semisym.cli", "catalogue", "--entry", "2.2^1", "--json", "--seed", "5"]
    outs = {subprocess.run(cmd, capture_output=True, check=False).stdout for _ in range(2)}
    assert len(outs) == 1 and next(iter(outs))


def test_report_round_trip(capsys):
    _, out = run(capsys, "tensor", str(DATA / "holonomy3_tensor.json"), "--json")
    obj = json.loads(out)
    assert Report.from_json(obj).to_json() == obj


def test_text_rendering(capsys):
    code, out = run(capsys, "catalogue", "--entry", "2.3^1")
    assert code == 0
    assert "[MISMATCH]" in out
