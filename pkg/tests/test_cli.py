"""End-to-end checks of the command-line interface."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

import rigidkit

SCHEMAS = Path(rigidkit.__file__).parent / "schemas"
GROUPS = Path(rigidkit.__file__).parent / "data" / "groups"


def run(*argv):
    return subprocess.run([sys.executable, "-m", "rigidkit", *argv], capture_output=True, text=True)


def run_json(*argv):
    proc = run(*argv, "--json")
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def validate(data, schema):
    jsonschema.validate(data, json.loads((SCHEMAS / f"{schema}.json").read_text()))


def test_kloosterman_plain():
    proc = run("kloosterman", "--n", "2", "--p", "3", "--a", "1")
    assert proc.returncode == 0
    assert proc.stdout == "-1\n"


def test_kloosterman_json():
    data = run_json("kloosterman", "--n", "2", "--p", "5", "--a", "1")
    validate(data, "kloosterman")
    assert data["value"]["coeffs"] == [2, 0, 1, 1]
    assert data["value"]["approx"] == [0.381966, 0.0]


def test_exit_codes():
    assert run("kloosterman", "--n", "2", "--p", "4", "--a", "1").returncode == 1
    assert run("roots", "--type", "H3").returncode == 1
    assert run("nonsense").returncode == 2
    assert run("kloosterman", "--n", "2").returncode == 2
    assert run("parahoric", "--type", "A2").returncode == 2  # neither --keep nor --remove
    proc = run("dominant", "--type", "A2", "--coweight", "1,x")
    assert proc.returncode == 2 and "usage error" in proc.stderr
    proc = run("rigid-tuple", "--group", "A5", "--classes", "2A,9Z")
    assert proc.returncode == 1 and "9Z" in proc.stderr


def test_roots_json():
    data = run_json("roots", "--type", "E6")
    validate(data, "roots")
    assert (data["count"], data["weyl_order"]) == (72, 51840)


def test_dominant_and_dim_gr():
    assert run("dominant", "--type", "A2", "--coweight", "-1,2").stdout.split() == ["1", "1"]
    assert run("dim-gr", "--type", "A1", "--coweight", "1", "--coroot").stdout == "2\n"


def test_affine_element_forms():
    a = run("affine", "length", "--type", "G2", "--word", "0,1,2,1")
    b = run("affine", "length", "--type", "G2", "--element", '{"word": [0, 1, 2, 1]}')
    assert a.stdout == b.stdout == "4\n"
    img = run_json("affine", "act", "--type", "A1", "--translation", "1", "--root", "1", "--level", "0")
    assert img == {"gradient": [1], "level": 2}
    assert run("affine", "relevant", "--type", "A2").stdout == "relevant\n"


def test_parahoric_json():
    data = run_json("parahoric", "--type", "F4", "--keep", "1,3,4")
    validate(data, "parahoric")
    assert data["levi"] == "A2xA1xT1" and data["reldim"] == 20 and data["platonic"] == 4


def test_rigidity_search_outputs():
    data = run_json("rigidity-search", "--type", "G2", "--places", "3")
    validate(data, "rigidity_search")
    assert data["count"] == 10
    tsv = run("rigidity-search", "--type", "G2", "--places", "3", "--tsv").stdout.splitlines()
    assert tsv[0].split("\t") == ["reldims", "levis", "keep"]
    assert len(tsv) == 11


def test_output_is_deterministic_across_jobs():
    a = run("rigidity-search", "--type", "F4", "--places", "3", "--json")
    b = run("rigidity-search", "--type", "F4", "--places", "3", "--json", "--jobs", "4")
    assert a.stdout == b.stdout


def test_group_commands():
    data = run_json("rigid-tuple", "--group", str(GROUPS / "a5.json"), "--classes", "2A,3A,5A")
    validate(data, "rigid_tuple")
    assert data["rigid"] and data["orbit_count"] == 1
    same = run_json("group", "rigid-tuple", "--group", "A5", "--classes", "o2-s15-0,o3-s20-0,o5-s12-0")
    assert same == {**data, "classes": ["o2-s15-0", "o3-s20-0", "o5-s12-0"]}
    rat = run_json("group", "rational", "--group", "A5", "--classes", "5A,3A")
    assert rat == {"rational": {"5A": False, "3A": True}}
    warn = run("rigid-tuple", "--group", "D4", "--classes", "2A,2A,1A")
    assert "non-trivial center" in warn.stdout


def test_conductor_commands(tmp_path):
    inst = {
        "genus": 0, "dim_dual": 3, "h0": 0,
        "profiles": [{"dim": 3, "inv": 1, "slopes": [["0", 3]]}, {"dim": 3, "inv": 0, "slopes": [["1/2", 2], ["0", 1]]}],
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    data = run_json("conductor", "check", "--instance", str(path))
    validate(data, "conductor_check")
    assert data["rigid"]
    prof = '{"dim": 3, "inv": 0, "slopes": [["1/3", 3]]}'
    assert run("conductor", "artin", "--profile", prof).stdout == "4\n"
    assert run("conductor", "level", "--profile", prof).stdout == "1/3\n"
    bad = run("conductor", "swan", "--profile", '{"dim": 1, "inv": 0, "slopes": [["1/2", 1]]}')
    assert bad.returncode == 1


def test_character_commands():
    assert run("genericity", "--exponents", "1,1,1", "--q", "7").stdout == "true\n"
    assert run("central-char", "--exponents", "1,1,1", "--q", "7").stdout == "false\n"
    data = run_json("trunc-check", "--map", "kl", "--pairs", "50")
    assert data["pass"] and data["failures"] == 0


def test_manifest_shipped_passes():
    proc = run("manifest")
    assert proc.returncode == 0, proc.stdout
    assert proc.stdout.strip().endswith("checks passed")


def test_manifest_empty_and_failing(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    proc = run("manifest", str(empty))
    assert proc.returncode == 0 and "0/0" in proc.stdout

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([
        {"argv": ["kloosterman", "--n", "2", "--p", "3", "--a", "1"], "expected_stdout_sha256": "0" * 64,
         "expected_stdout": "1\n"},
    ]))
    proc = run("manifest", str(bad))
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout and "-1" in proc.stdout and "+-1" in proc.stdout
    assert run("manifest", str(tmp_path / "missing.json")).returncode == 1


def test_shipped_manifest_schema():
    data = json.loads((Path(rigidkit.__file__).parent / "data" / "acceptance_manifest.json").read_text())
    validate(data, "manifest")
    names = " ".join(e["name"] for e in data)
    for k in range(1, 11):
        assert f"{k} " in names
