import json
import os
import subprocess
import xml.etree.ElementTree as ET
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("LEGKIT_CLI")
SCHEMAS = Path(os.environ.get("LEGKIT_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))

pytestmark = pytest.mark.skipif(not CLI, reason="LEGKIT_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def check(name, *args):
    p = run(*args)
    assert p.returncode == 0, p.stderr
    jsonschema.validate(json.loads(p.stdout), schema(name))


def test_invariants_json(tmp_path):
    f = tmp_path / "clasp.lfd"
    f.write_text("L 1\nL 3\nX 2\nX 2\nR 3\nR 1\n")
    check("invariants", "invariants", str(f), "--json")


def test_foliate_json():
    for tb, r in [(-1, 0), (-3, 0), (-6, 3)]:
        check("foliate", "foliate", "--tb", str(tb), "--r", str(r), "--json")


def test_verdict_json():
    check("verdict", "classify", "tight-unknot", "--a", "-1,0", "--b", "-1,0", "--json")
    check("verdict", "classify", "loose", "--hopf", "2", "--a", "3,0", "--b", "3,0", "--json")
    check("verdict", "classify", "loose-check", "--hopf", "-1", "--tb", "1", "--json")


def test_scalar_json():
    check("exceptional", "classify", "exceptional", "--hopf", "-1", "--json")
    check("exceptional", "classify", "exceptional", "--hopf", "-1", "--tb", "3", "--r", "2", "--json")
    check("value", "classify", "hopf-lutz", "--sl", "-1,-1", "--lk", "1", "--json")
    check("value", "classify", "d3", "--hopf", "4", "--json")


def test_svg_is_well_formed():
    p = run("catalog", "--tb", "-5", "--r", "2", "--svg")
    assert p.returncode == 0
    root = ET.fromstring(p.stdout.encode())
    assert root.tag.endswith("svg")


def test_exit_codes():
    assert run("catalog", "--tb", "-2", "--r", "0").returncode == 1
    assert run("catalog", "--tb", "x", "--r", "0").returncode == 2
    assert run().returncode == 2
    assert run("--help").returncode == 0
