# End-to-end checks of the command-line tool; run by ctest with FREELINE_CLI set.
import json
import os
import subprocess

import pytest

import freeline

CLI = os.environ.get("FREELINE_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="FREELINE_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def emit(name):
    out = run("gallery", "emit", name)
    assert out.returncode == 0, out.stderr
    return out.stdout


def test_emit_then_analyze_matches_the_library():
    doc = emit("A7")
    out = run("analyze", "-", "--json", stdin=doc)
    assert out.returncode == 0, out.stderr
    rep = json.loads(out.stdout)
    assert next(iter(rep)) == "schema"
    assert rep["schema"] == freeline.SCHEMA
    assert rep["tau"] == "27"
    assert rep == freeline.analyze(json.loads(doc), name=rep["name"])


def test_analyze_output_is_byte_identical_across_runs():
    doc = emit("pentagram")
    first = run("analyze", "-", "--json", stdin=doc)
    second = run("analyze", "-", "--json", stdin=doc)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert "timing" not in json.loads(first.stdout)


def test_human_output_has_the_tau_max_row():
    out = run("analyze", "--from-gallery", "A13")
    assert out.returncode == 0
    assert "=> tau = 108 = tau_max(13, mdr = 6) = 108: free" in out.stdout


def test_gallery_list_json():
    out = run("gallery", "list", "--json")
    names = [e["name"] for e in json.loads(out.stdout)["gallery"]]
    assert "C14" in names and "ex15" in names


def test_parse_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert run("analyze", str(bad)).returncode == 2
    assert run("analyze", str(tmp_path / "missing.json")).returncode == 2
    assert run("verify", "--from-gallery", "A7", "thm99").returncode == 2
    assert run("analyze", "--from-gallery", "no-such").returncode == 2
    assert run("scan", "--from-gallery", "A7", "--mode", "add", "--point", "1:2").returncode == 2
    assert run("frobnicate").returncode == 2


def test_cap_too_small_exits_3():
    out = run("analyze", "--from-gallery", "A10", "--cap", "3", "--no-defect")
    assert out.returncode == 3


def test_verify_agreement_exits_0():
    out = run("verify", "--from-gallery", "pentagram", "thmAe1")
    assert out.returncode == 0, out.stdout
    assert "case 2, agrees" in out.stdout


def test_scan_additions_on_the_monomial_arrangement():
    out = run("scan", "--from-gallery", "monomial(3)", "--mode", "add", "--point", "0:0:1",
              "--line", "1:0:0", "--line", "[1, 2, 0]", "--json")
    assert out.returncode == 0, out.stderr
    cases = {c["line_text"]: c["predicted_case"] for c in json.loads(out.stdout)["cases"]}
    # y = 0 joins (0:0:1) to another lattice point, so it is a candidate too.
    assert cases == {"x": 2, "y": 2, "x + (2)y": 3}


def test_disagreement_exits_5_and_writes_witnesses(tmp_path):
    src = tmp_path / "ex15.json"
    src.write_text(emit("ex15"))
    wdir = tmp_path / "w"
    out = run("verify", str(src), "corAe1", "--witness-dir", str(wdir))
    assert out.returncode == 5
    files = sorted(wdir.glob("witness-corAe1-*.json"))
    assert len(files) == 14
    w = json.loads(files[0].read_text())
    assert w["kind"] == "witness"
    assert w["case"]["agreement"] is False
    assert w["input"] == json.loads(src.read_text())
