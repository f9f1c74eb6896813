"""Command dispatch, document round-trips, exit codes, and SVG output."""

import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from hypergon.cli import (
    RenderSpec,
    body_to_doc,
    main,
    polygon_from_doc,
    polygon_to_doc,
    render_svg,
)
from hypergon.errors import DomainError
from hypergon.polygon import IdealPolygon, grow_body

from conftest import random_angle_vectors


def write_polygon(path, angles, rotation=0.0):
    doc = {"n": len(angles), "angles": list(angles), "rotation": rotation}
    path.write_text(json.dumps(doc))
    return path


# --- documents -------------------------------------------------------------


def test_polygon_document_round_trip(rng):
    for n in (3, 5, 8):
        angles = random_angle_vectors(rng, n, 1)[0]
        poly = IdealPolygon(tuple(angles), rotation=float(rng.uniform(0, 1)))
        doc = json.loads(json.dumps(polygon_to_doc(poly)))
        assert polygon_from_doc(doc) == poly  # float-exact


@pytest.mark.parametrize(
    "doc,message",
    [
        ({"n": 3, "angles": [0.5, 0.25, 0.25]}, "alpha must be in"),
        ({"n": 4, "angles": [0.25, 0.25, 0.25]}, "n must match"),
        ({"n": 3, "angles": [0.2, 0.2, 0.2]}, "sum to 1"),
        ({"n": 3, "angles": "nope"}, "array of decimals"),
        ([1, 2], "JSON object"),
    ],
)
def test_polygon_document_diagnostics(doc, message):
    with pytest.raises(DomainError, match=message):
        polygon_from_doc(doc)


def test_body_document_fields():
    doc = body_to_doc(grow_body(IdealPolygon.regular(3), 1))
    assert doc["n"] == 3
    assert doc["generations"] == 1
    assert doc["polygon_counts"] == [1, 3]
    assert len(doc["boundary_angles"]) == 6
    assert doc["euclidean_area"] == pytest.approx(6 * (math.tan(math.pi / 6) * (1 - math.pi * math.tan(math.pi / 6) / 3)), abs=1e-12)
    assert len(doc["checksum"]) == 64
    assert doc["base"]["angles"] == [1 / 3, 1 / 3, 1 / 3]


# --- invert ----------------------------------------------------------------


def test_cmd_invert_prints_twelve_decimals(capsys):
    assert main(["invert", "--side", "0,0.25", "--beta", "0.5"]) == 0
    assert capsys.readouterr().out == "0.147583617650\n"


def test_cmd_invert_fixed_endpoint(capsys):
    assert main(["invert", "--side", "0,0.25", "--beta", "0"]) == 0
    assert capsys.readouterr().out == "0.000000000000\n"


def test_cmd_invert_rejects_bad_alpha(capsys):
    assert main(["invert", "--side", "0,0.6", "--beta", "0.8"]) == 1
    assert "alpha must be in (0, 0.5)" in capsys.readouterr().err


def test_cmd_invert_rejects_malformed_side(capsys):
    assert main(["invert", "--side", "zero", "--beta", "0.5"]) == 1


# --- grow ------------------------------------------------------------------


def test_cmd_grow_regular_triangle(tmp_path, capsys):
    src = write_polygon(tmp_path / "d3.json", [1 / 3] * 3)
    out = tmp_path / "body.json"
    assert main(["grow", "--in", str(src), "--generations", "1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["polygon_counts"] == [1, 3]
    assert np.allclose(doc["boundary_angles"], 1 / 6, atol=1e-12)


def test_cmd_grow_zero_generations_echoes(tmp_path):
    angles = [0.2, 0.3, 0.1, 0.4]
    src = write_polygon(tmp_path / "p.json", angles)
    out = tmp_path / "body.json"
    assert main(["grow", "--in", str(src), "--generations", "0", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    # angles come back as vertex-gap differences, exact to the last ulp only
    assert np.allclose(sorted(doc["boundary_angles"]), sorted(angles), atol=1e-15)


def test_cmd_grow_depth_cap_env(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERGON_MAX_SIDES", "10")
    src = write_polygon(tmp_path / "d4.json", [0.25] * 4)
    out = tmp_path / "body.json"
    assert main(["grow", "--in", str(src), "--generations", "2", "--out", str(out)]) == 1


def test_cmd_grow_missing_input_is_io_error(tmp_path, capsys):
    assert main(["grow", "--in", str(tmp_path / "nope.json"), "--generations", "1", "--out", str(tmp_path / "o.json")]) == 3


def test_cmd_grow_invalid_json_is_invalid_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["grow", "--in", str(bad), "--generations", "1", "--out", str(tmp_path / "o.json")]) == 1


def test_cmd_grow_writes_svg(tmp_path):
    src = write_polygon(tmp_path / "d3.json", [1 / 3] * 3)
    svg = tmp_path / "fig.svg"
    assert main(["grow", "--in", str(src), "--generations", "2", "--out", str(tmp_path / "b.json"), "--svg", str(svg)]) == 0
    assert svg.read_text().startswith("<?xml")


# --- area ------------------------------------------------------------------


def test_cmd_area_regular_four(tmp_path, capsys):
    src = write_polygon(tmp_path / "d4.json", [0.25] * 4)
    assert main(["area", "--in", str(src)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "euclidean_area 0.858407346410"
    assert out[1] == "upper_bound 0.858407346410"
    assert out[2] == "slack 0.000000000000"


def test_cmd_area_nonregular_has_positive_slack(tmp_path, capsys):
    src = write_polygon(tmp_path / "p.json", [0.2, 0.3, 0.1, 0.4])
    assert main(["area", "--in", str(src)]) == 0
    lines = dict(line.split() for line in capsys.readouterr().out.splitlines())
    assert float(lines["euclidean_area"]) < 4 - math.pi
    assert float(lines["slack"]) > 0


def test_cmd_area_hyperbolic(tmp_path, capsys):
    src = write_polygon(tmp_path / "d4.json", [0.25] * 4)
    assert main(["area", "--in", str(src), "--hyperbolic", "--cells", "100000"]) == 0
    lines = dict(line.split() for line in capsys.readouterr().out.splitlines())
    assert float(lines["hyperbolic_area"]) == pytest.approx(math.pi / 2, rel=0.01)
    assert float(lines["hyperbolic_ideal"]) == pytest.approx(math.pi / 2, abs=1e-12)


# --- extremal ----------------------------------------------------------------


def test_cmd_extremal_small_grid(capsys):
    assert main(["extremal", "--n", "4", "--grid", "1/100"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["best_point"] == [0.25, 0.25, 0.25, 0.25]
    assert out["isolation_margin"] > 0
    assert out["seed"] == 0


def test_cmd_extremal_coarse_grid_rejected(capsys):
    assert main(["extremal", "--n", "4", "--grid", "1/3"]) == 1
    assert "too coarse" in capsys.readouterr().err


def test_cmd_extremal_refine_reports_basins(capsys):
    assert main(["extremal", "--n", "4", "--grid", "1/100", "--refine", "--starts", "3", "--seed", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["refine"]["starts"] == 3
    assert out["refine"]["best_refined_value"] <= out["best_value"] + 1e-12


# --- check -------------------------------------------------------------------


def test_cmd_check_lemma33(capsys):
    assert main(["check", "--suite", "lemma33"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = json.loads(lines[0])
    assert header == {
        "suite": "lemma33",
        "size": 11,
        "seed": 0,
        "evidence": False,
        "violations": 0,
    }
    assert len(lines) == 12
    case = json.loads(lines[1])
    assert case == {"suite": "lemma33", "case": 0, "status": "pass", "detail": None}


def test_cmd_check_conj52_reports_counterexamples(capsys):
    # exit code 2: the scan finds genuine majorization counterexamples
    assert main(["check", "--suite", "conj52", "--samples", "200", "--seed", "7"]) == 2
    lines = capsys.readouterr().out.splitlines()
    header = json.loads(lines[0])
    assert header["evidence"] is True
    assert header["violations"] > 0
    hits = [json.loads(l) for l in lines[1:] if json.loads(l)["status"] == "violation"]
    assert hits
    assert hits[0]["detail"]["violations"][0]["relation"].startswith("prefix sums")


def test_cmd_check_unknown_suite(capsys):
    assert main(["check", "--suite", "nosuch"]) == 1


def test_cmd_check_is_byte_deterministic(capsys):
    assert main(["check", "--suite", "lemma32ii", "--samples", "300", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["check", "--suite", "lemma32ii", "--samples", "300", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first


# --- render ------------------------------------------------------------------


def test_cmd_render_structure(tmp_path):
    src = write_polygon(tmp_path / "d3.json", [1 / 3] * 3)
    body_path = tmp_path / "b.json"
    main(["grow", "--in", str(src), "--generations", "2", "--out", str(body_path)])
    fig = tmp_path / "fig.svg"
    assert main(["render", "--in", str(body_path), "--out", str(fig)]) == 0
    root = ET.fromstring(fig.read_text())
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert root.get("viewBox") == "-1.05 -1.05 2.1 2.1"
    paths = root.findall("{http://www.w3.org/2000/svg}path")
    assert len(paths) == 1 + 3 + 6
    circles = root.findall("{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 1


def test_render_seed_polygon_arcs():
    # generation 0 of the regular 4-gon: four unit-radius arcs
    svg = render_svg(grow_body(IdealPolygon.regular(4), 0))
    root = ET.fromstring(svg)
    paths = root.findall("{http://www.w3.org/2000/svg}path")
    assert len(paths) == 1
    d = paths[0].get("d")
    assert d.count("A 1.000000 1.000000") == 4


def test_render_is_byte_deterministic():
    body = grow_body(IdealPolygon((0.2, 0.3, 0.15, 0.35)), 2)
    assert render_svg(body) == render_svg(body)


def test_render_spec_from_file(tmp_path):
    src = write_polygon(tmp_path / "d3.json", [1 / 3] * 3)
    body_path = tmp_path / "b.json"
    main(["grow", "--in", str(src), "--generations", "1", "--out", str(body_path)])
    spec_path = tmp_path / "render.json"
    spec_path.write_text(json.dumps({"canvas": 300, "precision": 4, "colors": ["#000000"]}))
    fig = tmp_path / "f.svg"
    assert main(["render", "--in", str(body_path), "--out", str(fig), "--spec", str(spec_path)]) == 0
    text = fig.read_text()
    assert 'width="300"' in text
    assert "#000000" in text


def test_render_spec_validation():
    with pytest.raises(DomainError):
        RenderSpec(precision=2)
    with pytest.raises(DomainError):
        RenderSpec(canvas=0)


def test_cmd_render_requires_base(tmp_path):
    doc = {"n": 3, "generations": 1, "boundary_angles": [1 / 6] * 6}
    path = tmp_path / "b.json"
    path.write_text(json.dumps(doc))
    assert main(["render", "--in", str(path), "--out", str(tmp_path / "f.svg")]) == 1


def test_cmd_render_write_failure_is_io_error(tmp_path):
    src = write_polygon(tmp_path / "d3.json", [1 / 3] * 3)
    body_path = tmp_path / "b.json"
    main(["grow", "--in", str(src), "--generations", "1", "--out", str(body_path)])
    assert main(["render", "--in", str(body_path), "--out", str(tmp_path / "no" / "dir" / "f.svg")]) == 3


# --- parser ------------------------------------------------------------------


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_missing_subcommand_exits_one():
    assert main([]) == 1


def test_module_entry_point_cross_process_determinism():
    # seeded output must be byte-identical across separate interpreter runs
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "hypergon", "check", "--suite", "conj52", "--samples", "100", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 2  # counterexamples are a finding
    assert second.returncode == 2
    assert first.stdout == second.stdout
    assert first.stdout.startswith(b'{"suite": "conj52"')
