import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from omegatri.cli import RunConfig, main, run

from instances import QUARTIC_QUAD, UNIT_SQUARE

SVG_NS = "{http://www.w3.org/2000/svg}"


def write_csv(path, pts):
    path.write_text("# x,y\n" + "\n".join(f"{x!r},{y!r}" for x, y in pts) + "\n")
    return path


def run_cfg(cfg):
    out = io.StringIO()
    code = run(cfg, out)
    return code, (json.loads(out.getvalue()) if code == 0 else None)


@pytest.fixture
def quad_csv(tmp_path):
    return write_csv(tmp_path / "quad.csv", QUARTIC_QUAD)


def test_quadrilateral_in_degrees(quad_csv, capsys):
    code = main(["--input", str(quad_csv), "--omega", "90", "--degrees"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["omega"] == pytest.approx(math.pi / 2, abs=1e-15)
    assert doc["min_area"] == pytest.approx(4.2186658939, rel=1e-9)
    assert len(doc["optima"]) == 1
    opt = doc["optima"][0]
    assert opt["provenance"] == "ArcEdge"
    assert set(opt) >= {"q", "b", "c", "area", "provenance", "midpoint"}
    assert doc["sections_evaluated"] > 0
    hull = doc["hull"]
    # counter-clockwise listing
    assert sum(hull[i - 1][0] * hull[i][1] - hull[i][0] * hull[i - 1][1] for i in range(len(hull))) > 0


def test_exit_codes(tmp_path, capsys):
    col = write_csv(tmp_path / "col.csv", [(0, 0), (1, 1), (2, 2)])
    assert main(["--input", str(col), "--omega", "1"]) == 3
    err = capsys.readouterr().err.strip()
    assert "\n" not in err and json.loads(err)["error"] == "DegenerateInput"
    sq = write_csv(tmp_path / "sq.csv", UNIT_SQUARE)
    assert main(["--input", str(sq), "--omega", "0"]) == 4
    assert json.loads(capsys.readouterr().err)["error"] == "OmegaOutOfRange"
    assert main(["--input", str(sq), "--omega", "180", "--degrees"]) == 4
    capsys.readouterr()
    assert main(["--input", str(tmp_path / "missing.csv"), "--omega", "1"]) == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nnot,a number\n")
    assert main(["--input", str(bad), "--omega", "1"]) == 2
    bad.write_text("1,2,3\n")
    assert main(["--input", str(bad), "--omega", "1"]) == 2
    assert main(["--input", str(sq)]) == 2
    assert main(["--input", str(sq), "--omega", "1", "--oracle", "8"]) == 2
    capsys.readouterr()


def test_json_input(tmp_path):
    p = tmp_path / "in.json"
    p.write_text(json.dumps({"points": UNIT_SQUARE, "omega": 90, "unit": "degrees"}))
    code, doc = run_cfg(RunConfig(input=p, format="json"))
    assert code == 0 and doc["min_area"] == pytest.approx(2.0, abs=1e-9)
    # the command-line value wins over the file
    code, doc = run_cfg(RunConfig(input=p, format="json", omega=math.pi / 3))
    assert doc["omega"] == pytest.approx(math.pi / 3)
    p.write_text("{not json")
    assert run_cfg(RunConfig(input=p, format="json"))[0] == 2
    p.write_text(json.dumps({"points": UNIT_SQUARE, "omega": 1, "unit": "grad"}))
    assert run_cfg(RunConfig(input=p, format="json"))[0] == 2


def test_oracle_block(tmp_path):
    sq = write_csv(tmp_path / "sq.csv", UNIT_SQUARE)
    code, doc = run_cfg(RunConfig(input=sq, omega=math.pi / 2, oracle=100_000))
    assert code == 0
    assert abs(doc["oracle"]["best_area"] - doc["min_area"]) <= 1e-3
    assert doc["oracle"]["samples"] == 100_000
    assert len(doc["optima"]) == 4


def test_events_flag(quad_csv):
    _, plain = run_cfg(RunConfig(input=quad_csv, omega=math.pi / 2))
    _, full = run_cfg(RunConfig(input=quad_csv, omega=math.pi / 2, events=True))
    assert "events" not in plain
    assert len(full["events"]) > 0
    assert {"position", "arc", "theta", "kinds", "midpoint_locus"} <= set(full["events"][0])


def test_svg_output(tmp_path, quad_csv):
    from omegatri import build_cloud, convex_hull

    svg = tmp_path / "out.svg"
    code, doc = run_cfg(RunConfig(input=quad_csv, omega=math.pi / 2, svg=svg))
    assert code == 0
    root = ET.fromstring(svg.read_text())
    paths = [e for e in root.iter(SVG_NS + "path") if e.get("class") == "cloud-arc"]
    polys = [e for e in root.iter(SVG_NS + "polygon") if e.get("class") == "optimum"]
    assert len(paths) == build_cloud(convex_hull(QUARTIC_QUAD), math.pi / 2).n_prime
    assert len(polys) == len(doc["optima"])
    assert [e.get("class") for e in root.iter(SVG_NS + "polygon")].count("hull") == 1


def test_round_trip_through_hull(tmp_path, quad_csv):
    _, doc = run_cfg(RunConfig(input=quad_csv, omega=math.pi / 2))
    again = write_csv(tmp_path / "hull.csv", doc["hull"])
    _, doc2 = run_cfg(RunConfig(input=again, omega=doc["omega"]))
    assert f"{doc2['min_area']:.12g}" == f"{doc['min_area']:.12g}"


def test_module_entry_point(quad_csv):
    proc = subprocess.run(
        [sys.executable, "-m", "omegatri", "--input", str(quad_csv), "--omega", "1.5707963267948966"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["optima"][0]["provenance"] == "ArcEdge"
