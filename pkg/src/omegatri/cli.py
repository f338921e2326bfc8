"""Command-line front end.

Reads a point set (CSV ``x,y`` lines or JSON), solves for the minimum-area
enclosing triangle with the requested apex angle and prints a JSON report.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .errors import DegenerateInput, OmegaOutOfRange
from .pipeline import TIE_TOL, SolveResult, oracle_min, solve

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_OMEGA = 4


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    input: Path
    format: str = "csv"
    omega: float | None = None
    degrees: bool = False
    tie_tol: float = TIE_TOL
    oracle: int | None = None
    svg: Path | None = None
    events: bool = False


def read_csv_points(text: str) -> list[tuple[float, float]]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    pts = []
    for row in csv.reader(lines):
        if len(row) != 2:
            raise InputError(f"expected 'x,y', got {','.join(row)!r}")
        try:
            pts.append((float(row[0]), float(row[1])))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return pts


def read_json_input(text: str) -> tuple[list[tuple[float, float]], float | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "points" not in doc:
        raise InputError("JSON input needs a 'points' array")
    try:
        pts = [(float(p[0]), float(p[1])) for p in doc["points"]]
    except (TypeError, ValueError, IndexError):
        raise InputError("points must be [x, y] pairs") from None
    omega = doc.get("omega")
    if omega is not None:
        omega = float(omega)
        unit = doc.get("unit", "radians")
        if unit == "degrees":
            omega = math.radians(omega)
        elif unit != "radians":
            raise InputError(f"unknown unit {unit!r}")
    return pts, omega


def load_input(cfg: RunConfig) -> tuple[list[tuple[float, float]], float]:
    try:
        text = cfg.input.read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    file_omega = None
    if cfg.format == "json":
        pts, file_omega = read_json_input(text)
    else:
        pts = read_csv_points(text)
    if cfg.omega is not None:
        omega = math.radians(cfg.omega) if cfg.degrees else cfg.omega
    elif file_omega is not None:
        omega = file_omega
    else:
        raise InputError("no omega given (use --omega or an 'omega' field)")
    if any(not (math.isfinite(x) and math.isfinite(y)) for x, y in pts):
        raise InputError("non-finite coordinate")
    return pts, omega


def _pt(p) -> list[float]:
    return [float(p[0]), float(p[1])]


def result_document(res: SolveResult, with_events: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "hull": [_pt(v) for v in reversed(res.hull.vertices)],
        "omega": res.omega,
        "min_area": res.min_area,
        "sections_evaluated": res.sections_evaluated,
        "optima": [
            {
                "q": _pt(t.q),
                "b": _pt(t.b),
                "c": _pt(t.c),
                "area": t.area,
                "provenance": t.provenance.value,
                "midpoint": _pt(t.midpoint),
                "locus": str(t.locus) if t.locus else None,
                "family": t.family,
            }
            for t in res.optima
        ],
    }
    if with_events:
        doc["events"] = [
            {
                "position": _pt(e.position),
                "arc": e.arc_index,
                "theta": e.theta,
                "kinds": sorted(k.value for k in e.kinds),
                "midpoint_locus": str(e.midpoint_locus),
            }
            for e in res.events
        ]
    return doc


def dumps(doc: Any) -> str:
    # float repr is the shortest string that round-trips the double exactly
    return json.dumps(doc, indent=2, allow_nan=False)


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        if cfg.oracle is not None and cfg.oracle < 16:
            raise InputError("--oracle needs at least 16 samples")
        pts, omega = load_input(cfg)
        res = solve(pts, omega, tie_tol=cfg.tie_tol)
        doc = result_document(res, cfg.events)
        if cfg.oracle is not None:
            orc = oracle_min(pts, omega, cfg.oracle)
            doc["oracle"] = {
                "best_area": orc.best_area,
                "best_wedge_direction": orc.best_wedge_direction,
                "samples": orc.samples,
                "relative_gap": (orc.best_area - res.min_area) / res.min_area,
            }
        if cfg.svg is not None:
            from .svg import render_svg

            cfg.svg.write_text(render_svg(res))
    except InputError as exc:
        return _fail(EXIT_PARSE, "ParseError", str(exc))
    except DegenerateInput as exc:
        return _fail(EXIT_DEGENERATE, "DegenerateInput", str(exc))
    except OmegaOutOfRange as exc:
        return _fail(EXIT_OMEGA, "OmegaOutOfRange", str(exc))
    except ValueError as exc:
        return _fail(EXIT_PARSE, type(exc).__name__, str(exc))
    out.write(dumps(doc) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="omegatri",
        description="Minimum-area enclosing triangle with a fixed apex angle.",
    )
    p.add_argument("--input", required=True, type=Path, help="point file (CSV x,y lines or JSON)")
    p.add_argument("--format", choices=["csv", "json"], help="input format (default: from the file suffix)")
    p.add_argument("--omega", type=float, help="apex angle; overrides the file's value")
    p.add_argument("--degrees", action="store_true", help="--omega is in degrees")
    p.add_argument("--tie-tol", type=float, default=TIE_TOL, help="relative tolerance grouping tied optima")
    p.add_argument("--oracle", type=int, metavar="K", help="also run the sampling oracle with K directions")
    p.add_argument("--svg", type=Path, help="write an SVG figure here")
    p.add_argument("--events", action="store_true", help="include the sweep events in the output")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or ("json" if args.input.suffix.lower() == ".json" else "csv")
    cfg = RunConfig(
        input=args.input, format=fmt, omega=args.omega, degrees=args.degrees,
        tie_tol=args.tie_tol, oracle=args.oracle, svg=args.svg, events=args.events,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
