"""Acceptance criteria, one test each. Every test records a PASS/FAIL line.

Run as a script (``python tests/test_acceptance.py``) or through pytest, where
the lines are printed in the terminal summary.
"""

from __future__ import annotations

import functools
import math
import os
import random
import sys
import time

import numpy as np

sys.path.insert(0, os.path.dirname(__file__))

from omegatri import OmegaWedge, build_cloud, min_vertex_on_edge, oracle_min, real_roots, solve, sweep
from omegatri.geometry import EPS_GEOM, ConvexPolygon, Line, Point2, angle_between, convex_hull, dist, midpoint
from omegatri.cloud import arc_point
from omegatri.optimize import optimize_section
from omegatri.pipeline import oracle_cuts
from omegatri.wedge import split_through_point

from instances import OMEGAS, QUARTIC_QUAD, UNIT_SQUARE, oracle_instances

RESULTS: list[str] = []


def report(name: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# ---------------------------------------------------------------- helpers


def triangle_contains(tri, p, tol) -> bool:
    q, b, c = tri
    sign = 1.0 if (b[0] - q[0]) * (c[1] - q[1]) - (b[1] - q[1]) * (c[0] - q[0]) > 0 else -1.0
    for u, v in ((q, b), (b, c), (c, q)):
        if sign * ((v[0] - u[0]) * (p[1] - u[1]) - (v[1] - u[1]) * (p[0] - u[0])) < -tol * dist(u, v):
            return False
    return True


def boundary_distance(p, poly: ConvexPolygon) -> float:
    best = math.inf
    for i in range(poly.n):
        a, b = poly.edge(i)
        e = b - a
        u = max(0.0, min(1.0, ((p[0] - a[0]) * e[0] + (p[1] - a[1]) * e[1]) / (e[0] ** 2 + e[1] ** 2)))
        best = min(best, dist(p, (a[0] + u * e[0], a[1] + u * e[1])))
    return best


def locus_ranks(poly: ConvexPolygon, mids: np.ndarray, eps: float = 1e-7) -> np.ndarray:
    """Cyclic locus rank (vertex j -> 2j, edge j -> 2j+1) of each midpoint, -1 if off the boundary."""
    V = np.asarray(poly.vertices)
    tol = eps * poly.diameter()
    ranks = np.full(len(mids), -1)
    dv = np.hypot(mids[:, None, 0] - V[None, :, 0], mids[:, None, 1] - V[None, :, 1])
    at_v = dv.min(axis=1) <= tol
    ranks[at_v] = 2 * dv.argmin(axis=1)[at_v]
    P0, P1 = V, np.roll(V, -1, axis=0)
    E = P1 - P0
    L = np.hypot(E[:, 0], E[:, 1])
    rel = mids[:, None, :] - P0[None, :, :]
    off = np.abs(rel[..., 0] * E[None, :, 1] - rel[..., 1] * E[None, :, 0]) / L[None, :]
    u = (rel[..., 0] * E[None, :, 0] + rel[..., 1] * E[None, :, 1]) / (L * L)[None, :]
    on = (off <= tol) & (u >= 0.0) & (u <= 1.0)
    on_e = ~at_v & on.any(axis=1)
    ranks[on_e] = 2 * on.argmax(axis=1)[on_e] + 1
    return ranks


def random_similarity(rng: random.Random):
    s = 10 ** rng.uniform(-3, 3)
    a = rng.uniform(0, 2 * math.pi)
    tx, ty = rng.uniform(-100, 100), rng.uniform(-100, 100)
    ca, sa = math.cos(a), math.sin(a)
    return s, lambda p: (s * (ca * p[0] - sa * p[1]) + tx, s * (sa * p[0] + ca * p[1]) + ty)


@functools.cache
def oracle_runs():
    """Solver and oracle on the random instance set, with timings."""
    runs = []
    t_solve = t_oracle = 0.0
    for pts in oracle_instances():
        for omega in OMEGAS:
            t0 = time.perf_counter()
            res = solve(pts, omega)
            t1 = time.perf_counter()
            orc = oracle_min(pts, omega, 100_000)
            t2 = time.perf_counter()
            t_solve += t1 - t0
            t_oracle += t2 - t1
            runs.append((pts, omega, res, orc))
    return runs, t_solve, t_oracle


# ---------------------------------------------------------------- criteria


def test_quadrilateral_regression():
    t0 = time.perf_counter()
    res = solve(QUARTIC_QUAD, math.pi / 2)
    elapsed = time.perf_counter() - t0
    t = res.optima[0]
    d = t.details or {}
    quartic = np.array(d.get("quartic", [np.nan] * 5), dtype=float)
    ratio = quartic / np.array([13.0, -92.0, 45.0, 12.0, -62.0])
    proportional = bool(np.allclose(ratio, ratio[0], rtol=1e-9))
    roots = sorted(real_roots(list(quartic))) if proportional else []
    roots_ok = len(roots) == 2 and abs(roots[0] + 0.761694) <= 1e-5 and abs(roots[1] - 6.543373) <= 1e-5
    theta_pi = t.param / math.pi
    theta_ok = abs(theta_pi - 0.048273) <= 1e-5 * 0.048273
    cd = Line.through(QUARTIC_QUAD[2], QUARTIC_QUAD[3])
    off = max(abs(cd.signed_distance(t.b)), abs(cd.signed_distance(t.c)))
    ok = len(res.optima) == 1 and proportional and roots_ok and theta_ok and off <= 1e-7 and elapsed < 0.1
    report("1 quadrilateral regression", ok,
           f"quartic proportional={proportional} roots={[round(r, 7) for r in roots]} "
           f"theta/pi={theta_pi:.8f} cd-distance={off:.1e} area={res.min_area:.12f} time={elapsed * 1e3:.1f}ms")


def test_oracle_equivalence():
    runs, t_solve, t_oracle = oracle_runs()
    worst = 0.0
    above = 0
    for _, _, res, orc in runs:
        worst = max(worst, abs(res.min_area - orc.best_area) / orc.best_area)
        above += res.min_area > orc.best_area * (1 + 1e-9)
    total = t_solve + t_oracle
    ok = above == 0 and worst <= 1e-3 and total < 60.0
    report("2 oracle equivalence", ok,
           f"{len(runs)} runs, solver above oracle={above}, worst relative gap={worst:.2e}, "
           f"time={total:.1f}s (solve {t_solve:.1f}s, oracle {t_oracle:.1f}s)")


def test_quadrilateral_arc_count():
    cloud = build_cloud(convex_hull(QUARTIC_QUAD), math.pi / 2)
    report("3 quadrilateral arc count", cloud.n_prime == 6,
           f"n'={cloud.n_prime} (expected 6), pieces={len(cloud)}, pivots={sum(a.degenerate for a in cloud)}")


def test_invariant_suite():
    runs, _, _ = oracle_runs()
    bad = {"contain": 0, "angle": 0, "midpoint": 0, "monotone": 0, "inscribed": 0}
    worst_angle = worst_mid = worst_insc = 0.0
    for pts, omega, res, _ in runs:
        hull = res.hull
        diam = hull.diameter()
        for t in res.optima:
            tri = t.vertices()
            bad["contain"] += not all(triangle_contains(tri, p, EPS_GEOM * diam) for p in pts)
            err = abs(t.apex_angle() - omega)
            worst_angle = max(worst_angle, err)
            bad["angle"] += err > 1e-9
            md = boundary_distance(t.midpoint, hull) / diam
            worst_mid = max(worst_mid, md)
            bad["midpoint"] += md > 1e-7

        # sweep samples in the solver's normalised frame
        poly = res.cloud.polygon
        phis = []
        for s in res.sections:
            lo, hi = s.interval
            for i in range(64):
                phis.append(s.arc.theta_to_phi(hi - (hi - lo) * (i + 0.5) / 64))
        _, mids = oracle_cuts(poly, omega, np.array(phis))
        ranks = locus_ranks(poly, mids)
        n2 = 2 * poly.n
        steps = (np.roll(ranks, -1) - ranks) % n2
        monotone = bool((ranks >= 0).all() and (steps < poly.n).all() and steps.sum() == n2)
        bad["monotone"] += not monotone

        for arc in res.cloud.proper_arcs:
            v, w = poly.vertex(arc.support_left), poly.vertex(arc.support_right)
            lo, hi = arc.theta_range
            for i in range(32):
                q = arc_point(arc, hi - (hi - lo) * (i + 0.5) / 32)
                e = abs(angle_between(v - q, w - q) - omega)
                worst_insc = max(worst_insc, e)
                bad["inscribed"] += e > 1e-8
    ok = not any(bad.values())
    report("4 invariant suite", ok,
           f"violations={bad} worst apex-angle error={worst_angle:.1e} "
           f"worst midpoint offset={worst_mid:.1e} worst inscribed-angle error={worst_insc:.1e}")


def test_analytic_spot_checks():
    sq = solve(UNIT_SQUARE, math.pi / 2)
    square_ok = abs(sq.min_area - 2.0) <= 1e-6 and len(sq.optima) == 4

    (iso,) = min_vertex_on_edge((0.0, 1.0), Line(0.0, 1.0, 0.0), math.pi / 2, (-math.pi, -math.pi / 2))
    iso_ok = abs(iso.area - 1.0) <= 1e-12

    rng = np.random.default_rng(3)
    omega = rng.uniform(0.05, math.pi - 0.05, 10_000)
    t = rng.uniform(0.01, 1.0, 10_000)
    s = t / np.tan(omega) + rng.uniform(0.01, 1.0, 10_000)
    worst = 0.0
    for w, ss, tt in zip(omega, s, t):
        b, c = split_through_point(OmegaWedge(Point2(0.0, 0.0), 0.0, float(w)), (float(ss), float(tt)))
        worst = max(worst, dist(midpoint(b, c), (ss, tt)), abs(b[1]),
                    abs(angle_between(c, (1.0, 0.0)) - float(w)))
    split_ok = worst <= 1e-12
    report("5 analytic spot checks", square_ok and iso_ok and split_ok,
           f"square area={sq.min_area:.12f} optima={len(sq.optima)}; isosceles area={iso.area:.15f}; "
           f"midpoint split worst error={worst:.1e} over 10000 samples")


def test_similarity_equivariance():
    rng = random.Random(21)
    worst_area = worst_map = 0.0
    mismatched = 0
    cases = [QUARTIC_QUAD, UNIT_SQUARE] + oracle_instances(20, seed=5)
    for pts in cases:
        omega = rng.choice(OMEGAS)
        base = solve(pts, omega)
        for _ in range(3):
            s, f = random_similarity(rng)
            res = solve([f(p) for p in pts], omega)
            worst_area = max(worst_area, abs(res.min_area / (base.min_area * s * s) - 1.0))
            if len(res.optima) != len(base.optima):
                mismatched += 1
                continue
            for t in base.optima:
                img = [f(p) for p in t.vertices()]
                gap = min(max(dist(a, b) for a, b in zip(img, u.vertices())) for u in res.optima) / s
                worst_map = max(worst_map, gap)
    ok = worst_area <= 1e-9 and worst_map <= EPS_GEOM and mismatched == 0
    report("6 similarity equivariance", ok,
           f"{3 * len(cases)} transforms, worst area ratio error={worst_area:.1e}, "
           f"worst optimum offset/s={worst_map:.1e}, optimum count mismatches={mismatched}")


def post_hull_time(hull: ConvexPolygon, omega: float, repeats: int = 5) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        cloud = build_cloud(hull, omega)
        sw = sweep(hull, cloud, omega)
        min(c.area for s in sw.sections for c in optimize_section(hull, s))
        best = min(best, time.perf_counter() - t0)
    return best


def test_post_hull_growth():
    rng = np.random.default_rng(11)
    sizes = [1000 * 2 ** k for k in range(7)]
    hulls = []
    for n in sizes:
        r = np.sqrt(rng.random(n))
        a = rng.uniform(0, 2 * math.pi, n)
        hull = convex_hull(np.column_stack([r * np.cos(a), r * np.sin(a)]).tolist())
        hulls.append(hull)
    times = [post_hull_time(h, math.pi / 2) for h in hulls]
    ratios = [b / a for a, b in zip(times, times[1:])]
    report("7 post-hull growth", max(ratios) <= 2.5,
           f"hull sizes={[h.n for h in hulls]} times(ms)={[round(t * 1e3, 2) for t in times]} "
           f"ratios={[round(x, 2) for x in ratios]}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
