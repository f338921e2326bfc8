"""End-to-end solver and the brute-force sampling oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numba
import numpy as np

from .cloud import OmegaCloud, build_cloud
from .errors import OmegaOutOfRange
from .geometry import ConvexPolygon, Point2, convex_hull, dist
from .optimize import optimize_section
from .sweep import EventPoint, SweepSection, sweep
from .wedge import CandidateTriangle

OMEGA_MIN = 1e-6
TIE_TOL = 1e-9
_DEDUPE = 1e-7


def check_omega(omega: float) -> float:
    omega = float(omega)
    if not math.isfinite(omega) or not (OMEGA_MIN < omega < math.pi - OMEGA_MIN):
        raise OmegaOutOfRange(f"omega={omega!r} must lie in ({OMEGA_MIN}, pi - {OMEGA_MIN})")
    return omega


@dataclass(frozen=True)
class Similarity:
    """``world = center + scale * local``."""

    center: Point2
    scale: float

    def to_local(self, p) -> Point2:
        return Point2((p[0] - self.center[0]) / self.scale, (p[1] - self.center[1]) / self.scale)

    def to_world(self, p) -> Point2:
        return Point2(self.center[0] + self.scale * p[0], self.center[1] + self.scale * p[1])


@dataclass
class SolveResult:
    optima: list[CandidateTriangle]
    min_area: float
    sections_evaluated: int
    events: list[EventPoint] = field(default_factory=list)
    hull: ConvexPolygon | None = None
    omega: float = 0.0
    cloud: OmegaCloud | None = None
    sections: list[SweepSection] = field(default_factory=list)
    similarity: Similarity | None = None


def _third_side_angle(t: CandidateTriangle) -> float:
    return math.atan2(t.c[1] - t.b[1], t.c[0] - t.b[0]) % math.pi


def _same_triangle(a: CandidateTriangle, b: CandidateTriangle) -> bool:
    if dist(a.q, b.q) > _DEDUPE:
        return False
    d = abs(_third_side_angle(a) - _third_side_angle(b))
    return min(d, math.pi - d) <= _DEDUPE


def _section_family(poly, section: SweepSection, tied: list[CandidateTriangle], tol: float) -> bool:
    """True when the area is flat across the section (a continuum of optima)."""
    lo, hi = section.interval
    if len(tied) < 2 or hi - lo <= 1e-12:
        return False
    mid = SweepSection(section.index, section.arc, (0.5 * (lo + hi), 0.5 * (lo + hi)), section.midpoint_mode)
    try:
        m = optimize_section(poly, mid)[0].area
    except ValueError:
        return False
    return abs(m - tied[0].area) <= tol * tied[0].area


def solve(points: Sequence[Sequence[float]], omega: float, tie_tol: float = TIE_TOL) -> SolveResult:
    """All minimum-area triangles with apex angle ``omega`` enclosing ``points``."""
    omega = check_omega(omega)
    hull = convex_hull(points)
    sim = Similarity(hull.centroid(), hull.diameter() / 2.0)
    poly = ConvexPolygon(tuple(sim.to_local(v) for v in hull.vertices))
    cloud = build_cloud(poly, omega)
    sw = sweep(poly, cloud, omega)
    per_section: list[list[CandidateTriangle]] = [optimize_section(poly, s) for s in sw.sections]
    best = min(c.area for cs in per_section for c in cs)
    limit = best * (1.0 + tie_tol)
    chosen: list[CandidateTriangle] = []
    for sec, cs in zip(sw.sections, per_section):
        tied = [c for c in cs if c.area <= limit]
        if not tied:
            continue
        fam = _section_family(poly, sec, tied, tie_tol)
        for c in tied:
            if fam:
                c = CandidateTriangle(c.q, c.b, c.c, c.omega, c.provenance, locus=c.locus,
                                      section=c.section, param=c.param, family=True, details=c.details)
            dup = next((i for i, k in enumerate(chosen) if _same_triangle(k, c)), None)
            if dup is None:
                chosen.append(c)
            elif c.area < chosen[dup].area:
                chosen[dup] = c
    world = [t.transformed(sim.to_world) for t in chosen]
    ctr = hull.centroid()

    def key(t: CandidateTriangle):
        return (round(math.atan2(t.q[1] - ctr[1], t.q[0] - ctr[0]), 12), t.q[0], t.q[1])

    world.sort(key=key)
    return SolveResult(
        optima=world,
        min_area=best * sim.scale ** 2,
        sections_evaluated=len(sw.sections),
        events=[EventPoint(sim.to_world(e.position), e.arc_index, e.theta, e.kinds, e.midpoint_locus) for e in sw.events],
        hull=hull,
        omega=omega,
        cloud=cloud,
        sections=sw.sections,
        similarity=sim,
    )


@dataclass(frozen=True)
class OracleResult:
    best_area: float
    best_wedge_direction: float
    samples: int


@numba.njit(cache=True)
def _oracle_kernel(V, omega, phis, tol, side_tol, out, mids):
    n = V.shape[0]
    sn, cs = math.sin(omega), math.cos(omega)
    ct = 0.0 if omega == math.pi / 2 else cs / sn
    for k in range(phis.shape[0]):
        d1x, d1y = math.cos(phis[k]), math.sin(phis[k])
        d2x, d2y = math.cos(phis[k] + omega), math.sin(phis[k] + omega)
        sl = 0
        sr = 0
        for i in range(1, n):
            if d1x * V[i, 1] - d1y * V[i, 0] < d1x * V[sl, 1] - d1y * V[sl, 0]:
                sl = i
            if d2x * V[i, 1] - d2y * V[i, 0] > d2x * V[sr, 1] - d2y * V[sr, 0]:
                sr = i
        ex, ey = V[sr, 0] - V[sl, 0], V[sr, 1] - V[sl, 1]
        a = (ex * d2y - ey * d2x) / sn
        qx, qy = V[sl, 0] + a * d1x, V[sl, 1] + a * d1y
        best = math.inf
        bmx = bmy = math.nan
        for i in range(n):
            j = (i + 1) % n
            p0x, p0y = V[i, 0], V[i, 1]
            dx, dy = V[j, 0] - p0x, V[j, 1] - p0y
            ln = math.hypot(dx, dy)
            # outward normal of a clockwise edge
            nx, ny = -dy / ln, dx / ln
            nq = nx * (qx - p0x) + ny * (qy - p0y)
            if nq < -tol:
                den1 = nx * d1x + ny * d1y
                den2 = nx * d2x + ny * d2y
                if den1 != 0.0 and den2 != 0.0:
                    h1 = -nq / den1
                    h2 = -nq / den2
                    if h1 > tol and h2 > tol:
                        mx = qx + 0.5 * (h1 * d1x + h2 * d2x)
                        my = qy + 0.5 * (h1 * d1y + h2 * d2y)
                        u = ((mx - p0x) * dx + (my - p0y) * dy) / (ln * ln)
                        ut = tol / ln
                        if -ut <= u <= 1.0 + ut and 0.5 * h1 * h2 * sn < best:
                            best = 0.5 * h1 * h2 * sn
                            bmx, bmy = mx, my
            # pivot line through vertex i
            rx, ry = p0x - qx, p0y - qy
            s = d1x * rx + d1y * ry
            t = d1x * ry - d1y * rx
            along = s - t * ct
            if t > tol and along * sn > tol:
                bx, by = qx + 2.0 * along * d1x, qy + 2.0 * along * d1y
                lx, ly = p0x - bx, p0y - by
                side_q = lx * (qy - by) - ly * (qx - bx)
                sg = 1.0 if side_q > 0 else -1.0
                okv = True
                for nb in ((i - 1) % n, j):
                    wx, wy = V[nb, 0] - bx, V[nb, 1] - by
                    if (lx * wy - ly * wx) * sg < -side_tol:
                        okv = False
                if okv and 2.0 * t * along < best:
                    best = 2.0 * t * along
                    bmx, bmy = p0x, p0y
        out[k] = best
        mids[k, 0] = bmx
        mids[k, 1] = bmy


def oracle_cuts(poly: ConvexPolygon, omega: float, phis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Fixed-wedge optimum area and third-side midpoint for every direction in ``phis``.

    For each direction the enclosing wedge is formed from the two support
    vertices, and the optimal cut is the unique supporting line of the
    polygon whose midpoint touches it: either an edge line with the midpoint
    on the edge or the pivot line through a vertex. Every candidate of both
    kinds is tried, so the result does not depend on the solver's walk.
    """
    V = np.asarray(poly.vertices, dtype=np.float64)
    phis = np.ascontiguousarray(phis, dtype=np.float64)
    out = np.empty(len(phis))
    mids = np.empty((len(phis), 2))
    diam = poly.diameter()
    _oracle_kernel(V, float(omega), phis, 1e-9 * diam, 1e-9 * diam * diam, out, mids)
    return out, mids


def oracle_areas(poly: ConvexPolygon, omega: float, phis: np.ndarray) -> np.ndarray:
    """Fixed-wedge optimum area for every wedge direction in ``phis``."""
    return oracle_cuts(poly, omega, phis)[0]


def oracle_min(points: Sequence[Sequence[float]], omega: float, K: int = 100_000) -> OracleResult:
    """Best fixed-wedge optimum over ``K`` equally spaced wedge directions."""
    omega = check_omega(omega)
    if K < 16:
        raise ValueError("oracle needs at least 16 samples")
    hull = convex_hull(points)
    phis = 2 * math.pi * np.arange(K) / K
    areas = oracle_areas(hull, omega, phis)
    k = int(np.argmin(areas))
    return OracleResult(float(areas[k]), float(phis[k]), K)
