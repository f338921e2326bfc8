"""Minimum-area triangle over one sweep section.

Four situations occur, depending on whether the apex moves on a proper arc or
is pinned at a hull vertex, and whether the midpoint of the third side is
pinned at a vertex or slides along an edge. In the two pinned-midpoint cases
the area has a single interior critical point, a maximum, so the minimum is
at an end of the section. With the midpoint on an edge and the apex on an arc
the stationary points come from a quartic in ``cot(theta)``. With the apex
pinned and the third side on a fixed line the optimum is isosceles.

Every candidate is rebuilt as an actual triangle and compared by its area,
so the closed forms only decide where to look.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cloud import CloudArc, wedge_at
from .errors import EmptyInterval, NoSolution, OnBoundary
from .geometry import EPS_GEOM, Line, Point2, angle_between, dist
from .roots import real_roots
from .sweep import SweepSection
from .wedge import CandidateTriangle, Locus, OmegaWedge, Provenance, split_through_point

TIE_REL = 1e-12
_VERTICAL_TOL = 1e-12
_PARALLEL_TOL = 1e-12


@dataclass(frozen=True)
class ArcVertexGeometry:
    gamma: float
    delta: float
    alpha: float
    beta: float
    r: float
    omega: float
    vertex: Point2

    @classmethod
    def from_arc(cls, arc: CloudArc, v_j) -> "ArcVertexGeometry":
        v = Point2(0.0, 0.0)
        w = Point2(arc.chord, 0.0)
        p = arc.frame.to_frame(v_j)
        return cls(
            dist(p, v), dist(p, w), angle_between(p - v, w - v), angle_between(p - w, v - w),
            arc.radius, arc.omega, Point2(*v_j),
        )

    def sigma(self, theta: float) -> float:
        """Area of the pivoting cut as a function of the arc parameter."""
        a, b, w = self.alpha, self.beta, self.omega
        k = 8 * self.r ** 2 * math.sin(a) * math.sin(b) * math.sin(w) / math.sin(a + b) ** 2
        return -k * math.sin(b - w - theta) * math.sin(a + theta)

    @property
    def critical_theta(self) -> float:
        return (math.pi - self.alpha + self.beta - self.omega) / 2


def _check_interval(interval) -> tuple[float, float]:
    lo, hi = float(interval[0]), float(interval[1])
    if not (lo <= hi) or not (math.isfinite(lo) and math.isfinite(hi)):
        raise EmptyInterval(f"empty interval [{lo}, {hi}]")
    return lo, hi


def _pick(cands: list[CandidateTriangle], tie_rel: float = TIE_REL) -> list[CandidateTriangle]:
    if not cands:
        raise NoSolution("no feasible candidate in the section")
    best = min(c.area for c in cands)
    out = [c for c in cands if c.area <= best * (1 + tie_rel) + 1e-300]
    out.sort(key=lambda c: c.area)
    kept: list[CandidateTriangle] = []
    for c in out:
        if all(dist(c.q, k.q) > 1e-12 * (1 + abs(c.q[0]) + abs(c.q[1])) or dist(c.b, k.b) > 1e-9 for k in kept):
            kept.append(c)
    return kept


def _pivot_triangle(wedge: OmegaWedge, v_j, prov, param) -> CandidateTriangle | None:
    try:
        b, c = split_through_point(wedge, v_j)
    except OnBoundary:
        return None
    return CandidateTriangle(wedge.apex, b, c, wedge.omega, prov, param=param)


def cut_triangle(wedge: OmegaWedge, line: Line, prov, param) -> CandidateTriangle | None:
    """Triangle cut from ``wedge`` by ``line``, if both forward rays reach it."""
    q = wedge.apex
    tol = EPS_GEOM * (1.0 + abs(q[0]) + abs(q[1]))
    d1, d2 = wedge.d1, wedge.d2
    for d in (d1, d2):
        # a ray parallel to the line up to rounding never reaches it
        if abs(line.a * d[0] + line.b * d[1]) <= _PARALLEL_TOL:
            return None
    h1 = line.ray_hit(q, d1)
    h2 = line.ray_hit(q, d2)
    if h1 is None or h2 is None or h1 <= tol or h2 <= tol:
        return None
    b = Point2(q[0] + h1 * d1[0], q[1] + h1 * d1[1])
    c = Point2(q[0] + h2 * d2[0], q[1] + h2 * d2[1])
    return CandidateTriangle(q, b, c, wedge.omega, prov, param=param)


def min_arc_pinned_vertex(arc: CloudArc, geom: ArcVertexGeometry, theta_interval) -> list[CandidateTriangle]:
    """Apex on a proper arc, third side pivoting on ``geom.vertex``; the best end(s)."""
    lo, hi = _check_interval(theta_interval)
    cands = []
    for th in (hi, lo):
        t = _pivot_triangle(wedge_at(arc, th), geom.vertex, Provenance.ARC_VERTEX, th)
        if t is not None:
            cands.append(t)
    return _pick(cands)


def quadratic_zero_area(lam, mu, r, omega) -> list[float]:
    """``X`` values where the cut along ``y = lam*x + mu`` degenerates (numerator of the area)."""
    sn, cs = math.sin(omega), math.cos(omega)
    return [2 * lam * r * sn + mu, 2 * r * (lam * cs - sn), mu - 2 * r * cs]


def sigma_arc_edge(x: float, lam, mu, r, omega) -> float:
    """Area of the cut along ``y = lam*x + mu`` with ``x = cot(theta)``, arc frame."""
    sn, cs = math.sin(omega), math.cos(omega)
    num = (2 * lam * r * sn + mu) * x * x + 2 * r * (lam * cs - sn) * x + mu - 2 * r * cs
    den = (1 - lam * x) * (lam * sn + cs - (lam * cs - sn) * x) * (1 + x * x)
    return 0.5 * sn * num * num / abs(den)


def sigma_arc_edge_vertical(x: float, s, r, omega) -> float:
    sn, cs = math.sin(omega), math.cos(omega)
    num = (2 * r * sn - s) * x * x + 2 * r * cs * x - s
    den = x * (cs * x - sn) * (x * x + 1)
    return 0.5 * sn * num * num / abs(den)


def quartic_arc_edge(lam, mu, r, omega) -> list[float]:
    """Stationarity condition of :func:`sigma_arc_edge` in ``X``, highest degree first."""
    S, C = math.sin(omega), math.cos(omega)
    l2, l3 = lam * lam, lam ** 3
    return [
        -mu * S + 2 * r * S * S * lam + 2 * l3 * r * S * S + 2 * lam * mu * C + mu * l2 * S
        + 4 * l3 * r * C * C - 4 * r * l2 * C * S,
        -2 * r * S * S - 2 * mu * C - 6 * l3 * r * S * C + 2 * l2 * r * S * S + 2 * mu * l2 * C
        - 4 * mu * lam * S - 12 * l2 * r * C * C + 10 * lam * r * S * C,
        6 * r * (C + lam * S) * (-S + 2 * lam * C + l2 * S),
        2 * r * S * S - 4 * r * C * C - 2 * mu * C - 10 * l2 * r * S * S - 4 * mu * lam * S
        + 2 * mu * l2 * C + 2 * l3 * r * S * C - 14 * lam * r * S * C,
        4 * r * S * S * lam - mu * l2 * S - 2 * lam * mu * C + 2 * r * S * C - 2 * r * l2 * C * S + mu * S,
    ]


def quartic_arc_edge_vertical(s, r, omega) -> list[float]:
    S, C = math.sin(omega), math.cos(omega)
    return [
        -s * S + 2 * r * S * S + 4 * r * C * C,
        -2 * C * (s + 3 * r * S),
        6 * r * S * S,
        2 * C * (r * S - s),
        s * S,
    ]


def _roots_or_empty(coeffs) -> list[float]:
    try:
        return real_roots(coeffs)
    except ValueError:
        return []


def min_arc_on_edge(arc: CloudArc, edge_line: Line, theta_interval) -> list[CandidateTriangle]:
    """Apex on a proper arc, third side on ``edge_line``; exact minimum over the interval."""
    lo, hi = _check_interval(theta_interval)
    fl = arc.frame.line_to_frame(edge_line)
    vertical = abs(fl.b) < _VERTICAL_TOL
    r, omega = arc.radius, arc.omega
    if vertical:
        s = fl.c / fl.a
        quad = [2 * r * math.sin(omega) - s, 2 * r * math.cos(omega), -s]
        quart = quartic_arc_edge_vertical(s, r, omega)
        details = {"vertical": True, "s": s}
    else:
        lam, mu = -fl.a / fl.b, fl.c / fl.b
        quad = quadratic_zero_area(lam, mu, r, omega)
        quart = quartic_arc_edge(lam, mu, r, omega)
        details = {"vertical": False, "lambda": lam, "mu": mu}
    quart_roots = _roots_or_empty(quart)
    details.update(radius=r, quartic=quart, quartic_roots=quart_roots)
    thetas = {hi: "end", lo: "end"}
    if lo < math.pi / 2 < hi:
        thetas.setdefault(math.pi / 2, "right")
    for label, xs in (("quadratic", _roots_or_empty(quad)), ("quartic", quart_roots)):
        for x in xs:
            th = math.atan2(1.0, x)
            if lo < th < hi:
                thetas.setdefault(th, label)
    cands = []
    for th, label in thetas.items():
        t = cut_triangle(wedge_at(arc, th), edge_line, Provenance.ARC_EDGE, th)
        if t is not None:
            d = dict(details, candidate=label, cot_theta=(math.cos(th) / math.sin(th) if th else math.inf))
            cands.append(_with_details(t, d))
    if not cands:
        raise NoSolution("no cut of the edge line is feasible on this arc section")
    return _pick(cands)


def _with_details(t: CandidateTriangle, details: dict) -> CandidateTriangle:
    t.details.update(details)
    return t


def sigma_pivot(mu: float, omega: float, theta: float) -> float:
    """Area with the apex fixed and the cut pivoting on a point; ``mu`` is the point's
    distance to the apex times ``sin(omega)``, ``theta`` the rotation in ``(0, omega)``."""
    return 2 * mu * mu / math.sin(omega) ** 3 * math.sin(omega - theta) * math.sin(theta)


def min_vertex_pinned_vertex(q, v_j, omega: float, rotation_interval) -> list[CandidateTriangle]:
    """Apex pinned at ``q``, cut pivoting on ``v_j``; ``rotation_interval`` is in wedge direction."""
    lo, hi = _check_interval(rotation_interval)
    q = Point2(*q)
    cands = []
    for phi in (hi, lo):
        t = _pivot_triangle(OmegaWedge(q, phi, omega), v_j, Provenance.VERTEX_VERTEX, phi)
        if t is not None:
            cands.append(t)
    return _pick(cands)


def isosceles_direction(q, edge_line: Line, omega: float) -> float:
    """Wedge direction whose cut on ``edge_line`` is isosceles at ``q``."""
    f = edge_line.project(q)
    return math.atan2(f[1] - q[1], f[0] - q[0]) - omega / 2


def min_vertex_on_edge(q, edge_line: Line, omega: float, rotation_interval) -> list[CandidateTriangle]:
    """Apex pinned at ``q``, third side on ``edge_line``."""
    lo, hi = _check_interval(rotation_interval)
    q = Point2(*q)
    phi = isosceles_direction(q, edge_line, omega)
    phi = lo + (phi - lo) % (2 * math.pi)
    tol = 1e-12 * (1 + abs(lo))
    if phi > hi + tol and phi - 2 * math.pi >= lo - tol:
        phi -= 2 * math.pi
    if lo - tol <= phi <= hi + tol:
        t = cut_triangle(OmegaWedge(q, min(max(phi, lo), hi), omega), edge_line, Provenance.VERTEX_EDGE, phi)
        if t is not None:
            return [t]
    # the area is unimodal in the rotation, so the closer end wins otherwise
    cands = []
    for p in (hi, lo):
        t = cut_triangle(OmegaWedge(q, p, omega), edge_line, Provenance.VERTEX_EDGE, p)
        if t is not None:
            cands.append(t)
    return _pick(cands)


def optimize_section(poly, section: SweepSection) -> list[CandidateTriangle]:
    """Best triangle(s) over one section, tagged with the section and the midpoint locus."""
    arc = section.arc
    mode: Locus = section.midpoint_mode
    j = mode.index
    if mode.kind == "vertex":
        if arc.degenerate:
            out = min_vertex_pinned_vertex(arc.start, poly.vertex(j), arc.omega, section.interval)
        else:
            geom = ArcVertexGeometry.from_arc(arc, poly.vertex(j))
            out = min_arc_pinned_vertex(arc, geom, section.interval)
    else:
        line = poly.edge_line(j)
        if arc.degenerate:
            out = min_vertex_on_edge(arc.start, line, arc.omega, section.interval)
        else:
            out = min_arc_on_edge(arc, line, section.interval)
    res = []
    for t in out:
        t.details.update(section=section.index, arc=arc.index)
        res.append(CandidateTriangle(
            t.q, t.b, t.c, t.omega, t.provenance, locus=mode, section=section.index,
            param=t.param, details=t.details,
        ))
    return res
