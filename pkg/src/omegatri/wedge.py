"""Fixed-angle wedges and the minimum triangle cut from one wedge.

A wedge is described by its apex and the direction ``phi`` of its first ray
``Delta``; the second ray ``Delta'`` points at ``phi + omega``. An enclosing
wedge therefore has the polygon on the left of ``Delta`` and on the right of
``Delta'``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .errors import NotEnclosing, OnBoundary
from .geometry import (
    EPS_GEOM,
    ConvexPolygon,
    Frame,
    Line,
    Point2,
    cot,
    cross,
    dist,
    midpoint,
    tangent_supports,
    unit,
)


class Provenance(str, enum.Enum):
    FIXED_WEDGE = "FixedWedge"
    ARC_VERTEX = "ArcVertex"
    ARC_EDGE = "ArcEdge"
    VERTEX_VERTEX = "VertexVertex"
    VERTEX_EDGE = "VertexEdge"


class Locus(NamedTuple):
    """Where the midpoint of the third side sits: ``("vertex", j)`` or ``("edge", j)``."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}:{self.index}"


@dataclass(frozen=True)
class OmegaWedge:
    apex: Point2
    phi: float
    omega: float
    support_left: int | None = None
    support_right: int | None = None

    @property
    def d1(self) -> Point2:
        return unit(self.phi)

    @property
    def d2(self) -> Point2:
        return unit(self.phi + self.omega)

    @property
    def frame(self) -> Frame:
        return Frame(self.apex, self.phi)


@dataclass(frozen=True)
class CandidateTriangle:
    q: Point2
    b: Point2
    c: Point2
    omega: float
    provenance: Provenance
    area: float = 0.0
    midpoint: Point2 = Point2(0.0, 0.0)
    locus: Locus | None = None
    section: int | None = None
    param: float | None = None
    family: bool = False
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "midpoint", midpoint(self.b, self.c))
        area = 0.5 * dist(self.q, self.b) * dist(self.q, self.c) * math.sin(self.omega)
        object.__setattr__(self, "area", area)

    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return self.q, self.b, self.c

    def apex_angle(self) -> float:
        u, v = self.b - self.q, self.c - self.q
        return math.atan2(abs(cross(u, v)), u[0] * v[0] + u[1] * v[1])

    def transformed(self, fn) -> "CandidateTriangle":
        """Copy with every point mapped through the similarity ``fn``."""
        return CandidateTriangle(
            fn(self.q), fn(self.b), fn(self.c), self.omega, self.provenance,
            locus=self.locus, section=self.section, param=self.param,
            family=self.family, details=dict(self.details),
        )


def split_through_point(wedge: OmegaWedge, v) -> tuple[Point2, Point2]:
    """Cut the wedge with the unique line through ``v`` that has ``v`` as midpoint.

    In the wedge frame (apex at the origin, ``Delta`` along +x) with
    ``v = (s, t)`` the endpoints are ``b = (2(s - t cot w), 0)`` on ``Delta`` and
    ``c = (2t cot w, 2t)`` on ``Delta'``.
    """
    fr = wedge.frame
    s, t = fr.to_frame(v)
    ct = cot(wedge.omega)
    scale = EPS_GEOM * (1.0 + math.hypot(s, t))
    along = s - t * ct
    if t <= scale or along * math.sin(wedge.omega) <= scale:
        raise OnBoundary(f"point {tuple(v)} is not strictly inside the wedge")
    b = fr.from_frame((2.0 * along, 0.0))
    c = fr.from_frame((2.0 * t * ct, 2.0 * t))
    return b, c


def enclosing_wedge_at(poly: ConvexPolygon, omega: float, phi: float) -> OmegaWedge:
    """The enclosing wedge whose first ray has direction ``phi``."""
    i = tangent_supports(poly, phi, "left")
    j = tangent_supports(poly, phi + omega, "right")
    if i == j:
        return OmegaWedge(poly.vertex(i), phi, omega, i, j)
    l1 = Line.point_direction(poly.vertex(i), phi)
    l2 = Line.point_direction(poly.vertex(j), phi + omega)
    apex = intersect_lines(l1, l2)
    return OmegaWedge(apex, phi, omega, i, j)


def intersect_lines(l1: Line, l2: Line) -> Point2:
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0.0:
        raise ValueError("parallel lines")
    return Point2((l1.c * l2.b - l1.b * l2.c) / det, (l1.a * l2.c - l1.c * l2.a) / det)


def check_encloses(poly: ConvexPolygon, wedge: OmegaWedge, eps: float = EPS_GEOM) -> None:
    """Raise :class:`NotEnclosing` unless both rays are tangent and contain ``poly``."""
    tol = eps * poly.diameter()
    q = wedge.apex
    d1, d2 = wedge.d1, wedge.d2
    s1 = [cross(d1, v - q) for v in poly.vertices]
    s2 = [-cross(d2, v - q) for v in poly.vertices]
    if min(s1) < -tol or min(s2) < -tol:
        raise NotEnclosing("polygon leaves the wedge")
    if min(s1) > tol or min(s2) > tol:
        raise NotEnclosing("a wedge ray is not tangent to the polygon")


class WalkResult(NamedTuple):
    b: Point2
    c: Point2
    locus: Locus
    edges_visited: int
    edge_position: float | None = None


def fixed_wedge_walk(poly: ConvexPolygon, wedge: OmegaWedge, eps: float = EPS_GEOM) -> WalkResult:
    """Walk the far chain clockwise from the support on ``Delta'``.

    Edges whose line misses a ray (forward of the apex) are skipped. On the
    first usable edge whose cut has its midpoint on the edge we stop; if the
    midpoint falls behind the edge the binding vertex is the edge's start and
    the cut through it is given by :func:`split_through_point`.
    """
    n = poly.n
    q, d1, d2 = wedge.apex, wedge.d1, wedge.d2
    sr = wedge.support_right
    if sr is None:
        sr = tangent_supports(poly, wedge.phi + wedge.omega, "right")
    scale = poly.diameter()
    tol = eps * scale
    k = sr
    visited = 0
    ahead = False
    for _ in range(n):
        line = poly.edge_line(k)
        visited += 1
        if line.signed_distance(q) >= -tol:
            if ahead:
                # past the far chain (an edge through a pinned apex): pivot on its start
                bb, cc = split_through_point(wedge, poly.vertex(k))
                return WalkResult(bb, cc, Locus("vertex", k), visited)
            # q is not on the polygon's side of this edge: not on the far chain
            k = (k + 1) % n
            continue
        h1 = line.ray_hit(q, d1)
        h2 = line.ray_hit(q, d2)
        ok1 = h1 is not None and h1 > tol
        ok2 = h2 is not None and h2 > tol
        p0, p1 = poly.edge(k)
        if not ok2:
            # the cut runs off along Delta': its midpoint is behind this edge
            u = -math.inf
        elif not ok1:
            u = math.inf
        else:
            b = Point2(q[0] + h1 * d1[0], q[1] + h1 * d1[1])
            c = Point2(q[0] + h2 * d2[0], q[1] + h2 * d2[1])
            m = midpoint(b, c)
            elen = dist(p0, p1)
            # position of m along the edge in clockwise orientation, 0 at start, 1 at end
            u = ((m[0] - p0[0]) * (p1[0] - p0[0]) + (m[1] - p0[1]) * (p1[1] - p0[1])) / (elen * elen)
            utol = tol / elen
            if -utol <= u <= 1.0 + utol:
                if abs(u) <= utol:
                    loc = Locus("vertex", k)
                elif abs(u - 1.0) <= utol:
                    loc = Locus("vertex", (k + 1) % n)
                else:
                    loc = Locus("edge", k)
                return WalkResult(b, c, loc, visited, u)
        if u > 1.0:
            ahead = True
            k = (k + 1) % n
            continue
        # midpoint behind the edge: pivot on the edge's start vertex
        bb, cc = split_through_point(wedge, p0)
        return WalkResult(bb, cc, Locus("vertex", k), visited)
    raise NotEnclosing("no polygon edge cuts both rays of the wedge")


def min_triangle_fixed_wedge(poly: ConvexPolygon, wedge: OmegaWedge, check: bool = True) -> CandidateTriangle:
    """Minimum-area triangle enclosing ``poly`` cut from a fixed enclosing wedge."""
    if check:
        check_encloses(poly, wedge)
    res = fixed_wedge_walk(poly, wedge)
    return CandidateTriangle(
        wedge.apex, res.b, res.c, wedge.omega, Provenance.FIXED_WEDGE,
        locus=res.locus, param=wedge.phi,
    )


def classify_midpoint(poly: ConvexPolygon, m, eps: float = 1e-7) -> Locus | None:
    """Vertex or edge of ``poly`` on which ``m`` lies, or None."""
    tol = eps * poly.diameter()
    for j, v in enumerate(poly.vertices):
        if dist(m, v) <= tol:
            return Locus("vertex", j)
    for j in range(poly.n):
        line = poly.edge_line(j)
        if abs(line.signed_distance(m)) <= tol:
            p0, p1 = poly.edge(j)
            e = p1 - p0
            u = ((m[0] - p0[0]) * e[0] + (m[1] - p0[1]) * e[1]) / (e[0] ** 2 + e[1] ** 2)
            if 0.0 <= u <= 1.0:
                return Locus("edge", j)
    return None
