"""Planar primitives, the convex hull and local coordinate frames.

All polygons handled by the package are strictly convex and stored with their
vertices in clockwise order, so the interior lies to the right of every
directed edge ``v[i] -> v[i+1]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInput

EPS_GEOM = 1e-9


class Point2(NamedTuple):
    x: float
    y: float

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point2(self.x - other[0], self.y - other[1])

    def __mul__(self, k):  # type: ignore[override]
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point2(-self.x, -self.y)


def as_point(p: Sequence[float]) -> Point2:
    """Coerce a pair to a :class:`Point2`, rejecting NaN and infinities."""
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinate in {p!r}")
    return Point2(x, y)


def dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def norm(u) -> float:
    return math.hypot(u[0], u[1])


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def orient(a, b, c) -> float:
    """Twice the signed area of ``abc``; positive for a counter-clockwise turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def unit(angle: float) -> Point2:
    return Point2(math.cos(angle), math.sin(angle))


def midpoint(p, q) -> Point2:
    return Point2((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0)


def cot(x: float) -> float:
    # exact zero at a right angle, so the closed-form cuts stay clean
    if x == math.pi / 2:
        return 0.0
    return math.cos(x) / math.sin(x)


def wrap_angle(a: float, lo: float = -math.pi) -> float:
    """Map ``a`` into ``[lo, lo + 2*pi)``."""
    return lo + (a - lo) % (2.0 * math.pi)


def angle_between(u, v) -> float:
    """Unsigned angle in ``[0, pi]`` between two vectors."""
    return math.atan2(abs(cross(u, v)), dot(u, v))


def shoelace(points: Sequence[Sequence[float]]) -> float:
    """Signed area, positive for counter-clockwise order."""
    s = 0.0
    n = len(points)
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2.0


@dataclass(frozen=True)
class Line:
    """The locus ``a*x + b*y = c`` with ``a**2 + b**2 == 1``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        h = math.hypot(self.a, self.b)
        if h == 0.0:
            raise ValueError("degenerate line normal (0, 0)")
        if abs(h - 1.0) > 1e-12:
            object.__setattr__(self, "a", self.a / h)
            object.__setattr__(self, "b", self.b / h)
            object.__setattr__(self, "c", self.c / h)

    @classmethod
    def through(cls, p, q) -> "Line":
        dx, dy = q[0] - p[0], q[1] - p[1]
        # normal points to the right of p -> q
        return cls(dy, -dx, dy * p[0] - dx * p[1])

    @classmethod
    def point_direction(cls, p, direction: float) -> "Line":
        return cls.through(p, (p[0] + math.cos(direction), p[1] + math.sin(direction)))

    @property
    def normal(self) -> Point2:
        return Point2(self.a, self.b)

    @property
    def direction(self) -> Point2:
        return Point2(-self.b, self.a)

    def signed_distance(self, p) -> float:
        return self.a * p[0] + self.b * p[1] - self.c

    def slope_form(self) -> tuple[float, float] | None:
        """``(lambda, mu)`` with ``y = lambda*x + mu``, or None if vertical."""
        if self.b == 0.0:
            return None
        return -self.a / self.b, self.c / self.b

    def project(self, p) -> Point2:
        d = self.signed_distance(p)
        return Point2(p[0] - d * self.a, p[1] - d * self.b)

    def ray_hit(self, origin, direction) -> float | None:
        """Parameter ``s`` with ``origin + s*direction`` on the line, if any."""
        den = self.a * direction[0] + self.b * direction[1]
        if den == 0.0:
            return None
        return (self.c - self.a * origin[0] - self.b * origin[1]) / den


@dataclass(frozen=True)
class Frame:
    """A rigid frame: world = origin + R(angle) @ local."""

    origin: Point2
    angle: float

    def to_frame(self, p) -> Point2:
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        dx, dy = p[0] - self.origin[0], p[1] - self.origin[1]
        return Point2(ca * dx + sa * dy, -sa * dx + ca * dy)

    def from_frame(self, p) -> Point2:
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        return Point2(self.origin[0] + ca * p[0] - sa * p[1], self.origin[1] + sa * p[0] + ca * p[1])

    def line_to_frame(self, line: Line) -> Line:
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        a = line.a * ca + line.b * sa
        b = -line.a * sa + line.b * ca
        return Line(a, b, line.c - line.a * self.origin[0] - line.b * self.origin[1])


class Containment(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


# vertices closer than this (relative to the bounding box) to the line through
# their neighbours are dropped from hulls
_HULL_TOL = 1e-12


def _span(points) -> float:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def _strict_cw(a, b, c, tol: float) -> bool:
    """``b`` turns clockwise and lies farther than ``tol`` from the line ``ac``."""
    return orient(a, b, c) < -tol * dist(a, c)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices in clockwise order."""

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise DegenerateInput("a polygon needs at least three vertices")
        scale = _span(vs)
        if scale == 0.0:
            raise DegenerateInput("all vertices coincide")
        for i in range(n):
            if not _strict_cw(vs[i - 1], vs[i], vs[(i + 1) % n], _HULL_TOL * scale):
                raise ValueError(f"vertex {i} is not a strict clockwise turn")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point2:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> tuple[Point2, Point2]:
        return self.vertex(i), self.vertex(i + 1)

    def edge_line(self, i: int) -> Line:
        """Supporting line of edge ``i``; its normal points out of the polygon."""
        p, q = self.edge(i)
        # clockwise order: interior is to the right, so the left normal is outward
        return Line(-(q[1] - p[1]), q[0] - p[0], -(q[1] - p[1]) * p[0] + (q[0] - p[0]) * p[1])

    def edge_angle(self, i: int) -> float:
        p, q = self.edge(i)
        return math.atan2(q[1] - p[1], q[0] - p[0])

    def area(self) -> float:
        return -shoelace(self.vertices)

    def centroid(self) -> Point2:
        vs = self.vertices
        a = cx = cy = 0.0
        for i in range(len(vs)):
            x0, y0 = vs[i]
            x1, y1 = vs[(i + 1) % len(vs)]
            w = x0 * y1 - x1 * y0
            a += w
            cx += (x0 + x1) * w
            cy += (y0 + y1) * w
        return Point2(cx / (3.0 * a), cy / (3.0 * a))

    def diameter(self) -> float:
        """Largest vertex-to-vertex distance (rotating calipers, O(n))."""
        vs = self.vertices
        n = len(vs)
        best = 0.0
        j = 1
        for i in range(n):
            p, q = vs[i], vs[(i + 1) % n]
            # advance the antipodal pointer while the area against edge i grows
            while abs(orient(p, q, vs[(j + 1) % n])) > abs(orient(p, q, vs[j])):
                j = (j + 1) % n
            best = max(best, dist(p, vs[j]), dist(q, vs[j]))
        return best

    def interior_angle(self, i: int) -> float:
        v = self.vertex(i)
        return angle_between(self.vertex(i - 1) - v, self.vertex(i + 1) - v)


def convex_hull(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Clockwise strictly convex hull (monotone chain).

    Collinear boundary points are dropped. Raises :class:`DegenerateInput` for
    fewer than three distinct points or a collinear input.
    """
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) < 3:
        raise DegenerateInput("need at least three distinct points")
    tol = _HULL_TOL * _span(pts)

    def chain(seq):
        out: list[Point2] = []
        for p in seq:
            # exact signs here; near-collinear vertices are removed afterwards
            while len(out) >= 2 and orient(out[-2], out[-1], p) >= 0.0:
                out.pop()
            out.append(p)
        return out

    upper = chain(pts)
    lower = chain(reversed(pts))
    hull = upper[:-1] + lower[:-1]
    # dropping a vertex of a convex polygon keeps it convex
    changed = True
    while changed and len(hull) >= 3:
        changed = False
        for i in range(len(hull)):
            if not _strict_cw(hull[i - 1], hull[i], hull[(i + 1) % len(hull)], tol):
                del hull[i]
                changed = True
                break
    if len(hull) < 3:
        raise DegenerateInput("input points are collinear")
    return ConvexPolygon(tuple(hull))


def signed_edge_distances(p, poly: ConvexPolygon) -> list[float]:
    """Signed distance of ``p`` to every edge line (positive = outside)."""
    return [poly.edge_line(i).signed_distance(p) for i in range(poly.n)]


def point_in_polygon(p, poly: ConvexPolygon, eps: float = EPS_GEOM) -> Containment:
    tol = eps * poly.diameter()
    worst = max(signed_edge_distances(p, poly))
    if worst > tol:
        return Containment.OUTSIDE
    if worst >= -tol:
        return Containment.BOUNDARY
    return Containment.INSIDE


def tangent_supports(poly: ConvexPolygon, phi: float, side: str = "left", eps: float = EPS_GEOM) -> int:
    """Index of the vertex where a line of direction ``phi`` supports ``poly``.

    ``side`` says where the polygon lies relative to the directed line. When an
    edge is parallel to ``phi`` both its endpoints support the line and the
    clockwise-first one (the edge's start) is returned.
    """
    d = unit(phi)
    sign = 1.0 if side == "left" else -1.0
    vals = [sign * cross(d, v) for v in poly.vertices]
    lo = min(vals)
    tol = eps * poly.diameter()
    n = poly.n
    tied = [i for i in range(n) if vals[i] <= lo + tol]
    if len(tied) == 1:
        return tied[0]
    tied_set = set(tied)
    for i in tied:
        if (i - 1) % n not in tied_set:
            return i
    return tied[0]


def polygon_from_ccw(points: Sequence[Sequence[float]]) -> ConvexPolygon:
    return ConvexPolygon(tuple(as_point(p) for p in reversed(points)))
