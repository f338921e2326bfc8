"""The apex locus of the enclosing wedge as it turns once around the polygon.

The wedge is parametrised by the direction ``phi`` of its first ray. Turning
the wedge clockwise means decreasing ``phi``; over one full turn each of the two
support vertices walks once around the polygon, and between two consecutive
support changes the apex either rides a circular arc (two distinct supports,
inscribed angle ``omega`` over their chord) or stays pinned at a single hull
vertex while the wedge turns around that corner.

Non-degenerate arcs carry the arc parameter ``theta = angle(q, v, w)`` measured
at the left support ``v`` from the chord ``v -> w``; ``theta`` decreases as the
sweep advances. Degenerate arcs reuse ``theta`` for the wedge direction
``phi`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OutOfRange
from .geometry import ConvexPolygon, Frame, Point2, cross, dist, unit, wrap_angle
from .wedge import OmegaWedge

_MERGE_TOL = 1e-12
_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class CloudArc:
    index: int
    start: Point2
    end: Point2
    support_left: int
    support_right: int
    center: Point2
    radius: float
    frame: Frame
    theta_range: tuple[float, float]
    phi_range: tuple[float, float]
    omega: float
    degenerate: bool

    @property
    def phi_shift(self) -> float:
        """Offset between sweep direction ``phi`` and the arc parameter."""
        return self.phi_range[0] - self.theta_range[1]

    def theta_to_phi(self, theta: float) -> float:
        return theta + self.phi_shift

    def phi_to_theta(self, phi: float) -> float:
        return phi - self.phi_shift

    @property
    def chord(self) -> float:
        return 2.0 * self.radius * math.sin(self.omega)

    def contains(self, theta: float, tol: float = _RANGE_TOL) -> bool:
        lo, hi = self.theta_range
        return lo - tol <= theta <= hi + tol


@dataclass(frozen=True)
class OmegaCloud:
    arcs: tuple[CloudArc, ...]
    omega: float
    polygon: ConvexPolygon
    phi_start: float

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __getitem__(self, i: int) -> CloudArc:
        return self.arcs[i]

    @property
    def n_prime(self) -> int:
        """Number of genuine circular arcs (corner pivots are not counted)."""
        return sum(1 for a in self.arcs if not a.degenerate)

    @property
    def proper_arcs(self) -> list[CloudArc]:
        return [a for a in self.arcs if not a.degenerate]


def _support_value(poly: ConvexPolygon, i: int, d, sign: float) -> float:
    return sign * cross(d, poly.vertices[i % poly.n])


def _advance(poly: ConvexPolygon, i: int, d, sign: float) -> int:
    n = poly.n
    for _ in range(n):
        if _support_value(poly, i + 1, d, sign) < _support_value(poly, i, d, sign):
            i = (i + 1) % n
        else:
            break
    return i


def critical_directions(poly: ConvexPolygon, omega: float) -> list[float]:
    """Values of ``phi`` in ``[0, 2pi)`` where one of the rays lies flush with an edge."""
    out = []
    for i in range(poly.n):
        a = poly.edge_angle(i)
        out.append((a + math.pi) % (2.0 * math.pi))
        out.append((a - omega) % (2.0 * math.pi))
    return out


def build_cloud(poly: ConvexPolygon, omega: float) -> OmegaCloud:
    """Cloud of the polygon for the fixed angle ``omega``, arcs in clockwise order.

    The cycle starts at the beginning of the piece containing the wedge with
    ``phi = 0``; it is unique only up to that choice of starting piece.
    """
    two_pi = 2.0 * math.pi
    crit = critical_directions(poly, omega)
    phi0 = min(crit)
    breaks = sorted({phi0 - ((phi0 - c) % two_pi) for c in crit}, reverse=True)
    merged = [breaks[0]]
    for b in breaks[1:]:
        if merged[-1] - b > _MERGE_TOL:
            merged.append(b)
    if phi0 - two_pi - merged[-1] > -_MERGE_TOL and len(merged) > 1:
        merged.pop()
    merged.append(phi0 - two_pi)

    arcs: list[CloudArc] = []
    sl = sr = None
    for k in range(len(merged) - 1):
        p_from, p_to = merged[k], merged[k + 1]
        mid = 0.5 * (p_from + p_to)
        d1, d2 = unit(mid), unit(mid + omega)
        if sl is None:
            vals = [cross(d1, v) for v in poly.vertices]
            sl = vals.index(min(vals))
            vals = [-cross(d2, v) for v in poly.vertices]
            sr = vals.index(min(vals))
        else:
            sl = _advance(poly, sl, d1, 1.0)
            sr = _advance(poly, sr, d2, -1.0)
        arcs.append(_make_arc(poly, omega, len(arcs), sl, sr, p_from, p_to))
    return OmegaCloud(tuple(arcs), omega, poly, phi0)


def _make_arc(poly, omega, index, sl, sr, p_from, p_to) -> CloudArc:
    if sl == sr:
        v = poly.vertex(sl)
        return CloudArc(
            index, v, v, sl, sr, v, 0.0, Frame(v, 0.0),
            (p_to, p_from), (p_from, p_to), omega, True,
        )
    v, w = poly.vertex(sl), poly.vertex(sr)
    rho = math.atan2(w[1] - v[1], w[0] - v[0])
    chord = dist(v, w)
    r = chord / (2.0 * math.sin(omega))
    mid = 0.5 * (p_from + p_to)
    th_mid = wrap_angle(mid + math.pi - rho)
    th_hi = th_mid + (p_from - mid)
    th_lo = th_mid - (mid - p_to)
    th_hi = min(th_hi, math.pi - omega)
    th_lo = max(th_lo, 0.0)
    frame = Frame(v, rho)
    center = frame.from_frame((r * math.sin(omega), r * math.cos(omega)))
    proto = CloudArc(index, v, v, sl, sr, center, r, frame, (th_lo, th_hi), (p_from, p_to), omega, False)
    return CloudArc(
        index, arc_point(proto, th_hi), arc_point(proto, th_lo), sl, sr, center, r, frame,
        (th_lo, th_hi), (p_from, p_to), omega, False,
    )


def arc_point_local(r: float, omega: float, theta: float) -> Point2:
    k = 2.0 * r * math.sin(theta + omega)
    return Point2(k * math.cos(theta), k * math.sin(theta))


def arc_point(arc: CloudArc, theta: float) -> Point2:
    """Apex position on the arc for parameter ``theta``."""
    if arc.degenerate:
        if not arc.contains(theta):
            raise OutOfRange(f"rotation {theta} outside {arc.theta_range}")
        return arc.start
    if not arc.contains(theta):
        raise OutOfRange(f"theta {theta} outside {arc.theta_range}")
    return arc.frame.from_frame(arc_point_local(arc.radius, arc.omega, theta))


def wedge_at(arc: CloudArc, theta: float, poly: ConvexPolygon | None = None) -> OmegaWedge:
    """Enclosing wedge with its apex on ``arc`` at parameter ``theta``."""
    q = arc_point(arc, theta)
    return OmegaWedge(q, arc.theta_to_phi(theta), arc.omega, arc.support_left, arc.support_right)
