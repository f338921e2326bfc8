"""Event points of the clockwise sweep of the apex around the cloud.

While the apex moves along the cloud, the midpoint ``m`` of the optimal third
side either stays on a hull vertex ``v_j`` (the third side pivots around it)
or slides along an edge ``e_j`` (the third side is that edge's line). The
locus only ever advances: vertex ``j``, then edge ``j``, then vertex ``j+1``.
The sweep records where each change happens, plus the arc junctions, and cuts
the cloud into sections of constant locus.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cloud import CloudArc, OmegaCloud, wedge_at
from .geometry import ConvexPolygon, Frame, Line, Point2, angle_between, cot, dist
from .roots import real_roots
from .wedge import CandidateTriangle, Locus, OmegaWedge, Provenance, fixed_wedge_walk

THETA_TOL = 1e-9
_MERGE_TOL = 1e-9
_VERTICAL_TOL = 1e-12


class EventKind(str, enum.Enum):
    ARC_JUNCTION = "ArcJunction"
    MIDPOINT_ENTERS_VERTEX = "MidpointEntersVertex"
    MIDPOINT_LEAVES_VERTEX = "MidpointLeavesVertex"


@dataclass(frozen=True)
class EventPoint:
    position: Point2
    arc_index: int
    theta: float
    kinds: frozenset[EventKind]
    midpoint_locus: Locus

    @property
    def kind(self) -> EventKind:
        # most informative tag first
        for k in (EventKind.MIDPOINT_ENTERS_VERTEX, EventKind.MIDPOINT_LEAVES_VERTEX):
            if k in self.kinds:
                return k
        return EventKind.ARC_JUNCTION


@dataclass(frozen=True)
class SweepSection:
    index: int
    arc: CloudArc
    interval: tuple[float, float]
    midpoint_mode: Locus

    @property
    def arc_index(self) -> int:
        return self.arc.index


@dataclass(frozen=True)
class SweepResult:
    events: list[EventPoint]
    sections: list[SweepSection]
    initial: CandidateTriangle


def next_locus(loc: Locus, n: int) -> Locus:
    if loc.kind == "vertex":
        return Locus("edge", loc.index)
    return Locus("vertex", (loc.index + 1) % n)


def locus_rank(loc: Locus) -> int:
    """Position of the locus in the cyclic order vertex 0, edge 0, vertex 1, ..."""
    return 2 * loc.index + (1 if loc.kind == "edge" else 0)


def initial_midpoint(poly: ConvexPolygon, cloud: OmegaCloud, omega: float):
    """Fixed-wedge optimum at the start of the first arc and the forward locus of ``m``."""
    arc = cloud[0]
    wedge = wedge_at(arc, arc.theta_range[1])
    res = fixed_wedge_walk(poly, wedge)
    loc = res.locus
    if res.edge_position is not None and loc.kind == "vertex" and res.edge_position < 0.5:
        # m at the start of an edge flush with the third side: it slides along that edge next
        loc = Locus("edge", loc.index)
    tri = CandidateTriangle(
        wedge.apex, res.b, res.c, omega, Provenance.FIXED_WEDGE,
        locus=loc, section=0, param=arc.theta_range[1],
    )
    return wedge, tri, loc


def _frame_line(arc: CloudArc, line: Line) -> Line:
    return arc.frame.line_to_frame(line)


def midpoint_quadratic(lam: float, mu: float, r: float, omega: float, s: float) -> list[float]:
    """Coefficients in ``X = cot(theta)`` for the midpoint of the cut on ``y = lam*x + mu`` to sit at abscissa ``s``."""
    sn, cs = math.sin(omega), math.cos(omega)
    a = 2 * r * sn * sn * lam + 2 * mu * cs * lam - mu * sn - 2 * s * lam * sn + 2 * s * lam * lam * cs
    b = (2 * r * sn * cs * lam - 2 * r * sn * sn - 2 * mu * cs - 2 * mu * sn * lam + 2 * s * sn
         - 4 * s * cs * lam - 2 * s * lam * lam * sn)
    c = mu * sn - 2 * r * sn * cs + 2 * s * cs + 2 * s * lam * sn
    return [a, b, c]


def midpoint_quadratic_vertical(s: float, t: float, r: float, omega: float) -> list[float]:
    """Same condition for the vertical line ``x = s`` with target point ``(s, t)``."""
    sn, cs = math.sin(omega), math.cos(omega)
    return [
        2 * r * sn * sn + 2 * t * cs - s * sn,
        2 * r * sn * cs - 2 * s * cs - 2 * t * sn,
        s * sn,
    ]


def _case_constraints(theta, alpha, beta, omega, lam, s, r, vertical, margin=1e-9) -> bool:
    if not (-margin <= theta <= math.pi - omega + margin):
        return False
    if not (beta - omega - margin < theta < math.pi - alpha + margin):
        return False
    if vertical:
        chord = 2 * r * math.sin(omega)
        if s <= 0.0:
            return theta < 0.5 * math.pi - omega + margin
        if s >= chord:
            return theta > 0.5 * math.pi - margin
        return False
    if lam < 0.0:
        # ray through w parallel to the line: use the branch inside (0, pi)
        return theta < math.pi + math.atan(lam) - omega + margin
    return theta > math.atan(lam) - margin


def _cut(wedge: OmegaWedge, line: Line, tol: float):
    """Intersections of ``line`` with both forward rays, or None."""
    q = wedge.apex
    h1 = line.ray_hit(q, wedge.d1)
    h2 = line.ray_hit(q, wedge.d2)
    if h1 is None or h2 is None or h1 <= tol or h2 <= tol:
        return None
    d1, d2 = wedge.d1, wedge.d2
    return Point2(q[0] + h1 * d1[0], q[1] + h1 * d1[1]), Point2(q[0] + h2 * d2[0], q[1] + h2 * d2[1])


def type23_on_arc(arc: CloudArc, edge_line: Line, v_j, check_constraints: bool = False) -> list[float]:
    """Parameters on ``arc`` where the cut along ``edge_line`` has midpoint ``v_j``."""
    if arc.degenerate:
        raise ValueError("type23_on_arc needs a proper arc")
    r, omega = arc.radius, arc.omega
    v = Point2(0.0, 0.0)
    w = Point2(2 * r * math.sin(omega), 0.0)
    fl = _frame_line(arc, edge_line)
    vj = arc.frame.to_frame(v_j)
    scale = arc.chord
    if dist(vj, v) <= 1e-12 * scale or dist(vj, w) <= 1e-12 * scale:
        return []
    alpha = angle_between(vj - v, w - v)
    beta = angle_between(vj - w, v - w)
    vertical = abs(fl.b) < _VERTICAL_TOL
    if vertical:
        s = fl.c / fl.a
        lam = math.inf
        coeffs = midpoint_quadratic_vertical(s, vj[1], r, omega)
    else:
        lam, mu = -fl.a / fl.b, fl.c / fl.b
        s = vj[0]
        coeffs = midpoint_quadratic(lam, mu, r, omega, s)
    try:
        xs = real_roots(coeffs)
    except ValueError:
        return []
    lo, hi = arc.theta_range
    out = []
    for x in xs:
        th = math.atan2(1.0, x)
        if not (lo - THETA_TOL <= th <= hi + THETA_TOL):
            continue
        th = min(max(th, lo), hi)
        if check_constraints and not _case_constraints(th, alpha, beta, omega, lam, s, r, vertical):
            continue
        if _valid_event(wedge_at(arc, th), edge_line, v_j, scale):
            out.append(th)
    return _dedupe(sorted(out))


def _valid_event(wedge: OmegaWedge, line: Line, v_j, scale: float) -> bool:
    tol = 1e-9 * scale
    if line.signed_distance(wedge.apex) >= -tol:
        return False
    cut = _cut(wedge, line, tol)
    if cut is None:
        return False
    b, c = cut
    m = Point2((b[0] + c[0]) / 2, (b[1] + c[1]) / 2)
    return dist(m, v_j) <= 1e-6 * scale


def _dedupe(xs: list[float]) -> list[float]:
    out: list[float] = []
    for x in xs:
        if not out or x - out[-1] > THETA_TOL:
            out.append(x)
    return out


def type23_at_vertex(q, edge_line: Line, v_j, omega: float):
    """Cut of ``edge_line`` with midpoint ``v_j`` seen from ``q`` under angle ``omega``.

    Returns ``(b, c)`` ordered so that turning from ``q->b`` to ``q->c`` is
    counter-clockwise, or None when ``q`` lies on the line.
    """
    d = edge_line.direction
    fr = Frame(Point2(*v_j), math.atan2(d[1], d[0]))
    s, t = fr.to_frame(q)
    if abs(t) <= 1e-12 * (1.0 + abs(s)):
        return None
    if t < 0.0:
        fr = Frame(fr.origin, fr.angle + math.pi)
        s, t = -s, -t
    sn = math.sin(omega)
    h = math.sqrt(s * s * sn * sn + t * t) / sn - t * cot(omega)
    return fr.from_frame((-h, 0.0)), fr.from_frame((h, 0.0))


def _vertex_event_phis(arc: CloudArc, edge_line: Line, v_j) -> list[float]:
    cut = type23_at_vertex(arc.start, edge_line, v_j, arc.omega)
    if cut is None:
        return []
    b, _ = cut
    phi = math.atan2(b[1] - arc.start[1], b[0] - arc.start[0])
    lo, hi = arc.theta_range
    # bring phi into the unwrapped range of the pivot
    phi = lo + (phi - lo) % (2 * math.pi)
    if phi > hi + THETA_TOL and phi - 2 * math.pi >= lo - THETA_TOL:
        phi -= 2 * math.pi
    if not (lo - THETA_TOL <= phi <= hi + THETA_TOL):
        return []
    phi = min(max(phi, lo), hi)
    wedge = OmegaWedge(arc.start, phi, arc.omega)
    if not _valid_event(wedge, edge_line, v_j, max(dist(arc.start, v_j), 1e-300)):
        return []
    return [phi]


def event_parameters(arc: CloudArc, poly: ConvexPolygon, loc: Locus) -> list[float]:
    """Parameters on ``arc`` where the locus ``loc`` ends."""
    j = loc.index
    line = poly.edge_line(j)
    target = poly.vertex(j) if loc.kind == "vertex" else poly.vertex(j + 1)
    if arc.degenerate:
        return _vertex_event_phis(arc, line, target)
    return type23_on_arc(arc, line, target)


def sweep(poly: ConvexPolygon, cloud: OmegaCloud, omega: float) -> SweepResult:
    """Events in clockwise order from the start of the first arc, and the sections between them."""
    _, init, loc = initial_midpoint(poly, cloud, omega)
    start_loc = loc
    n = poly.n
    events: list[EventPoint] = []
    sections: list[SweepSection] = []
    for arc in cloud:
        lo, hi = arc.theta_range
        _push(events, EventPoint(arc.start, arc.index, hi, frozenset({EventKind.ARC_JUNCTION}), loc), cloud)
        cur = hi
        for _ in range(2 * n + 2):
            roots = [t for t in event_parameters(arc, poly, loc) if t <= cur + THETA_TOL]
            if not roots:
                break
            th = min(max(roots), cur)
            if cur - th > _MERGE_TOL:
                sections.append(SweepSection(len(sections), arc, (th, cur), loc))
            kind = EventKind.MIDPOINT_ENTERS_VERTEX if loc.kind == "vertex" else EventKind.MIDPOINT_LEAVES_VERTEX
            loc = next_locus(loc, n)
            pos = arc.start if arc.degenerate else wedge_at(arc, th).apex
            _push(events, EventPoint(pos, arc.index, th, frozenset({kind}), loc), cloud)
            cur = th
        if cur - lo > _MERGE_TOL:
            sections.append(SweepSection(len(sections), arc, (lo, cur), loc))
    last = cloud[len(cloud) - 1]
    _push(events, EventPoint(last.end, last.index, last.theta_range[0], frozenset({EventKind.ARC_JUNCTION}), loc), cloud)
    if loc != start_loc:
        raise RuntimeError(f"sweep did not close: started at {start_loc}, ended at {loc}")
    return SweepResult(events, sections, init)


def _push(events: list[EventPoint], ev: EventPoint, cloud: OmegaCloud) -> None:
    """Append ``ev``, merging it with the previous event when both sit at the same place."""
    if events:
        prev = events[-1]
        same = prev.arc_index == ev.arc_index and abs(prev.theta - ev.theta) <= _MERGE_TOL
        if prev.arc_index == ev.arc_index - 1 and EventKind.ARC_JUNCTION in ev.kinds:
            # an event at the very end of the previous arc is this junction
            same = abs(prev.theta - cloud[prev.arc_index].theta_range[0]) <= _MERGE_TOL
        if same:
            keep = ev if EventKind.ARC_JUNCTION in ev.kinds else prev
            events[-1] = EventPoint(keep.position, keep.arc_index, keep.theta, prev.kinds | ev.kinds, ev.midpoint_locus)
            return
    events.append(ev)
