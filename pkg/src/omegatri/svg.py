"""Plain SVG rendering of a solve result: hull, cloud arcs, optima and events."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .cloud import arc_point
from .pipeline import SolveResult

_STYLE = """
.hull { fill: #e8eef7; stroke: #1f3b73; stroke-width: 1.5; }
.cloud-arc { fill: none; stroke: #c0392b; stroke-width: 1.2; }
.optimum { fill: none; stroke: #27ae60; stroke-width: 1.5; stroke-dasharray: 4 2; }
.event { fill: #8e44ad; }
"""


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def render_svg(result: SolveResult, width: int = 640, samples: int = 32) -> str:
    """SVG document with one ``path.cloud-arc`` per proper arc and one ``polygon.optimum`` per optimum."""
    sim = result.similarity
    arcs = []
    for arc in result.cloud.proper_arcs:
        lo, hi = arc.theta_range
        pts = [sim.to_world(arc_point(arc, hi - (hi - lo) * k / samples)) for k in range(samples + 1)]
        arcs.append(pts)
    hull = list(result.hull.vertices)
    tris = [list(t.vertices()) for t in result.optima]
    every = hull + [p for a in arcs for p in a] + [p for t in tris for p in t]
    xs = [p[0] for p in every]
    ys = [p[1] for p in every]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = 0.05 * span
    scale = width / (span + 2 * pad)
    height = int(round((y1 - y0 + 2 * pad) * scale)) or width

    def tx(p) -> str:
        # flip y so the picture has the usual orientation
        return f"{_fmt((p[0] - x0 + pad) * scale)},{_fmt((y1 + pad - p[1]) * scale)}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<style>{_STYLE}</style>",
        f'<polygon class="hull" points="{" ".join(tx(p) for p in hull)}"/>',
    ]
    for i, pts in enumerate(arcs):
        d = "M " + " L ".join(tx(p) for p in pts)
        parts.append(f'<path class="cloud-arc" data-arc={quoteattr(str(i))} d="{d}"/>')
    for t, tri in zip(result.optima, tris):
        parts.append(
            f'<polygon class="optimum" data-provenance={quoteattr(t.provenance.value)} '
            f'points="{" ".join(tx(p) for p in tri)}"/>'
        )
    for e in result.events:
        cx, cy = tx(e.position).split(",")
        parts.append(f'<circle class="event" cx="{cx}" cy="{cy}" r="2.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
