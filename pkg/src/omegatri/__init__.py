"""Minimum-area triangles with a fixed apex angle enclosing a planar point set."""

from .cloud import CloudArc, OmegaCloud, arc_point, build_cloud, wedge_at
from .errors import (
    DegenerateAllZero,
    DegenerateInput,
    EmptyInterval,
    NoSolution,
    NotEnclosing,
    OmegaOutOfRange,
    OmegaTriError,
    OnBoundary,
    OutOfRange,
)
from .geometry import ConvexPolygon, Frame, Line, Point2, convex_hull
from .optimize import (
    ArcVertexGeometry,
    min_arc_on_edge,
    min_arc_pinned_vertex,
    min_vertex_on_edge,
    min_vertex_pinned_vertex,
)
from .pipeline import OracleResult, SolveResult, oracle_min, solve
from .roots import PolyReal, real_roots
from .sweep import EventKind, EventPoint, SweepSection, initial_midpoint, sweep, type23_at_vertex, type23_on_arc
from .wedge import (
    CandidateTriangle,
    OmegaWedge,
    Provenance,
    enclosing_wedge_at,
    min_triangle_fixed_wedge,
    split_through_point,
)

__all__ = [
    "ArcVertexGeometry", "CandidateTriangle", "CloudArc", "ConvexPolygon", "DegenerateAllZero",
    "DegenerateInput", "EmptyInterval", "EventKind", "EventPoint", "Frame", "Line", "NoSolution",
    "NotEnclosing", "OmegaCloud", "OmegaOutOfRange", "OmegaTriError", "OmegaWedge", "OnBoundary",
    "OracleResult", "OutOfRange", "Point2", "PolyReal", "Provenance", "SolveResult", "SweepSection",
    "arc_point", "build_cloud", "convex_hull", "enclosing_wedge_at", "initial_midpoint",
    "min_arc_on_edge", "min_arc_pinned_vertex", "min_triangle_fixed_wedge", "min_vertex_on_edge",
    "min_vertex_pinned_vertex", "oracle_min", "real_roots", "solve", "split_through_point", "sweep",
    "type23_at_vertex", "type23_on_arc", "wedge_at",
]
