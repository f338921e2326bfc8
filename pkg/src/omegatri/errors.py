"""Exception hierarchy shared by every module of the package."""


class OmegaTriError(Exception):
    """Base class for all errors raised by omegatri."""


class DegenerateInput(OmegaTriError, ValueError):
    """Fewer than three distinct points, or all points collinear."""


class OmegaOutOfRange(OmegaTriError, ValueError):
    """The fixed angle is outside the supported open interval."""


class OnBoundary(OmegaTriError, ValueError):
    """A point that must be strictly inside a wedge lies on one of its rays."""


class NotEnclosing(OmegaTriError, ValueError):
    """A wedge does not enclose the polygon (tangency or containment fails)."""


class OutOfRange(OmegaTriError, ValueError):
    """An arc parameter lies outside the arc's parameter interval."""


class EmptyInterval(OmegaTriError, ValueError):
    """An optimisation interval is empty or reversed."""


class NoSolution(OmegaTriError, ValueError):
    """The configuration admits no valid triangle."""


class DegenerateAllZero(OmegaTriError, ValueError):
    """A polynomial whose coefficients are all zero."""
