"""Real roots of real polynomials of degree at most four.

Closed forms are used throughout (Cardano / trigonometric cubic and Ferrari's
resolvent for the quartic), followed by a few damped Newton steps. If the
closed form loses a root to cancellation it is recovered by bisection on the
brackets delimited by the critical points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateAllZero

_LEAD_TOL = 1e-13
_DISC_TOL = 1e-14
_SAME_ROOT = 1e-7


@dataclass(frozen=True)
class PolyReal:
    """Polynomial with real coefficients, highest degree first."""

    coefficients: tuple[float, ...]

    def __init__(self, coefficients: Sequence[float]):
        object.__setattr__(self, "coefficients", tuple(float(c) for c in coefficients))

    @property
    def degree(self) -> int:
        return len(self.trimmed().coefficients) - 1

    def trimmed(self) -> "PolyReal":
        cs = self.coefficients
        big = max((abs(c) for c in cs), default=0.0)
        if big == 0.0:
            return PolyReal([0.0])
        i = 0
        while i < len(cs) - 1 and abs(cs[i]) <= _LEAD_TOL * big:
            i += 1
        return PolyReal(cs[i:])

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyReal":
        cs = self.coefficients
        d = len(cs) - 1
        if d == 0:
            return PolyReal([0.0])
        return PolyReal([c * (d - i) for i, c in enumerate(cs[:-1])])

    def residual_bound(self, x: float) -> float:
        """Tolerance on ``|p(x)|`` for ``x`` to be accepted as a root."""
        big = max(abs(c) for c in self.coefficients)
        return 1e-9 * big * max(1.0, abs(x)) ** (len(self.coefficients) - 1)


def _quadratic(b: float, c: float) -> list[float]:
    """Real roots of ``x^2 + b x + c``."""
    disc = b * b - 4.0 * c
    scale = max(b * b, abs(4.0 * c))
    if disc < -_DISC_TOL * scale:
        return []
    if disc <= _DISC_TOL * scale:
        return [-b / 2.0, -b / 2.0]
    sq = math.sqrt(disc)
    # avoid cancellation: compute the larger-magnitude root first
    q = -0.5 * (b + math.copysign(sq, b))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q, c / q])


def _cubic(a: float, b: float, c: float) -> list[float]:
    """Real roots of ``x^3 + a x^2 + b x + c``."""
    shift = a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    h = (q / 2.0) ** 2 + (p / 3.0) ** 3
    scale = (q / 2.0) ** 2 + abs(p / 3.0) ** 3
    if scale == 0.0:
        return [-shift] * 3
    if abs(h) <= _DISC_TOL * scale:
        u = math.copysign(abs(q / 2.0) ** (1.0 / 3.0), -q)
        return sorted([2.0 * u - shift, -u - shift, -u - shift])
    if h > 0.0:
        u = math.copysign((abs(q / 2.0) + math.sqrt(h)) ** (1.0 / 3.0), -q)
        t = u - p / (3.0 * u)
        return [t - shift]
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    ang = math.acos(max(-1.0, min(1.0, arg))) / 3.0
    return sorted(m * math.cos(ang - 2.0 * math.pi * k / 3.0) - shift for k in range(3))


def _quartic(a: float, b: float, c: float, d: float) -> list[float]:
    """Real roots of ``x^4 + a x^3 + b x^2 + c x + d`` (Ferrari)."""
    shift = a / 4.0
    p = b - 3.0 * a * a / 8.0
    q = c - a * b / 2.0 + a ** 3 / 8.0
    r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a ** 4 / 256.0
    scale = max(p * p, abs(q) ** (4.0 / 3.0), abs(r), 1e-300)
    if abs(q) ** (4.0 / 3.0) <= _DISC_TOL * scale:
        out = []
        for z in _quadratic(p, r):
            if z >= 0.0:
                out += [-math.sqrt(z), math.sqrt(z)]
            elif z >= -_DISC_TOL * math.sqrt(scale):
                out += [0.0, 0.0]
        return sorted(y - shift for y in out)
    # resolvent: 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0, take its largest root
    res = PolyReal([1.0, p, p * p / 4.0 - r, -q * q / 8.0])
    m = max(_cubic(p, p * p / 4.0 - r, -q * q / 8.0))
    m = _polish(res, m)
    if m <= 0.0:
        m = max(m, 1e-300)
    s = math.sqrt(2.0 * m)
    k = q / (2.0 * s)
    out = _quadratic(-s, p / 2.0 + m + k) + _quadratic(s, p / 2.0 + m - k)
    return sorted(y - shift for y in out)


def _polish(p: PolyReal, x: float, steps: int = 3) -> float:
    dp = p.derivative()
    fx = p(x)
    for _ in range(steps):
        if fx == 0.0:
            break
        g = dp(x)
        if g == 0.0:
            break
        step = fx / g
        # damped Newton: halve until the residual does not grow
        for _ in range(8):
            y = x - step
            fy = p(y)
            if abs(fy) <= abs(fx):
                x, fx = y, fy
                break
            step /= 2.0
        else:
            break
    return x


def _cauchy_bound(p: PolyReal) -> float:
    cs = p.coefficients
    return 1.0 + max(abs(c / cs[0]) for c in cs[1:])


def _bisect(p: PolyReal, lo: float, hi: float) -> float:
    flo = p(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = p(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bracket_roots(p: PolyReal, known: Sequence[float] = ()) -> list[float]:
    """Real roots missing from ``known``, by bisection between consecutive critical points."""
    if p.degree == 1:
        return [] if known else [-p.coefficients[1] / p.coefficients[0]]
    crit = sorted(set(_monic_roots(p.derivative().trimmed())))
    bound = _cauchy_bound(p)
    knots = [-bound] + [x for x in crit if -bound < x < bound] + [bound]
    vals = [p(x) for x in knots]
    out = []
    crossed = []
    for i in range(len(knots) - 1):
        lo, hi = knots[i], knots[i + 1]
        flo, fhi = vals[i], vals[i + 1]
        hit = flo == 0.0 or ((flo < 0.0) != (fhi < 0.0) and fhi != 0.0)
        crossed.append(hit)
        if not hit or any(lo - _SAME_ROOT * max(1.0, abs(x)) <= x <= hi + _SAME_ROOT * max(1.0, abs(x)) for x in known):
            continue
        out.append(lo if flo == 0.0 else _bisect(p, lo, hi))
    # a critical point with no sign change on either side may be a touching root
    for i, x in enumerate(knots[1:-1]):
        if not crossed[i] and not crossed[i + 1] and abs(vals[i + 1]) <= p.residual_bound(x):
            if all(abs(x - y) > _SAME_ROOT * max(1.0, abs(x)) for y in known):
                out.append(x)
    return sorted(out)


def _monic_roots(p: PolyReal) -> list[float]:
    cs = p.coefficients
    deg = len(cs) - 1
    if deg <= 0:
        return []
    m = [c / cs[0] for c in cs[1:]]
    if deg == 1:
        return [-m[0]]
    if deg == 2:
        return _quadratic(*m)
    if deg == 3:
        return _cubic(*m)
    if deg == 4:
        return _quartic(*m)
    raise ValueError(f"degree {deg} > 4 is not supported")


def real_roots(p: PolyReal | Sequence[float]) -> list[float]:
    """Sorted real roots of ``p`` with multiplicity.

    Raises :class:`DegenerateAllZero` for the zero polynomial. A nonzero
    constant has no roots.
    """
    if not isinstance(p, PolyReal):
        p = PolyReal(p)
    if all(c == 0.0 for c in p.coefficients):
        raise DegenerateAllZero("all coefficients are zero")
    p = p.trimmed()
    if p.degree > 4:
        raise ValueError(f"degree {p.degree} > 4 is not supported")
    cs = list(p.coefficients)
    zeros = 0
    while len(cs) > 1 and cs[-1] == 0.0:
        cs.pop()
        zeros += 1
    core = PolyReal([c / cs[0] for c in cs])
    if core.degree <= 0:
        return [0.0] * zeros
    roots = [_polish(core, x) for x in _monic_roots(core)]
    roots = [x for x in roots if math.isfinite(x) and abs(core(x)) <= core.residual_bound(x)]
    # recover anything the closed form lost to cancellation
    roots += _bracket_roots(core, roots)
    return sorted(roots + [0.0] * zeros)
