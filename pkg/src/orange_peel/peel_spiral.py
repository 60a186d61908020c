"""The flattened orange-peel spiral and sphere-strip geometry.

A unit sphere is peeled along a spiral strip of width ``1/N``. Parameterised
by arclength ``t`` in ``[-a, a]`` with ``a = 2*pi*N``, the point on the
sphere sits at height ``s = t/a``. The flattened curve has signed curvature
``t / sqrt(a**2 - t**2)`` (zero at the equator, infinite at the poles),
tangent angle ``-sqrt(a**2 - t**2)``, and

    z(t) = x(t) + i y(t) = integral_0^t exp(-i sqrt(a**2 - u**2)) du.

Near the poles the phase rate blows up, so within 1% of ``|u| = a`` the
integral is taken in ``u = a*sin(theta)``, where the integrand
``a*cos(theta) * exp(-i*a*cos(theta))`` is smooth.

The curve is the single line given by the integral; which line inside the
physical strip (edge or centre) it follows is not modelled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import CurveFrame, PlanePoint, SampledCurve
from .quadrature import QuadratureSpec, integrate_oscillatory

__all__ = [
    "PeelParams",
    "SphereStrip",
    "POLE_FRACTION",
    "SAMPLE_CLIP",
    "height",
    "curvature",
    "phase",
    "peel_point",
    "peel_points",
    "peel_frame",
    "sample_peel",
    "strip_area",
    "parallel_perimeter",
    "strip_width",
    "total_length",
]

#: panels beyond this fraction of ``a`` use the ``u = a sin(theta)`` substitution
POLE_FRACTION = 0.99
#: relative clipping of the sampled domain, ``delta = a * SAMPLE_CLIP``
SAMPLE_CLIP = 1e-9


@dataclass(frozen=True)
class PeelParams:
    """Peel with ``N`` windings; strip width ``1/N`` on a unit sphere.

    ``N`` may be any positive real for curve generation.
    """

    N: float
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if isinstance(self.N, bool) or not (math.isfinite(self.N) and self.N > 0):
            raise ValueError(f"N must be a positive finite number, got {self.N!r}")

    @property
    def a(self) -> float:
        """Half-length of the parameter domain, ``2*pi*N``."""
        return 2.0 * math.pi * self.N


@dataclass(frozen=True)
class SphereStrip:
    """Zone of the unit sphere between heights ``h1 <= h2``."""

    h1: float
    h2: float

    def __post_init__(self):
        if not (-1.0 <= self.h1 <= self.h2 <= 1.0):
            raise ValueError(f"need -1 <= h1 <= h2 <= 1, got ({self.h1!r}, {self.h2!r})")


def _radicand(a, t):
    # a**2 - t**2 without cancellation near the poles
    return (a - t) * (a + t)


def _check_domain(t: float, a: float, closed: bool = True) -> float:
    t = float(t)
    if math.isnan(t):
        raise ValueError("t is NaN")
    if abs(t) > a or (not closed and abs(t) == a):
        bound = "<=" if closed else "<"
        raise ValueError(f"need |t| {bound} 2*pi*N = {a!r}, got t={t!r}")
    return t


def height(t: float, p: PeelParams) -> float:
    """Height ``t / (2 pi N)`` on the sphere of the point reached at time ``t``."""
    t = _check_domain(t, p.a)
    return t / p.a


def curvature(t: float, p: PeelParams) -> float:
    """Signed curvature ``t / sqrt(a**2 - t**2)``; undefined at the poles."""
    a = p.a
    t = _check_domain(t, a, closed=False)
    return t / math.sqrt(_radicand(a, t))


def phase(t: float, p: PeelParams) -> float:
    """Tangent angle ``-sqrt(a**2 - t**2)`` of the flattened spiral."""
    a = p.a
    t = _check_domain(t, a)
    return -math.sqrt(_radicand(a, abs(t)))


def _increment(a: float, lo: float, hi: float, spec: QuadratureSpec) -> complex:
    """``integral_lo^hi exp(-i sqrt(a^2-u^2)) du`` for ``0 <= lo <= hi <= a``."""
    if lo >= hi:
        return 0j
    total = 0j
    u_switch = POLE_FRACTION * a
    if lo < u_switch:
        b = min(hi, u_switch)
        res = integrate_oscillatory(
            lambda u: -np.sqrt(_radicand(a, u)),
            lambda u: u / math.sqrt(_radicand(a, u)),
            lo,
            b,
            spec,
        )
        total += res.value
    if hi > u_switch:
        th_lo = math.asin(min(max(lo, u_switch) / a, 1.0))
        th_hi = math.asin(min(hi / a, 1.0))
        res = integrate_oscillatory(
            lambda th: -a * np.cos(th),
            lambda th: a * math.sin(th),
            th_lo,
            th_hi,
            spec,
            amplitude=lambda th: a * np.cos(th),
        )
        total += res.value
    return total


def peel_points(p: PeelParams, ts) -> np.ndarray:
    """Peel-spiral points at the parameters ``ts`` as a complex array.

    The distinct values of ``|t|`` are visited in increasing order and each
    point is the previous one plus the integral over the gap, so the total
    work is proportional to the number of points. Negative parameters are
    exact negations of their mirror images.
    """
    a = p.a
    ts = np.asarray(ts, dtype=float)
    if ts.size and (np.isnan(ts).any() or np.abs(ts).max() > a):
        raise ValueError(f"all parameters must satisfy |t| <= 2*pi*N = {a!r}")
    mags, inverse = np.unique(np.abs(ts), return_inverse=True)
    values = np.empty(len(mags), dtype=complex)
    z = 0j
    prev = 0.0
    for i, m in enumerate(mags):
        z = z + _increment(a, prev, float(m), p.quad)
        values[i] = z
        prev = float(m)
    out = values[inverse.reshape(ts.shape)]
    neg = ts < 0
    out[neg] = -out[neg]
    return out


def peel_point(t: float, p: PeelParams) -> PlanePoint:
    """Point ``(x(t), y(t))`` of the flattened peel; ``|t| <= 2 pi N``."""
    t = _check_domain(t, p.a)
    z = _increment(p.a, 0.0, abs(t), p.quad)
    if t < 0:
        z = -z
    return PlanePoint(z.real, z.imag)


def peel_frame(t: float, p: PeelParams) -> CurveFrame:
    return CurveFrame(t, peel_point(t, p), phase(t, p), curvature(t, p))


def sample_peel(p: PeelParams, n: int) -> SampledCurve:
    """Sample the peel at ``n`` evenly spaced parameters.

    The domain is clipped to ``[-a + delta, a - delta]`` with
    ``delta = a * 1e-9`` so the stored curvature stays finite. The samples
    are point-symmetric through the origin bit for bit.
    """
    if n < 3:
        raise ValueError(f"need n >= 3 samples, got {n}")
    a = p.a
    half = a - a * SAMPLE_CLIP
    m = n - 1
    k = np.arange(n)
    t = half * (2 * k - m) / m
    z = peel_points(p, t)
    r = np.sqrt(_radicand(a, np.abs(t)))
    return SampledCurve(t, z.real, z.imag, -r, t / r)


def strip_area(s: SphereStrip) -> float:
    """Area ``2 pi (h2 - h1)`` of a zone of the unit sphere."""
    return 2.0 * math.pi * (s.h2 - s.h1)


def parallel_perimeter(s: float) -> float:
    """Length ``2 pi sqrt(1 - s**2)`` of the parallel at height ``s``."""
    if not abs(s) <= 1.0:
        raise ValueError(f"need |s| <= 1, got {s!r}")
    return 2.0 * math.pi * math.sqrt((1.0 - s) * (1.0 + s))


def strip_width(s: float, eps: float) -> float:
    """Width along the sphere of a thin zone of height ``eps`` at height ``s``."""
    if not abs(s) < 1.0:
        raise ValueError(f"need |s| < 1, got {s!r}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    return eps / math.sqrt((1.0 - s) * (1.0 + s))


def total_length(p: PeelParams) -> float:
    """Length ``4 pi N`` of the unit-speed parameter domain."""
    return 4.0 * math.pi * p.N
