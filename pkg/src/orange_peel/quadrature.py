"""Adaptive Gauss-Kronrod quadrature for real and complex integrands.

The integrator keeps a priority queue of panels and always bisects the panel
with the largest error estimate (ties broken by the smaller lower bound), so
results are bit-reproducible. Each panel is integrated with the 15-point
Kronrod rule; the embedded 7-point Gauss rule supplies the error estimate
``|K15 - G7|``.

Integrands are called with a 1-d numpy array of nodes and must return an
array of the same length (real or complex).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "QuadratureError",
    "NonFiniteIntegrandError",
    "integrate",
    "integrate_oscillatory",
]

# Kronrod abscissae on [-1, 1], ordered from the left end; every odd entry is
# also a 7-point Gauss node.
_XK_HALF = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WK_HALF = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG_HALF = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_XK = np.concatenate([-_XK_HALF, _XK_HALF[-2::-1]])
_WK = np.concatenate([_WK_HALF, _WK_HALF[-2::-1]])
_WG = np.zeros(15)
_WG[1::2] = np.concatenate([_WG_HALF, _WG_HALF[-2::-1]])

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy request for :func:`integrate`.

    Convergence means the summed panel error estimates drop to
    ``max(abs_tol, rel_tol * |value|)``.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 1_000_000

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be positive and finite, got {self.abs_tol!r}")
        if not (self.rel_tol >= 0 and math.isfinite(self.rel_tol)):
            raise ValueError(f"rel_tol must be non-negative, got {self.rel_tol!r}")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise ValueError(
                f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}"
            )


@dataclass(frozen=True)
class QuadratureResult:
    value: complex | float
    error_estimate: float
    subdivisions_used: int


class QuadratureError(ArithmeticError):
    """Raised when the requested accuracy is not reached.

    The best available estimate and its error bound are attached.
    """

    def __init__(self, message, value=None, error_estimate=math.inf, subdivisions_used=0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.subdivisions_used = subdivisions_used


class NonFiniteIntegrandError(QuadratureError):
    """The integrand returned NaN or infinity at ``point``."""

    def __init__(self, point: float, sample):
        super().__init__(f"integrand is not finite at u={point!r} (value {sample!r})")
        self.point = point
        self.sample = sample


def _panel(f, lo: float, hi: float):
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center + half * _XK
    fx = np.asarray(f(x))
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape)
    bad = ~np.isfinite(fx)
    if bad.any():
        i = int(np.argmax(bad))
        raise NonFiniteIntegrandError(float(x[i]), fx[i])
    kronrod = half * (_WK @ fx)
    gauss = half * (_WG @ fx)
    return kronrod, float(abs(kronrod - gauss))


def _total(values, complex_valued: bool):
    if complex_valued:
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    spec: QuadratureSpec | None = None,
    *,
    breakpoints: Sequence[float] | None = None,
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Vectorised integrand; receives a float array, returns a real or
        complex array of the same shape.
    lo, hi : float
        Interval bounds with ``lo <= hi``.
    spec : QuadratureSpec, optional
        Accuracy request; defaults to ``QuadratureSpec()``.
    breakpoints : sequence of float, optional
        Interior points used as the initial panel boundaries.

    Returns
    -------
    QuadratureResult

    Raises
    ------
    QuadratureError
        If the tolerance is not met within ``spec.max_subdivisions`` splits.
    NonFiniteIntegrandError
        If ``f`` yields NaN or infinity at a node.
    """
    spec = spec or QuadratureSpec()
    lo = float(lo)
    hi = float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("integration bounds must be finite")
    if lo > hi:
        raise ValueError(f"need lo <= hi, got [{lo!r}, {hi!r}]")
    if lo == hi:
        return QuadratureResult(0.0, 0.0, 0)

    edges = [lo]
    for b in sorted(breakpoints or ()):
        if lo < b < hi and b > edges[-1]:
            edges.append(float(b))
    edges.append(hi)

    heap = []
    complex_valued = False
    value = 0.0
    error = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        v, e = _panel(f, a, b)
        complex_valued = complex_valued or np.iscomplexobj(v)
        heapq.heappush(heap, (-e, a, b, v))
        value += v
        error += e

    splits = 0
    while error > max(spec.abs_tol, spec.rel_tol * abs(value)):
        if splits >= spec.max_subdivisions:
            raise QuadratureError(
                f"no convergence after {splits} subdivisions (error estimate {error:.3g})",
                _total([p[3] for p in heap], complex_valued),
                error,
                splits,
            )
        neg_e, a, b, v = heap[0]
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            raise QuadratureError(
                f"panel [{a!r}, {b!r}] cannot be split further (error estimate {error:.3g})",
                _total([p[3] for p in heap], complex_valued),
                error,
                splits,
            )
        heapq.heappop(heap)
        v1, e1 = _panel(f, a, mid)
        v2, e2 = _panel(f, mid, b)
        heapq.heappush(heap, (-e1, a, mid, v1))
        heapq.heappush(heap, (-e2, mid, b, v2))
        value += (v1 + v2) - v
        error = max(error + (e1 + e2) + neg_e, 0.0)
        splits += 1

    heap.sort(key=lambda p: p[1])
    total = _total([p[3] for p in heap], complex_valued)
    err = math.fsum(-p[0] for p in heap)
    return QuadratureResult(total, err, splits)


def oscillation_breakpoints(
    phase: Callable[[float], float],
    phase_rate: Callable[[float], float],
    lo: float,
    hi: float,
    max_depth: int = 60,
) -> list[float]:
    """Split ``[lo, hi]`` so that the phase advances by at most 2*pi per panel.

    A panel is accepted once both the phase difference across it and the
    rate at its midpoint times its width stay within one period. Returns
    the interior boundaries in increasing order.
    """
    out: list[float] = []
    # explicit stack keeps the left-to-right order without recursion limits
    stack = [(float(hi), float(phase(hi)), float(lo), float(phase(lo)), 0)]
    while stack:
        b, pb, a, pa, depth = stack.pop()
        mid = 0.5 * (a + b)
        rate = abs(float(phase_rate(mid)))
        if depth >= max_depth or (abs(pb - pa) <= TWO_PI and rate * (b - a) <= TWO_PI):
            if a > lo:
                out.append(a)
            continue
        pm = float(phase(mid))
        stack.append((b, pb, mid, pm, depth + 1))
        stack.append((mid, pm, a, pa, depth + 1))
    return out


def integrate_oscillatory(
    phase: Callable,
    phase_rate: Callable,
    lo: float,
    hi: float,
    spec: QuadratureSpec | None = None,
    *,
    amplitude: Callable | None = None,
) -> QuadratureResult:
    """Integrate ``amplitude(u) * exp(i*phase(u))`` over ``[lo, hi]``.

    ``phase_rate`` must be the derivative of ``phase``; it is only evaluated
    at panel midpoints, so it may blow up at the interval ends. ``phase`` and
    ``amplitude`` (default 1) must accept numpy arrays.
    """
    lo = float(lo)
    hi = float(hi)
    if lo > hi:
        raise ValueError(f"need lo <= hi, got [{lo!r}, {hi!r}]")
    if lo == hi:
        return QuadratureResult(0j, 0.0, 0)
    points = oscillation_breakpoints(phase, phase_rate, lo, hi)

    if amplitude is None:
        def f(u):
            return np.exp(1j * phase(u))
    else:
        def f(u):
            return amplitude(u) * np.exp(1j * phase(u))

    res = integrate(f, lo, hi, spec, breakpoints=points)
    return QuadratureResult(complex(res.value), res.error_estimate, res.subdivisions_used)
