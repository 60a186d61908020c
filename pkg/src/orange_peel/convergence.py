"""Numerical check that the rescaled peel spiral tends to the Euler spiral.

Expanding ``sqrt(a**2 - u**2) = a - u**2/(2a) + O(u**4/a**3)`` with
``a = 2 pi N`` and integer ``N`` (so ``exp(-i a) = 1``) gives

    z(t) ~ sqrt(4 pi N) * E(t / sqrt(4 pi N)),

with ``E`` the Euler spiral. Integrating the dropped ``u**4/(8 a**3)`` phase
term bounds the gap by ``|t|**5 / (40 a**3)``. For a fixed rescaled window
``T`` the gap measured in rescaled units therefore shrinks like ``T**5/N``.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .curves import PlanePoint, uniform_grid
from .euler_spiral import fresnel
from .peel_spiral import PeelParams, peel_points
from .quadrature import QuadratureSpec

__all__ = [
    "ConvergenceEntry",
    "ConvergenceReport",
    "as_integer_N",
    "rescaled_euler",
    "sup_error",
    "error_estimate",
    "convergence_study",
]


class ConvergenceEntry(NamedTuple):
    N: int
    T: float
    sup_error_absolute: float
    sup_error_rescaled: float


@dataclass(frozen=True)
class ConvergenceReport:
    entries: tuple[ConvergenceEntry, ...]
    fitted_slope: float


def as_integer_N(N) -> int:
    """Return ``N`` as an int, rejecting non-integral or non-positive values."""
    if isinstance(N, bool):
        raise ValueError("N must be an integer, not a bool")
    if isinstance(N, numbers.Integral):
        n = int(N)
    elif isinstance(N, numbers.Real) and math.isfinite(N) and float(N).is_integer():
        n = int(N)
    else:
        raise ValueError(f"N must be an integer for the limit comparison, got {N!r}")
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    return n


def _scale(N: int) -> float:
    return math.sqrt(4.0 * math.pi * N)


def rescaled_euler(t: float, N: int) -> PlanePoint:
    """``sqrt(4 pi N) * E(t / sqrt(4 pi N))``, the limit-curve approximation of ``z(t)``."""
    N = as_integer_N(N)
    k = _scale(N)
    c, s = fresnel(t / k)
    return PlanePoint(k * c, k * s)


def _max_window(N: int) -> float:
    return math.sqrt(math.pi * N)


def sup_error(
    N: int,
    T: float,
    n_samples: int = 1001,
    quad: QuadratureSpec | None = None,
) -> tuple[float, float]:
    """Largest gap between peel and rescaled Euler spiral on a uniform grid.

    The grid has ``n_samples`` points on ``[-sqrt(4 pi N) T, sqrt(4 pi N) T]``.
    Returns ``(absolute, rescaled)`` with ``rescaled = absolute / sqrt(4 pi N)``.
    """
    N = as_integer_N(N)
    if not (T > 0 and math.isfinite(T)):
        raise ValueError(f"T must be positive, got {T!r}")
    if T > _max_window(N):
        raise ValueError(
            f"T={T!r} leaves the peel domain for N={N}: need T <= sqrt(pi*N) = {_max_window(N)!r}"
        )
    if n_samples < 10:
        raise ValueError(f"need n_samples >= 10, got {n_samples}")
    p = PeelParams(N, quad or QuadratureSpec())
    k = _scale(N)
    t_max = min(k * T, p.a)
    ts = uniform_grid(-t_max, t_max, n_samples)
    peel = peel_points(p, ts)
    euler = np.array([complex(*fresnel(t / k)) for t in ts]) * k
    absolute = float(np.max(np.abs(peel - euler)))
    return absolute, absolute / k


def error_estimate(t: float, N: int) -> float:
    """Leading-order bound ``|t|**5 / (40 (2 pi N)**3)`` on the peel/limit gap."""
    a = 2.0 * math.pi * N
    if abs(t) > a:
        raise ValueError(f"need |t| <= 2*pi*N = {a!r}, got {t!r}")
    return abs(t) ** 5 / (40.0 * a**3)


def convergence_study(
    Ns: Iterable[int],
    T: float,
    n_samples: int = 1001,
    quad: QuadratureSpec | None = None,
) -> ConvergenceReport:
    """Run :func:`sup_error` for each ``N`` and fit ``log(error)`` against ``log(N)``."""
    Ns = sorted({as_integer_N(N) for N in Ns})
    if len(Ns) < 3:
        raise ValueError(f"need at least 3 distinct N values for a slope fit, got {len(Ns)}")
    bad = [N for N in Ns if T > _max_window(N)]
    if bad:
        raise ValueError(
            f"T={T!r} exceeds sqrt(pi*N) = {_max_window(bad[0])!r} for N={bad[0]}"
        )
    entries = []
    for N in Ns:
        absolute, rescaled = sup_error(N, T, n_samples, quad)
        entries.append(ConvergenceEntry(N, float(T), absolute, rescaled))
    errs = np.array([e.sup_error_rescaled for e in entries])
    if np.any(errs <= 0):
        raise ArithmeticError("a sup error is exactly zero; the log-log fit is undefined")
    slope = float(np.polyfit(np.log(Ns), np.log(errs), 1)[0])
    return ConvergenceReport(tuple(entries), slope)
