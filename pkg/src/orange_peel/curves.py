"""Plane points and sampled curves shared by the spiral modules."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np


class PlanePoint(NamedTuple):
    """A point of the plane, read as the complex number ``x + iy``."""

    x: float
    y: float

    @classmethod
    def from_complex(cls, z: complex) -> "PlanePoint":
        return cls(z.real, z.imag)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def __neg__(self) -> "PlanePoint":
        return PlanePoint(-self.x, -self.y)

    def scaled(self, k: float) -> "PlanePoint":
        return PlanePoint(k * self.x, k * self.y)

    def distance(self, other: "PlanePoint") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


class CurveFrame(NamedTuple):
    """State of a unit-speed curve at parameter ``t``.

    ``phi`` is the tangent angle in radians and ``kappa`` the signed
    curvature (the reciprocal of the signed radius of curvature, 0 where the
    radius is infinite).
    """

    t: float
    point: PlanePoint
    phi: float
    kappa: float


def uniform_grid(t_min: float, t_max: float, n: int) -> np.ndarray:
    """``n`` evenly spaced parameters from ``t_min`` to ``t_max`` inclusive.

    Symmetric intervals give an exactly antisymmetric grid, which
    ``numpy.linspace`` does not guarantee.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    k = np.arange(n, dtype=float)
    m = n - 1
    grid = (t_min * (m - k) + t_max * k) / m
    grid[0] = t_min
    grid[-1] = t_max
    return grid


@dataclass(frozen=True)
class SampledCurve:
    """Frames of a curve at strictly increasing parameters.

    Stored column-wise as numpy arrays; indexing returns :class:`CurveFrame`.
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    phi: np.ndarray
    kappa: np.ndarray

    def __post_init__(self):
        cols = [np.asarray(c, dtype=float) for c in (self.t, self.x, self.y, self.phi, self.kappa)]
        n = len(cols[0])
        if any(c.ndim != 1 or len(c) != n for c in cols):
            raise ValueError("curve columns must be 1-d arrays of equal length")
        if n > 1 and not np.all(np.diff(cols[0]) > 0):
            raise ValueError("curve parameters must be strictly increasing")
        for name, c in zip(("t", "x", "y", "phi", "kappa"), cols):
            c.setflags(write=False)
            object.__setattr__(self, name, c)

    def __len__(self) -> int:
        return len(self.t)

    def __getitem__(self, i: int) -> CurveFrame:
        return CurveFrame(
            float(self.t[i]),
            PlanePoint(float(self.x[i]), float(self.y[i])),
            float(self.phi[i]),
            float(self.kappa[i]),
        )

    def __iter__(self) -> Iterator[CurveFrame]:
        for i in range(len(self)):
            yield self[i]

    @property
    def points(self) -> np.ndarray:
        """Points as a complex array."""
        return self.x + 1j * self.y
