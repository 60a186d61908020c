"""Slit-diffraction intensity and railway transition curves from the Euler spiral.

The intensity behind a slit is the squared length of a chord of the Euler
spiral. The chord's end parameters come from the slit geometry; this module
takes them as given (``-inf``/``+inf`` stand for the spiral's limit points)
and does not attempt the optical mapping. Values are unnormalised, so a fully
open aperture gives ``pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .curves import PlanePoint, SampledCurve
from .euler_spiral import clothoid_transition, euler_point, limit_point

__all__ = [
    "SlitChord",
    "OPEN_APERTURE",
    "slit_intensity",
    "intensity_profile",
    "transition_curve",
]


@dataclass(frozen=True)
class SlitChord:
    """Euler-spiral parameters of the two chord ends.

    Use ``-math.inf`` / ``math.inf`` for an edge at infinity.
    """

    t1: float
    t2: float

    def __post_init__(self):
        for v in (self.t1, self.t2):
            if math.isnan(v):
                raise ValueError("chord parameters must not be NaN")
        if self.t1 > self.t2:
            raise ValueError(f"need t1 <= t2, got ({self.t1!r}, {self.t2!r})")

    @classmethod
    def between(cls, a: float, b: float) -> "SlitChord":
        """Chord joining the spiral points at ``a`` and ``b`` in either order."""
        return cls(min(a, b), max(a, b))


OPEN_APERTURE = SlitChord(-math.inf, math.inf)


def _spiral_point(t: float) -> PlanePoint:
    if math.isinf(t):
        return limit_point(1 if t > 0 else -1)
    return euler_point(t)


def slit_intensity(c: SlitChord) -> float:
    """Squared distance between the chord's two spiral points."""
    if c.t1 == c.t2:
        return 0.0
    p1 = _spiral_point(c.t1)
    p2 = _spiral_point(c.t2)
    dx = p2.x - p1.x
    dy = p2.y - p1.y
    return dx * dx + dy * dy


def intensity_profile(chords: Iterable[SlitChord]) -> list[float]:
    chords = list(chords)
    if not chords:
        raise ValueError("intensity_profile needs at least one chord")
    return [slit_intensity(c) for c in chords]


def transition_curve(curvature_rate: float, length: float, n: int = 101) -> SampledCurve:
    """Track transition from straight running into a bend.

    Curvature rises linearly from 0 to ``curvature_rate * length`` over the
    given arclength; see :func:`~orange_peel.euler_spiral.clothoid_transition`.
    """
    return clothoid_transition(curvature_rate, length, n)
