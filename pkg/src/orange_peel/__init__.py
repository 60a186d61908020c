"""Flattened orange-peel spirals and their Euler-spiral limit."""

from .applications import OPEN_APERTURE, SlitChord, intensity_profile, slit_intensity, transition_curve
from .convergence import (
    ConvergenceEntry,
    ConvergenceReport,
    convergence_study,
    error_estimate,
    rescaled_euler,
    sup_error,
)
from .curves import CurveFrame, PlanePoint, SampledCurve
from .euler_spiral import (
    FresnelValue,
    clothoid_transition,
    euler_curvature,
    euler_point,
    fresnel,
    fresnel_asymptotic,
    fresnel_quadrature,
    fresnel_series,
    limit_point,
    sample_euler,
)
from .peel_spiral import (
    PeelParams,
    SphereStrip,
    curvature,
    height,
    parallel_perimeter,
    peel_point,
    peel_points,
    phase,
    sample_peel,
    strip_area,
    strip_width,
    total_length,
)
from .quadrature import (
    NonFiniteIntegrandError,
    QuadratureError,
    QuadratureResult,
    QuadratureSpec,
    integrate,
    integrate_oscillatory,
)

__version__ = "0.1.0"
