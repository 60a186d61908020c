"""Exit criteria, one test per numbered criterion.

Each test prints a one-line verdict in the "acceptance criteria" section of
the pytest summary.
"""

import math
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from orange_peel import cli
from orange_peel.applications import OPEN_APERTURE, slit_intensity
from orange_peel.convergence import convergence_study, error_estimate, sup_error
from orange_peel.euler_spiral import (
    LIMIT,
    clothoid_transition,
    euler_point,
    fresnel_asymptotic,
    fresnel_quadrature,
    fresnel_series,
    sample_euler,
)
from orange_peel.peel_spiral import (
    PeelParams,
    SphereStrip,
    parallel_perimeter,
    peel_point,
    peel_points,
    sample_peel,
    strip_area,
    strip_width,
)

from oracles import angle_gap, chord_turning, fd_triplets, read_curve_csv

H = 1e-4
P3 = PeelParams(3)


def _peel_fd(p, centres, h=H):
    ts = np.stack([centres - h, centres, centres + h], axis=1)
    z = peel_points(p, ts.ravel()).reshape(ts.shape)
    return fd_triplets(z, h)


@pytest.mark.acceptance(1, "Fresnel limit point within 0.02; series/asymptotic/quadrature agree to 1e-9 on 0.1..6.0; < 1 s")
def test_fresnel_limit_and_methods():
    start = time.perf_counter()
    p50 = euler_point(50.0)
    assert math.hypot(p50.x - LIMIT, p50.y - LIMIT) < 0.02
    worst = 0.0
    for k in range(1, 61):
        t = k / 10
        vals = [fresnel_series(t), fresnel_asymptotic(t), fresnel_quadrature(t)]
        for i in range(3):
            for j in range(i + 1, 3):
                worst = max(worst, abs(vals[i][0] - vals[j][0]), abs(vals[i][1] - vals[j][1]))
    elapsed = time.perf_counter() - start
    assert worst < 1e-9
    assert elapsed < 1.0


@pytest.mark.acceptance(2, "N=3 peel finite-difference curvature matches t/sqrt((6pi)^2-t^2) to 1e-3 relative; < 5 s")
def test_peel_curvature_law():
    start = time.perf_counter()
    a = P3.a
    pos = np.linspace(0.1, 6 * math.pi - 0.5, 1000)
    centres = np.concatenate([-pos[::-1], pos])
    _, angle, kappa = _peel_fd(P3, centres)
    expected = centres / np.sqrt(a * a - centres**2)
    rel = np.abs(kappa - expected) / np.abs(expected)
    # stored curvature of the sampled frames obeys the same law
    curve = sample_peel(P3, 2001)
    inner = (np.abs(curve.t) >= 0.1) & (np.abs(curve.t) <= a - 0.5)
    stored = curve.kappa[inner]
    expect_stored = curve.t[inner] / np.sqrt(a * a - curve.t[inner] ** 2)
    elapsed = time.perf_counter() - start
    assert np.max(rel) < 1e-3
    assert np.max(np.abs(stored - expect_stored) / np.abs(expect_stored)) < 1e-12
    assert np.max(angle_gap(angle, -np.sqrt(a * a - centres**2))) < 1e-3
    assert elapsed < 5.0


@pytest.mark.acceptance(3, "finite-difference speed 1 +- 1e-3; z(-t) == -z(t) bit-exactly for 100 random t")
def test_unit_speed_and_symmetry():
    a = P3.a
    centres = np.linspace(-(a - 0.1), a - 0.1, 2001)
    speed, _, _ = _peel_fd(P3, centres)
    assert np.max(np.abs(speed - 1)) <= 1e-3

    e_centres = np.linspace(-10, 10, 401)
    pts = np.array([[complex(*euler_point(t + d)) for d in (-H, 0.0, H)] for t in e_centres])
    e_speed, _, _ = fd_triplets(pts, H)
    assert np.max(np.abs(e_speed - 1)) <= 1e-3

    rng = np.random.default_rng(20120206)
    for t in rng.uniform(-a, a, 100):
        assert peel_point(-t, P3) == -peel_point(t, P3)
    for t in rng.uniform(-30, 30, 100):
        assert euler_point(-t) == -euler_point(t)


@pytest.mark.acceptance(4, "total tangent-angle variation of the N=3 peel is 12pi within 1%")
def test_turning_number():
    curve = sample_peel(P3, 10001)
    variation = float(np.sum(np.abs(np.diff(curve.phi))))
    assert abs(variation - 12 * math.pi) <= 0.01 * 12 * math.pi
    # each half sweeps 2 pi N
    mid = len(curve) // 2
    left = np.sum(np.abs(np.diff(curve.phi[: mid + 1])))
    right = np.sum(np.abs(np.diff(curve.phi[mid:])))
    assert left == pytest.approx(6 * math.pi, rel=0.01)
    assert right == pytest.approx(6 * math.pi, rel=0.01)


@pytest.mark.acceptance(5, "T=1, N=4..64: rescaled sup errors strictly decrease, log-log slope <= -0.8; < 60 s")
def test_rescaled_peel_converges():
    start = time.perf_counter()
    report = convergence_study([4, 8, 16, 32, 64], 1.0)
    elapsed = time.perf_counter() - start
    errs = [e.sup_error_rescaled for e in report.entries]
    assert [e.N for e in report.entries] == [4, 8, 16, 32, 64]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    assert report.fitted_slope <= -0.8
    assert elapsed < 60.0


@pytest.mark.acceptance(6, "N=8, T=1 absolute sup error <= 5x the leading-term estimate")
def test_error_estimate_calibration():
    t = math.sqrt(32 * math.pi)
    absolute, _ = sup_error(8, 1.0)
    assert absolute <= 5 * error_estimate(t, 8)


@pytest.mark.acceptance(7, "strip_area(-1,1) == 4pi; width x perimeter == 2 pi eps to 1e-12 for 100 random s")
def test_strip_geometry():
    assert strip_area(SphereStrip(-1.0, 1.0)) == 4 * math.pi
    rng = np.random.default_rng(4)
    for s, eps in zip(rng.uniform(-1, 1, 100), rng.uniform(1e-4, 0.5, 100)):
        if abs(s) >= 1:
            continue
        assert abs(strip_width(s, eps) * parallel_perimeter(s) - 2 * math.pi * eps) < 1e-12


@pytest.mark.acceptance(8, "open-aperture intensity pi to 1e-9; clothoid(2,1) == Euler(0,1) to 1e-9; end curvature rate*length")
def test_applications():
    assert abs(slit_intensity(OPEN_APERTURE) - math.pi) < 1e-9
    n = 101
    clo = clothoid_transition(2.0, 1.0, n)
    eul = sample_euler(0.0, 1.0, n)
    for col in ("t", "x", "y", "phi", "kappa"):
        assert np.max(np.abs(getattr(clo, col) - getattr(eul, col))) < 1e-9
    assert abs(clo[-1].kappa - 2.0 * 1.0) < 1e-9
    other = clothoid_transition(0.5, 2.0, n)
    assert abs(other[-1].kappa - 0.5 * 2.0) < 1e-9


@pytest.mark.acceptance(9, "peel N=3 SVG/CSV winds 3 times per half and is point-symmetric; euler SVG marks both limit points")
def test_figure_reproduction(tmp_path):
    csv, svg = tmp_path / "peel.csv", tmp_path / "peel.svg"
    assert cli.main(["peel", "--n", "3", "--samples", "10001", "--out", str(csv), "--svg", str(svg)]) == 0
    _, header, rows = read_curve_csv(csv)
    assert header == "t,x,y,phi,kappa"
    t, x, y, phi = rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3]
    assert np.array_equal(x[::-1], -x) and np.array_equal(y[::-1], -y)
    mid = len(t) // 2
    for sl in (slice(0, mid + 1), slice(mid, None)):
        turns = chord_turning(x[sl], y[sl]) / (2 * math.pi)
        assert round(turns) == 3 and abs(turns - 3) < 0.05
        assert np.sum(np.abs(np.diff(phi[sl]))) / (2 * math.pi) == pytest.approx(3, rel=0.01)

    ns = {"s": "http://www.w3.org/2000/svg"}
    root = ET.parse(svg).getroot()
    line = root.find("s:polyline", ns)
    pts = np.array([[float(v) for v in p.split(",")] for p in line.get("points").split()])
    assert len(pts) == len(t)
    # the pixel polyline is point-symmetric about the image centre
    w, h = (float(v) for v in root.get("viewBox").split()[2:])
    assert np.max(np.abs(pts + pts[::-1] - [w, h])) < 2e-3
    assert round(chord_turning(pts[: mid + 1, 0], -pts[: mid + 1, 1]) / (2 * math.pi)) == 3

    esvg = tmp_path / "euler.svg"
    assert cli.main(["euler", "--t-min", "-8", "--t-max", "8", "--samples", "10001",
                     "--out", str(tmp_path / "euler.csv"), "--svg", str(esvg)]) == 0
    eroot = ET.parse(esvg).getroot()
    assert len(eroot.findall("s:polyline", ns)) == 1
    circles = eroot.findall("s:circle", ns)
    assert len(circles) == 2
    epts = np.array([[float(v) for v in p.split(",")] for p in
                     eroot.find("s:polyline", ns).get("points").split()])
    # the curve ends close to the marks it winds around
    marks = sorted((float(c.get("cx")), float(c.get("cy"))) for c in circles)
    ends = sorted(map(tuple, epts[[0, -1]]))
    span = epts[:, 0].max() - epts[:, 0].min()
    for m, e in zip(marks, ends):
        assert math.dist(m, e) < 0.05 * span
