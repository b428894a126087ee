import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from truncbraid import geometry as geo
from truncbraid.geometry import (KnotPolyline, SpherePoint, circle_act, coeffs_to_roots,
                                 discriminant, linking_number, linking_value, meridian_loop,
                                 monodromy, orbit_polyline, roots_to_coeffs, winding_number)

RNG_SEED = 12345


def random_unit(rng):
    return cmath.exp(2j * math.pi * rng.random())


def random_sphere_point(rng):
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return SpherePoint.normalized(complex(v[0], v[1]), complex(v[2], v[3]))


def random_centred_triple(rng):
    z = rng.normal(size=3) + 1j * rng.normal(size=3)
    return tuple(z - z.mean())


def same_multiset(xs, ys, tol):
    ys = list(ys)
    for x in xs:
        k = min(range(len(ys)), key=lambda i: abs(ys[i] - x))
        if abs(ys[k] - x) > tol:
            return False
        ys.pop(k)
    return True


def angle_sum_winding(values):
    """Oracle: unwrap the argument and count turns."""
    ang = np.unwrap(np.angle(np.append(values, values[0])))
    return (ang[-1] - ang[0]) / (2 * math.pi)


def circle(center, u, v, samples=200):
    t = np.arange(samples) / samples * 2 * math.pi
    pts = np.asarray(center) + np.outer(np.cos(t), u) + np.outer(np.sin(t), v)
    return KnotPolyline(pts, t)


def crossing_count_linking(k1, k2, view=(0.13, 0.21, 1.0)):
    """Oracle: half the signed crossings between k1 and k2 in a generic projection."""
    view = np.asarray(view) / np.linalg.norm(view)
    e1 = np.cross(view, [1.0, 0, 0])
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(view, e1)
    total = 0
    segs1 = list(zip(k1.points, np.roll(k1.points, -1, axis=0)))
    segs2 = list(zip(k2.points, np.roll(k2.points, -1, axis=0)))
    for a0, a1 in segs1:
        pa0, pa1 = np.array([a0 @ e1, a0 @ e2]), np.array([a1 @ e1, a1 @ e2])
        for b0, b1 in segs2:
            pb0, pb1 = np.array([b0 @ e1, b0 @ e2]), np.array([b1 @ e1, b1 @ e2])
            m = np.column_stack([pa1 - pa0, pb0 - pb1])
            det = np.linalg.det(m)
            if abs(det) < 1e-15:
                continue
            s, t = np.linalg.solve(m, pb0 - pa0)
            if not (0 <= s < 1 and 0 <= t < 1):
                continue
            ha = (a0 + s * (a1 - a0)) @ view
            hb = (b0 + t * (b1 - b0)) @ view
            over, under = (a1 - a0, b1 - b0) if ha > hb else (b1 - b0, a1 - a0)
            total += np.sign(np.cross(over, under) @ view)
    return total / 2


def gauss_integral(k1, k2):
    """Oracle: midpoint rule for the Gauss double integral."""
    p, q = k1.points, k2.points
    dp = np.roll(p, -1, axis=0) - p
    dq = np.roll(q, -1, axis=0) - q
    mp, mq = p + dp / 2, q + dq / 2
    r = mp[:, None, :] - mq[None, :, :]
    cross = np.cross(dp[:, None, :], dq[None, :, :])
    return float((np.einsum("ijk,ijk->ij", r, cross) / np.linalg.norm(r, axis=2) ** 3).sum()
                 / (4 * math.pi))


# -- discriminant and circle action ------------------------------------------

def test_discriminant_special_forms():
    b = 0.3 - 0.7j
    a = -0.2 + 0.5j
    assert discriminant(0, b) == pytest.approx(-27 * b ** 2)
    assert discriminant(a, 0) == pytest.approx(-4 * a ** 3)
    assert discriminant(SpherePoint(1, 0)) == -4


def test_discriminant_equivariance():
    rng = np.random.default_rng(RNG_SEED)
    worst = 0.0
    for _ in range(1000):
        z, p = random_unit(rng), random_sphere_point(rng)
        lhs = discriminant(circle_act(z, p))
        rhs = z ** 6 * discriminant(p)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    assert worst <= 1e-10


@settings(max_examples=200)
@given(st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi), st.floats(0, math.pi / 2),
       st.floats(0, 2 * math.pi))
def test_circle_act_preserves_norm(theta, phi, mix, psi):
    p = SpherePoint(math.cos(mix) * cmath.exp(1j * phi), math.sin(mix) * cmath.exp(1j * psi))
    q = circle_act(cmath.exp(1j * theta), p)
    assert abs(abs(q.a) ** 2 + abs(q.b) ** 2 - 1) <= 1e-12


def test_circle_act_examples():
    p = SpherePoint.normalized(0.3 + 0.1j, -0.5 + 0.8j)
    assert circle_act(1, p) == p
    q = circle_act(-1, p)
    assert q.a == pytest.approx(p.a) and q.b == pytest.approx(-p.b)
    assert circle_act(-1, (0.6, 0)) == pytest.approx((0.6, 0))
    w = cmath.exp(2j * math.pi / 3)
    a, b = circle_act(w, (0, 1j))
    assert abs(a) < 1e-15 and b == pytest.approx(1j)
    with pytest.raises(ValueError):
        circle_act(1.1, p)


def test_sphere_point_invariant():
    with pytest.raises(ValueError):
        SpherePoint(1, 1)
    with pytest.raises(ValueError):
        SpherePoint.normalized(0, 0)


# -- roots and coefficients --------------------------------------------------

def test_roots_to_coeffs_examples():
    p = roots_to_coeffs((1, -1, 0))
    assert p.a == pytest.approx(-1) and abs(p.b) < 1e-15
    w = cmath.exp(2j * math.pi / 3)
    p = roots_to_coeffs((1, w, w * w))
    assert abs(p.a) < 1e-12 and p.b == pytest.approx(-1)


def test_roots_to_coeffs_errors():
    with pytest.raises(ValueError):
        roots_to_coeffs((1, 1, 1))
    with pytest.raises(ValueError):
        roots_to_coeffs((0, 0, 0))


def scale_oracle(a, b):
    """lam from the positive real root of |b|^2 u^3 + |a|^2 u^2 - 1 = 0, u = lam^2."""
    u = [r.real for r in np.roots([abs(b) ** 2, abs(a) ** 2, 0, -1])
         if abs(r.imag) < 1e-12 and r.real > 0]
    return math.sqrt(u[0])


def test_round_trip_random_triples():
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(1000):
        r = random_centred_triple(rng)
        a = r[0] * r[1] + r[1] * r[2] + r[2] * r[0]
        b = -r[0] * r[1] * r[2]
        lam = scale_oracle(a, b)
        back = coeffs_to_roots(roots_to_coeffs(r))
        assert same_multiset(back, [lam * z for z in r], 1e-9)


def test_normalization_scale_matches_oracle():
    rng = np.random.default_rng(1)
    for _ in range(50):
        a, b = complex(*rng.normal(size=2)) * 3, complex(*rng.normal(size=2)) / 3
        assert geo.normalization_scale(a, b) == pytest.approx(scale_oracle(a, b), rel=1e-12)


@pytest.mark.parametrize("coeffs, roots", [
    ((0, -1), [1, cmath.exp(2j * math.pi / 3), cmath.exp(-2j * math.pi / 3)]),
    ((-1, 0), [0, 1, -1]),
    ((-3, 2), [1, 1, -2]),
])
def test_coeffs_to_roots_examples(coeffs, roots):
    found = coeffs_to_roots(coeffs)
    assert same_multiset(found, roots, 1e-6)
    for z in found:
        assert geo.cubic_residual(z, coeffs) <= 1e-8


def test_double_root_on_discriminant_locus():
    assert discriminant(-3, 2) == 0


def test_cubic_residual_bound_random():
    rng = np.random.default_rng(7)
    for _ in range(500):
        p = random_sphere_point(rng)
        for z in coeffs_to_roots(p):
            assert geo.cubic_residual(z, p) <= 1e-8


# -- winding, meridian, monodromy --------------------------------------------

def test_winding_number_basics():
    t = np.linspace(0, 1, 64, endpoint=False)
    assert winding_number(np.exp(2j * math.pi * t), closed=True) == 1
    assert winding_number(np.exp(-4j * math.pi * t), closed=True) == -2
    assert winding_number(2 + np.exp(2j * math.pi * t), closed=True) == 0
    with pytest.raises(ValueError):
        winding_number(np.exp(2j * math.pi * np.linspace(0, 1, 4, endpoint=False)), closed=True)


def test_meridian_winds_once():
    pts, w = meridian_loop(256)
    assert w == 1
    disc = np.array([discriminant(p) for p in pts])
    assert round(angle_sum_winding(disc[:-1])) == 1


def test_meridian_closes_up():
    pts, _ = meridian_loop(256)
    assert same_multiset(coeffs_to_roots(pts[0]), coeffs_to_roots(pts[-1]), 1e-9)
    assert all(abs(abs(p.a) ** 2 + abs(p.b) ** 2 - 1) <= 1e-12 for p in pts)


def test_meridian_roots_are_recentred():
    for t in (0, 0.3, 1):
        assert abs(sum(geo.meridian_roots(t))) < 1e-15


def test_meridian_needs_samples():
    with pytest.raises(ValueError):
        meridian_loop(32)


def test_meridian_monodromy_is_transposition():
    perm = geo.meridian_monodromy(256)
    assert geo.is_transposition(perm)


def test_constant_family_monodromy():
    triple = (1, -0.5 + 1j, -0.5 - 1j)
    assert monodromy([triple] * 10) == (0, 1, 2)


def test_orbit_monodromy_is_identity():
    p = SpherePoint.normalized(0.5 + 0.2j, -0.3 + 0.6j)
    assert geo.orbit_monodromy(p, 256) == (0, 1, 2)


def test_monodromy_rejects_undersampling():
    w = cmath.exp(2j * math.pi / 3)
    # roots jump by 2 while the new separation is only sqrt(3)
    fam = [(3, 3 * w, 3 * w * w), (1, w, w * w)]
    with pytest.raises(ValueError):
        monodromy(fam)


# -- orbits and linking --------------------------------------------------------

def test_orbit_polyline_generic():
    p = SpherePoint.normalized(0.6, 0.8)
    k = orbit_polyline(p, 512)
    assert k.points.shape == (512, 3)
    assert np.all(np.isfinite(k.points))


def test_orbit_polyline_rejects_exceptional():
    with pytest.raises(ValueError):
        orbit_polyline((1, 0), 128)
    with pytest.raises(ValueError):
        orbit_polyline(SpherePoint.normalized(0.05, 1), 128)
    with pytest.raises(ValueError):
        orbit_polyline((0.6, 0.8), 32)


def test_orbit_discriminant_winds_six_times():
    rng = np.random.default_rng(3)
    for _ in range(5):
        p = geo.random_generic_point(rng)
        pts = geo.orbit_points(p, 512)
        assert geo.orbit_winding(p, 512) == 6
        assert round(angle_sum_winding(np.array([discriminant(q) for q in pts]))) == 6


def test_quotient_constant_along_orbit():
    p = SpherePoint.normalized(0.4 - 0.3j, 0.2 + 0.8j)
    ref = geo.quotient_point(p)
    for q in geo.orbit_points(p, 256):
        assert geo.projectively_equal(geo.quotient_point(q), ref, 1e-9)


def test_unlinked_circles():
    k1 = circle([0, 0, 0], [1, 0, 0], [0, 1, 0])
    k2 = circle([0, 0, 5], [1, 0, 0], [0, 1, 0])
    value, nearest = linking_number(k1, k2)
    assert nearest == 0 and abs(value) < 1e-9


def test_hopf_link_against_crossing_count():
    k1 = circle([0, 0, 0], [1, 0, 0], [0, 1, 0], 120)
    k2 = circle([1, 0, 0], [1, 0, 0], [0, 0, 1], 120)
    oracle = crossing_count_linking(k1, k2)
    assert abs(oracle) == 1
    value, nearest = linking_number(k1, k2)
    assert nearest == oracle
    assert gauss_integral(k1, k2) == pytest.approx(value, abs=0.02)


def test_orbit_linking_against_crossing_count():
    k1 = orbit_polyline(SpherePoint.normalized(0.6, 0.8j), 256)
    k2 = orbit_polyline(SpherePoint.normalized(0.8j, -0.6), 256)
    assert crossing_count_linking(k1, k2) == 6
    assert gauss_integral(k1, k2) == pytest.approx(6, abs=0.05)


def test_linking_symmetric_and_orientation_odd():
    k1 = orbit_polyline(SpherePoint.normalized(0.6, 0.8j), 256)
    k2 = orbit_polyline(SpherePoint.normalized(0.5 + 0.5j, -0.5 + 0.5j), 300)
    v = linking_value(k1, k2)
    assert linking_value(k2, k1) == pytest.approx(v, abs=1e-6)
    assert linking_value(k1.reversed(), k2) == pytest.approx(-v, abs=1e-6)


def test_orbit_linking_is_six():
    rng = np.random.default_rng(11)
    for samples in (256, 400, 512):
        p, q = geo.random_generic_point(rng), geo.random_generic_point(rng)
        value, nearest = linking_number(orbit_polyline(p, samples), orbit_polyline(q, samples))
        assert nearest == 6 and abs(value - 6) < 0.05


def test_linking_rejects_touching_curves():
    k1 = circle([0, 0, 0], [1, 0, 0], [0, 1, 0])
    k2 = circle([0, 0, 0], [1, 0, 0], [0, 0, 1])
    with pytest.raises(ValueError):
        linking_number(k1, k2)
    open_curve = KnotPolyline(k1.points, k1.params, closed=False)
    with pytest.raises(ValueError):
        linking_number(open_curve, k1)


def test_polyline_validation_and_csv():
    with pytest.raises(ValueError):
        KnotPolyline(np.zeros((10, 3)), np.arange(10))
    pts = np.array([[math.cos(t), math.sin(t), 0] for t in np.linspace(0, 6, 20)])
    pts[3] = pts[2]
    with pytest.raises(ValueError):
        KnotPolyline(pts, np.arange(20))
    k = circle([0, 0, 0], [1, 0, 0], [0, 1, 0], 16)
    lines = k.to_csv().splitlines()
    assert lines[0] == "t,x,y,z" and len(lines) == 17


def test_segment_distance():
    d = geo.segment_distance(np.array([0.0, 0, 0]), np.array([1.0, 0, 0]),
                             np.array([0.5, 1, -1]), np.array([0.5, 1, 1]))
    assert d == pytest.approx(1.0)
    d = geo.segment_distance(np.array([0.0, 0, 0]), np.array([1.0, 0, 0]),
                             np.array([2.0, 0, 0]), np.array([3.0, 0, 0]))
    assert d == pytest.approx(1.0)


def test_discriminant_svg():
    pts, _ = meridian_loop(64)
    svg = geo.discriminant_svg([discriminant(p) for p in pts])
    assert svg.count("<path") == 1 and "<circle" in svg
