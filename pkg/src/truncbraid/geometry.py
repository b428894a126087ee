"""
The 3-sphere model of the configuration space of three centred points.

A centred triple of distinct points in C is the root set of z^3 + a z + b;
rescaling the roots by a positive factor puts (a, b) on the unit sphere
|a|^2 + |b|^2 = 1, and the roots are distinct exactly when the discriminant
-4a^3 - 27b^2 is nonzero.  Rotating the roots by a unit complex number z acts
on coefficients with weights (2, 3), and its orbits are the fibres of a
Seifert fibration of the trefoil complement.

Orientation conventions: S^3 is oriented as the boundary of the unit ball of
C^2 = R^4 with coordinates (Re a, Im a, Re b, Im b).  Stereographic projection
is taken from the pole (a, b) = (0, 1) onto R^3 with coordinates
(Re a, Im a, -Im b) / (1 - Re b), which is orientation preserving for a
right-handed R^3.  Under these conventions the meridian below winds +1 around
the discriminant and two regular orbits link +6.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

NORM_TOL = 1e-12
CENTER_TOL = 1e-9

RootTriple = tuple[complex, complex, complex]


@dataclass(frozen=True)
class SpherePoint:
    """Coefficients (a, b) of z^3 + a z + b with |a|^2 + |b|^2 = 1."""
    a: complex
    b: complex

    def __post_init__(self):
        err = abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1)
        if err > NORM_TOL:
            raise ValueError(f"(a, b) is off the unit sphere by {err:.3g}")

    @classmethod
    def normalized(cls, a: complex, b: complex) -> "SpherePoint":
        """Radially project a nonzero pair onto the unit sphere."""
        r = math.hypot(abs(a), abs(b))
        if r == 0:
            raise ValueError("(0, 0) has no direction")
        return cls(complex(a) / r, complex(b) / r)

    def __iter__(self):
        return iter((self.a, self.b))


def _pair(p, b=None) -> tuple[complex, complex]:
    if b is not None:
        return complex(p), complex(b)
    a, b = p
    return complex(a), complex(b)


def discriminant(p, b=None) -> complex:
    """-4a^3 - 27b^2; accepts a SpherePoint, an (a, b) pair, or a and b."""
    a, b = _pair(p, b)
    return -4 * a ** 3 - 27 * b ** 2


def circle_act(zeta: complex, p):
    """zeta . (a, b) = (zeta^2 a, zeta^3 b) for a unit complex zeta."""
    if abs(abs(zeta) - 1) > NORM_TOL:
        raise ValueError("the circle acts by unit complex numbers only")
    a, b = _pair(p)
    a, b = zeta ** 2 * a, zeta ** 3 * b
    if isinstance(p, SpherePoint):
        return SpherePoint(a, b)
    return a, b


def quotient_point(p) -> tuple[complex, complex]:
    """[a^3 : b^2] in CP^1, scaled to unit norm; constant along orbits."""
    a, b = _pair(p)
    u, v = a ** 3, b ** 2
    r = math.hypot(abs(u), abs(v))
    return u / r, v / r


def projectively_equal(p, q, tol: float = 1e-9) -> bool:
    (u1, v1), (u2, v2) = p, q
    return abs(u1 * v2 - u2 * v1) <= tol * math.hypot(abs(u1), abs(v1)) * math.hypot(abs(u2), abs(v2))


# ---------------------------------------------------------------------------
# roots and coefficients

def normalization_scale(a: complex, b: complex, lo: float = 1e-6, hi: float = 1e6) -> float:
    """The lam > 0 with lam^4 |a|^2 + lam^6 |b|^2 = 1, by bisection."""
    A, B = abs(a) ** 2, abs(b) ** 2
    if A == 0 and B == 0:
        raise ValueError("all roots coincide; nothing to normalise")

    def g(lam):
        return lam ** 4 * A + lam ** 6 * B - 1

    if g(lo) > 0 or g(hi) < 0:
        raise ValueError("normalising scale outside [1e-6, 1e6]")
    while hi - lo > 1e-14 * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def roots_to_coeffs(roots: Sequence[complex]) -> SpherePoint:
    """Centred roots -> normalised coefficients (lam^2 a, lam^3 b)."""
    z1, z2, z3 = (complex(z) for z in roots)
    scale = max(1.0, abs(z1), abs(z2), abs(z3))
    if abs(z1 + z2 + z3) > CENTER_TOL * scale:
        raise ValueError("roots must sum to zero")
    a = z1 * z2 + z2 * z3 + z3 * z1
    b = -z1 * z2 * z3
    if a == 0 and b == 0:
        raise ValueError("all roots coincide; nothing to normalise")
    lam = normalization_scale(a, b)
    a, b = lam ** 2 * a, lam ** 3 * b
    # clean the last ulps so the sphere invariant holds exactly enough
    r = math.hypot(abs(a), abs(b))
    return SpherePoint(a / r, b / r)


def coeffs_to_roots(p, b=None) -> RootTriple:
    """The three roots of z^3 + a z + b, with multiplicity."""
    a, b = _pair(p, b)
    roots = np.roots([1, 0, a, b]) if (a, b) != (0, 0) else np.zeros(3, complex)
    polished = []
    for z in roots:
        z = complex(z)
        for _ in range(2):
            deriv = 3 * z * z + a
            if abs(deriv) < 1e-8:
                break
            z -= (z ** 3 + a * z + b) / deriv
        polished.append(z)
    return tuple(polished)


def cubic_residual(z: complex, p) -> float:
    a, b = _pair(p)
    return abs(z ** 3 + a * z + b) / max(1.0, abs(z) ** 3)


# ---------------------------------------------------------------------------
# winding and monodromy

def winding_number(values: Sequence[complex], closed: bool) -> int:
    """Turns of ``values`` around 0 by summing principal angle increments.

    For ``closed`` sequences the step from the last sample back to the first
    is included.  A single step of pi/2 or more is treated as undersampling.
    """
    v = np.asarray(values, dtype=complex)
    if closed:
        v = np.append(v, v[0])
    if np.any(v == 0):
        raise ValueError("curve passes through 0")
    steps = np.angle(v[1:] / v[:-1])
    if np.any(np.abs(steps) >= math.pi / 2):
        raise ValueError("winding step >= pi/2; sample more densely")
    turns = steps.sum() / (2 * math.pi)
    k = round(turns)
    if abs(turns - k) > 1e-6:
        raise AssertionError(f"winding {turns} is not an integer")
    return int(k)


def monodromy(family: Sequence[Sequence[complex]], closed: bool = True) -> tuple[int, ...]:
    """Permutation of the starting roots after tracking them along ``family``.

    ``perm[i] = j`` means the root that starts at position ``i`` of the first
    triple ends at position ``j`` of it.  Each step is matched greedily to the
    nearest root, and every match must be closer than half the minimal root
    separation.
    """
    family = [np.asarray(t, dtype=complex) for t in family]
    start = family[0]
    current = start.copy()
    targets = family[1:] + ([start] if closed else [])
    for nxt in targets:
        sep = min(abs(nxt[i] - nxt[j]) for i in range(3) for j in range(i + 1, 3))
        moved = np.empty(3, complex)
        used = set()
        for i, z in enumerate(current):
            dist = np.abs(nxt - z)
            j = int(np.argmin(dist))
            if dist[j] >= sep / 2 or j in used:
                raise ValueError("ambiguous root matching; sample the family more finely")
            used.add(j)
            moved[i] = nxt[j]
        current = moved
    perm = []
    for z in current:
        perm.append(int(np.argmin(np.abs(start - z))))
    if sorted(perm) != [0, 1, 2]:
        raise ValueError("tracked roots do not return to the starting set")
    return tuple(perm)


def is_transposition(perm: Sequence[int]) -> bool:
    moved = [i for i, j in enumerate(perm) if i != j]
    return len(moved) == 2


def meridian_roots(t: float) -> RootTriple:
    """Centred roots of (z + 1 + e^{i pi t})(z + 1 - e^{i pi t})(z - 1)."""
    e = cmath.exp(1j * math.pi * t)
    roots = (-1 - e, -1 + e, 1 + 0j)
    c = sum(roots) / 3
    return tuple(z - c for z in roots)


def meridian_loop(steps: int = 256) -> tuple[list[SpherePoint], int]:
    """Sample the meridian family at ``steps`` values of t in [0, 1].

    Returns the normalised coefficient loop and the winding number of the
    discriminant along it.
    """
    if steps < 64:
        raise ValueError("need at least 64 steps")
    pts = [roots_to_coeffs(meridian_roots(t)) for t in np.linspace(0, 1, steps)]
    disc = [discriminant(p) for p in pts]
    if min(abs(v) for v in disc) < 1e-6:
        raise ValueError("loop comes within 1e-6 of the discriminant locus")
    # first and last samples coincide, so the open sum is already a loop
    return pts, winding_number(disc, closed=False)


def meridian_monodromy(steps: int = 256) -> tuple[int, ...]:
    pts, _ = meridian_loop(steps)
    return monodromy([coeffs_to_roots(p) for p in pts], closed=True)


def orbit_points(p, samples: int) -> list[tuple[complex, complex]]:
    return [circle_act(cmath.exp(2j * math.pi * k / samples), _pair(p)) for k in range(samples)]


def orbit_winding(p, samples: int = 512) -> int:
    """Winding of the discriminant along the circle orbit through ``p``."""
    return winding_number([discriminant(q) for q in orbit_points(p, samples)], closed=True)


def orbit_monodromy(p, samples: int = 512) -> tuple[int, ...]:
    return monodromy([coeffs_to_roots(q) for q in orbit_points(p, samples)], closed=True)


# ---------------------------------------------------------------------------
# curves in R^3

@dataclass(frozen=True)
class KnotPolyline:
    """Closed polygonal curve; the last point joins back to the first."""
    points: np.ndarray     # shape (N, 3)
    params: np.ndarray     # shape (N,)
    closed: bool = True

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) < 16:
            raise ValueError("need at least 16 points in R^3")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polyline has non-finite points")
        steps = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
        if np.any(steps == 0):
            raise ValueError("consecutive points coincide")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "params", np.asarray(self.params, dtype=float))

    def reversed(self) -> "KnotPolyline":
        return KnotPolyline(self.points[::-1].copy(), self.params[::-1].copy(), self.closed)

    def to_csv(self) -> str:
        lines = ["t,x,y,z"]
        lines += [f"{t:.12g},{x:.12g},{y:.12g},{z:.12g}"
                  for t, (x, y, z) in zip(self.params, self.points)]
        return "\n".join(lines) + "\n"


POLE_CLEARANCE = 0.1


def stereographic(a: complex, b: complex) -> np.ndarray:
    denom = 1 - b.real
    return np.array([a.real, a.imag, -b.imag]) / denom


def orbit_polyline(p, samples: int = 512) -> KnotPolyline:
    """The circle orbit through a generic point, projected into R^3."""
    a, b = _pair(p)
    if abs(a) <= 0.1 or abs(b) <= 0.1:
        raise ValueError("orbit is not generic: need |a| > 0.1 and |b| > 0.1")
    if samples < 64:
        raise ValueError("need at least 64 samples")
    pts = []
    for q in orbit_points((a, b), samples):
        if math.hypot(abs(q[0]), abs(q[1] - 1)) < POLE_CLEARANCE:
            raise ValueError("orbit passes too close to the projection pole")
        pts.append(stereographic(*q))
    return KnotPolyline(np.array(pts), np.arange(samples) / samples)


def _segments(k: KnotPolyline) -> tuple[np.ndarray, np.ndarray]:
    p = k.points
    return p, np.roll(p, -1, axis=0)


def segment_distance(p0, p1, q0, q1) -> np.ndarray:
    """Minimal distances between segment arrays [p0, p1] and [q0, q1] (broadcast)."""
    u, v, w = p1 - p0, q1 - q0, p0 - q0
    a = np.einsum("...i,...i", u, u)
    b = np.einsum("...i,...i", u, v)
    c = np.einsum("...i,...i", v, v)
    d = np.einsum("...i,...i", u, w)
    e = np.einsum("...i,...i", v, w)
    den = a * c - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(den > 1e-14 * a * c, (b * e - c * d) / den, 0.0)
    s = np.clip(s, 0, 1)
    t = np.clip((b * s + e) / c, 0, 1)
    s = np.clip((b * t - d) / a, 0, 1)
    diff = w + s[..., None] * u - t[..., None] * v
    return np.linalg.norm(diff, axis=-1)


def _unit(v: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    return v / n


def linking_value(k1: KnotPolyline, k2: KnotPolyline) -> float:
    """Gauss linking number of two closed polylines, summed exactly per segment pair.

    Each pair of segments contributes the signed solid angle it subtends
    divided by 4 pi.
    """
    if not (k1.closed and k2.closed):
        raise ValueError("linking number needs closed curves")
    a0, a1 = _segments(k1)
    b0, b1 = _segments(k2)
    p1, p2 = a0[:, None, :], a1[:, None, :]
    p3, p4 = b0[None, :, :], b1[None, :, :]
    dist = segment_distance(p1, p2, p3, p4)
    if dist.min() <= 1e-3:
        raise ValueError(f"curves come within {dist.min():.3g} of each other")
    r13, r14, r23, r24 = p3 - p1, p4 - p1, p3 - p2, p4 - p2
    n1 = _unit(np.cross(r13, r14))
    n2 = _unit(np.cross(r14, r24))
    n3 = _unit(np.cross(r24, r23))
    n4 = _unit(np.cross(r23, r13))

    def asin_dot(x, y):
        return np.arcsin(np.clip(np.einsum("...i,...i", x, y), -1, 1))

    omega = asin_dot(n1, n2) + asin_dot(n2, n3) + asin_dot(n3, n4) + asin_dot(n4, n1)
    sign = np.sign(np.einsum("...i,...i", np.cross(p4 - p3, p2 - p1), r13))
    return float((omega * sign).sum() / (4 * math.pi))


def linking_number(k1: KnotPolyline, k2: KnotPolyline, tol: float = 0.05) -> tuple[float, int]:
    value = linking_value(k1, k2)
    nearest = round(value)
    if abs(value - nearest) >= tol:
        raise ValueError(f"linking value {value} is not within {tol} of an integer")
    return value, int(nearest)


def random_generic_point(rng: np.random.Generator, margin: float = 0.2) -> SpherePoint:
    """A random point of S^3 with |a|, |b| both at least ``margin``."""
    while True:
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        a, b = complex(v[0], v[1]), complex(v[2], v[3])
        if abs(a) >= margin and abs(b) >= margin:
            return SpherePoint.normalized(a, b)


def discriminant_svg(values: Sequence[complex], size: int = 400) -> str:
    """2-D plot of a closed discriminant curve together with the origin."""
    v = np.asarray(values, dtype=complex)
    r = np.abs(v).max() * 1.1
    pts = " ".join(f"{z.real / r:.5f},{-z.imag / r:.5f}" for z in v)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        'viewBox="-1.1 -1.1 2.2 2.2">\n'
        '<circle cx="0" cy="0" r="0.02" fill="black"/>\n'
        f'<path d="M {pts} Z" fill="none" stroke="crimson" stroke-width="0.005"/>\n'
        "</svg>\n"
    )
