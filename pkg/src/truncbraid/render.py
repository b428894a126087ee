"""
SVG pictures of regular {n, d} tilings.

Spherical tilings are drawn from the combinatorial tiling: the von Dyck group
acts on the sphere by rotations (y about a face centre, x a half turn about an
edge midpoint), every dart gets a rotation matrix, and faces are projected
stereographically from the centre of face 0, which therefore becomes the outer
region.  Euclidean and hyperbolic tilings grow breadth first from a seed
polygon by half turns about edge midpoints; in the hyperbolic case these are
Möbius maps of the Poincaré disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .tiling import Geometry, classify, synthesize_tiling

MAX_PLANAR_DEPTH = 8
DEDUP_TOL = 1e-9
ARC_SAMPLES = 12
PALETTE = ("#f4a261", "#2a9d8f", "#e9c46a")
STROKE_WIDTH = 0.005


@dataclass
class SvgPath:
    points: list[complex]
    depth: int
    fill: str | None = None


@dataclass
class SvgTilingDocument:
    n: int
    d: int
    model: str            # "stereographic sphere", "euclidean plane" or "poincare disk"
    paths: list[SvgPath] = field(default_factory=list)
    size: int = 600

    @property
    def polygon_count(self) -> int:
        return len(self.paths)

    def to_svg(self) -> str:
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.size}" '
            f'height="{self.size}" viewBox="-1.1 -1.1 2.2 2.2">',
            f'<title>{{{self.n},{self.d}}} tiling, {self.model}</title>',
        ]
        if self.model == "poincare disk":
            out.append(f'<circle cx="0" cy="0" r="1" fill="none" stroke="black" '
                       f'stroke-width="{STROKE_WIDTH}"/>')
        for p in self.paths:
            pts = " ".join(f"{z.real:.6f},{z.imag:.6f}" for z in p.points)
            out.append(f'<path data-depth="{p.depth}" d="M {pts} Z" '
                       f'fill="{p.fill or "none"}" stroke="black" stroke-width="{STROKE_WIDTH}"/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_svg())


def render(n: int, d: int, depth: int = 3) -> SvgTilingDocument:
    """Draw the {n, d} tiling; ``depth`` only matters off the sphere."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    geom = classify(n, d).geometry
    if geom is Geometry.SPHERICAL:
        return _render_spherical(n, d)
    return _render_planar(n, d, min(depth, MAX_PLANAR_DEPTH), geom)


# ---------------------------------------------------------------------------
# sphere

def _rotation(axis, angle: float) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    k = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return np.eye(3) + math.sin(angle) * k + (1 - math.cos(angle)) * (k @ k)


def _slerp(p: np.ndarray, q: np.ndarray, count: int) -> list[np.ndarray]:
    omega = math.acos(max(-1.0, min(1.0, float(p @ q))))
    if omega < 1e-12:
        return [p]
    s = math.sin(omega)
    return [(math.sin((1 - t) * omega) * p + math.sin(t * omega) * q) / s
            for t in np.linspace(0, 1, count, endpoint=False)]


def spherical_frame(n: int, d: int):
    """Face centre, vertex, edge midpoint and generator rotations for {n, d}."""
    cos_r = 1 / (math.tan(math.pi / n) * math.tan(math.pi / d))
    big_r = math.acos(max(-1.0, min(1.0, cos_r)))
    small_r = math.acos(max(-1.0, min(1.0, math.cos(math.pi / d) / math.sin(math.pi / n))))
    f0 = np.array([0.0, 0.0, 1.0])
    v0 = np.array([math.sin(big_r), 0.0, math.cos(big_r)])
    e0 = np.array([math.sin(small_r) * math.cos(math.pi / n),
                   math.sin(small_r) * math.sin(math.pi / n), math.cos(small_r)])
    X = _rotation(e0, math.pi)
    Y = _rotation(f0, 2 * math.pi / n)
    return f0, v0, e0, X, Y


def dart_rotations(tiling) -> list[np.ndarray]:
    """One rotation per dart, so that dart g*s gets M_g @ S."""
    _, _, _, X, Y = spherical_frame(tiling.n, tiling.d)
    gens = [X, X.T, Y, Y.T]
    table = tiling.enumeration.table
    mats: list[np.ndarray | None] = [None] * len(table)
    mats[0] = np.eye(3)
    order = [0]
    for c in order:
        for col, S in enumerate(gens):
            t = table[c][col]
            if mats[t] is None:
                mats[t] = mats[c] @ S
                order.append(t)
    return mats


def _render_spherical(n: int, d: int) -> SvgTilingDocument:
    t = synthesize_tiling(n, d)
    f0, v0, e0, _, _ = spherical_frame(n, d)
    mats = dart_rotations(t)
    # project from the centre of face 0; its boundary becomes the outer rim

    def project(p):
        return complex(p[0], p[1]) / (1 - p[2])

    doc = SvgTilingDocument(n, d, "stereographic sphere")
    for k, face in enumerate(t.faces):
        corners = []
        for g in face:
            corners.append(mats[g] @ v0)
            corners.append(mats[g] @ e0)
        pts: list[complex] = []
        for a, b in zip(corners, corners[1:] + corners[:1]):
            pts.extend(project(p) for p in _slerp(a, b, ARC_SAMPLES))
        doc.paths.append(SvgPath(pts, 0 if k else -1,
                                 None if k == 0 else PALETTE[k % len(PALETTE)]))
    rim = max(abs(z) for z in doc.paths[0].points)
    for path in doc.paths:
        path.points = [z / rim for z in path.points]
    return doc


# ---------------------------------------------------------------------------
# plane and disk

def _mobius_to(m: complex):
    return lambda z: (z + m) / (1 + m.conjugate() * z)


def _mobius_from(m: complex):
    return lambda z: (z - m) / (1 - m.conjugate() * z)


def _half_turn(m: complex, hyperbolic: bool):
    if not hyperbolic:
        return lambda z: 2 * m - z
    to, frm = _mobius_to(m), _mobius_from(m)
    return lambda z: to(-frm(z))


def seed_polygon(n: int, d: int, hyperbolic: bool) -> tuple[list[complex], list[complex]]:
    """Vertices and edge midpoints of the polygon centred at the origin."""
    if hyperbolic:
        big_r = math.acosh(1 / (math.tan(math.pi / n) * math.tan(math.pi / d)))
        small_r = math.acosh(math.cos(math.pi / d) / math.sin(math.pi / n))
        rv, rm = math.tanh(big_r / 2), math.tanh(small_r / 2)
    else:
        rv, rm = 1.0, math.cos(math.pi / n)
    verts = [rv * np.exp(2j * math.pi * k / n) for k in range(n)]
    mids = [rm * np.exp(1j * math.pi * (2 * k + 1) / n) for k in range(n)]
    return [complex(v) for v in verts], [complex(m) for m in mids]


def planar_faces(n: int, d: int, depth: int, hyperbolic: bool):
    """Breadth-first list of (generation, centre, vertices, midpoints)."""
    verts, mids = seed_polygon(n, d, hyperbolic)
    faces = [(0, 0j, verts, mids)]
    seen = {(0, 0): [0j]}

    def known(c: complex) -> bool:
        kx, ky = round(c.real / 1e-7), round(c.imag / 1e-7)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for other in seen.get((kx + dx, ky + dy), ()):
                    if abs(other - c) < DEDUP_TOL:
                        return True
        seen.setdefault((kx, ky), []).append(c)
        return False

    frontier = [faces[0]]
    for gen in range(1, depth + 1):
        nxt = []
        for _, c, vs, ms in frontier:
            for m in ms:
                h = _half_turn(m, hyperbolic)
                c2 = h(c)
                if known(c2):
                    continue
                face = (gen, c2, [h(v) for v in vs], [h(x) for x in ms])
                nxt.append(face)
        faces.extend(nxt)
        frontier = nxt
    return faces


def _geodesic(p: complex, q: complex, count: int) -> Iterable[complex]:
    frm_p = _mobius_from(p)(q)
    to = _mobius_to(p)
    return (to(s * frm_p) for s in np.linspace(0, 1, count, endpoint=False))


def _render_planar(n: int, d: int, depth: int, geom: Geometry) -> SvgTilingDocument:
    hyperbolic = geom is Geometry.HYPERBOLIC
    faces = planar_faces(n, d, depth, hyperbolic)
    doc = SvgTilingDocument(n, d, "poincare disk" if hyperbolic else "euclidean plane")
    scale = 1.0
    if not hyperbolic:
        scale = 1 / max(abs(v) for _, _, vs, _ in faces for v in vs)
    for k, (gen, _, vs, _) in enumerate(faces):
        if hyperbolic:
            pts = [z for a, b in zip(vs, vs[1:] + vs[:1]) for z in _geodesic(a, b, ARC_SAMPLES)]
        else:
            pts = [v * scale for v in vs]
        doc.paths.append(SvgPath(pts, gen, PALETTE[gen % len(PALETTE)]))
    return doc
