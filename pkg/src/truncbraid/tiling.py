"""
Regular {n, d} tilings: classification, face counts and combinatorial synthesis.

A regular tiling by n-gons with d meeting at each vertex is spherical,
Euclidean or hyperbolic according to the sign of 4 - (n-2)(d-2).  In the
spherical case the face count follows from V - E + F = 2 with nF = 2E = dV:

    F = 4d / (4 - (n-2)(d-2)).

The combinatorial tiling is realised on the von Dyck group
G = <x, y | x^2, y^n, (xy)^d>: darts are the elements of G, and faces, edges
and vertices are the orbits of right multiplication by <y>, <x> and <xy>.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .cosets import DEFAULT_CAP, CapExceeded, EnumerationResult, enumerate_cosets
from .words import triangle_presentation

INFINITE = math.inf

EXCEPTIONAL_PAIRS = ((3, 3), (3, 4), (3, 5), (4, 3), (5, 3))


class Geometry(enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


def _check(n: int, d: int) -> None:
    if n < 2 or d < 2:
        raise ValueError(f"Schläfli parameters must be >= 2, got ({n}, {d})")


@dataclass(frozen=True)
class SchlafliSymbol:
    n: int  # polygon size
    d: int  # polygons per vertex

    def __post_init__(self):
        _check(self.n, self.d)

    @property
    def geometry(self) -> Geometry:
        k = (self.n - 2) * (self.d - 2)
        if k < 4:
            return Geometry.SPHERICAL
        if k == 4:
            return Geometry.EUCLIDEAN
        return Geometry.HYPERBOLIC

    def __str__(self):
        return f"{{{self.n},{self.d}}}"


def classify(n: int, d: int) -> SchlafliSymbol:
    return SchlafliSymbol(n, d)


def in_finite_list(n: int, d: int) -> bool:
    """Coxeter's list of finite truncated braid groups B_n(d)."""
    return n == 2 or d == 2 or (n, d) in EXCEPTIONAL_PAIRS


def face_count(n: int, d: int) -> int | float:
    """Number of faces f(n, d) of the {n, d} tiling; ``INFINITE`` off the sphere."""
    _check(n, d)
    denom = 4 - (n - 2) * (d - 2)
    if denom <= 0:
        return INFINITE
    f, rem = divmod(4 * d, denom)
    if rem:
        raise AssertionError(f"face count of {{{n},{d}}} is not an integer")
    return f


def coxeter_order_formula(n: int, d: int) -> int | float:
    """(f(n,d)/2)^(n-1) * n!, the predicted order of B_n(d)."""
    f = face_count(n, d)
    finite = f != INFINITE
    if finite != in_finite_list(n, d):
        raise AssertionError(f"finite face count disagrees with the finite list at ({n}, {d})")
    if not finite:
        return INFINITE
    order = Fraction(f, 2) ** (n - 1) * math.factorial(n)
    if order.denominator != 1:
        raise AssertionError(f"formula gives a non-integer order {order}")
    return int(order)


@dataclass(frozen=True)
class CombinatorialTiling:
    """A regular tiling whose darts are the elements of Δ(2, n, d).

    ``faces``, ``edges`` and ``vertices`` list each cell as the cyclically
    ordered darts of its orbit, starting from the smallest dart.  The
    ``*_of`` tuples map a dart to the index of its cell.
    """
    n: int
    d: int
    enumeration: EnumerationResult
    faces: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...]
    vertices: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]
    edge_of: tuple[int, ...]
    vertex_of: tuple[int, ...]

    @property
    def dart_count(self) -> int:
        return len(self.face_of)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    @property
    def geometry(self) -> Geometry:
        return classify(self.n, self.d).geometry

    def to_json(self) -> dict:
        return {
            "n": self.n, "d": self.d, "geometry": self.geometry.value,
            "V": self.V, "E": self.E, "F": self.F, "darts": self.dart_count,
            "faces": [list(c) for c in self.faces],
            "edges": [list(c) for c in self.edges],
            "vertices": [list(c) for c in self.vertices],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _orbits(perm: list[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    cell_of = [-1] * len(perm)
    cells = []
    for start in range(len(perm)):
        if cell_of[start] >= 0:
            continue
        cycle = []
        i = start
        while cell_of[i] < 0:
            cell_of[i] = len(cells)
            cycle.append(i)
            i = perm[i]
        cells.append(tuple(cycle))
    return tuple(cells), tuple(cell_of)


def synthesize_tiling(n: int, d: int, cap: int = DEFAULT_CAP) -> CombinatorialTiling:
    sym = classify(n, d)
    if sym.geometry is not Geometry.SPHERICAL:
        raise ValueError(f"{sym} is {sym.geometry.value}; only spherical tilings are finite")
    res = enumerate_cosets(triangle_presentation(2, n, d), (), cap)
    if res.index is None:
        raise CapExceeded(cap)
    table = res.table
    x = [row[0] for row in table]
    y = [row[2] for row in table]
    xy = [y[x[g]] for g in range(len(table))]
    faces, face_of = _orbits(y)
    edges, edge_of = _orbits(x)
    vertices, vertex_of = _orbits(xy)
    t = CombinatorialTiling(n, d, res, faces, edges, vertices, face_of, edge_of, vertex_of)
    check_tiling(t)
    return t


def check_tiling(t: CombinatorialTiling) -> None:
    """Assert the counting, Euler and regularity invariants of ``t``."""
    darts = t.dart_count
    if darts % t.n or darts % t.d or darts % 2:
        raise AssertionError("dart count not divisible by n, d and 2")
    if (t.F, t.E, t.V) != (darts // t.n, darts // 2, darts // t.d):
        raise AssertionError("cell counts do not match the dart count")
    if t.euler_characteristic != 2:
        raise AssertionError(f"V - E + F = {t.euler_characteristic}, expected 2")
    if t.F != face_count(t.n, t.d):
        raise AssertionError("face count disagrees with the closed form")
    for face in t.faces:
        if len({t.edge_of[g] for g in face}) != t.n:
            raise AssertionError("a face is not bounded by n distinct edges")
    for vertex in t.vertices:
        if len({t.edge_of[g] for g in vertex}) != t.d:
            raise AssertionError("a vertex is not incident to d distinct edges")


def branched_cover_check(t: CombinatorialTiling) -> int:
    """Quadrilateral count 3F of a triangular tiling; equals |Δ(2,3,d)|."""
    if t.n != 3:
        raise ValueError("branched cover count is defined for triangle tilings (n = 3)")
    quads = 3 * t.F
    if quads != t.dart_count:
        raise AssertionError(f"3F = {quads} but the group has {t.dart_count} elements")
    return quads
