"""
Machine-readable verification report.

Every case compares an expected value (from the face-count formulas) against a
value computed independently (coset enumeration, tiling synthesis, numerical
geometry).  Cases are sorted by id so the JSON is reproducible; only the
timestamp changes between runs with the same configuration.
"""

from __future__ import annotations

import datetime
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import __version__
from . import geometry as geo
from .cosets import CapExceeded, element_order_both, enumerate_cosets, group_order
from .tiling import (Geometry, branched_cover_check, classify, coxeter_order_formula,
                     face_count, synthesize_tiling)
from .words import braid_presentation, full_twist_word, triangle_presentation

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
INFINITE = "infinite"


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    cap: int = 1_000_000
    infinite_cap: int = 100_000
    samples: int = 512
    steps: int = 256
    linking_pairs: int = 5
    seed: int = 20240101
    linking_tolerance: float = 0.05

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known - {"tolerance"}
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        data = dict(data)
        tol = data.pop("tolerance", {}) or {}
        if not isinstance(tol, dict) or set(tol) - {"linking"}:
            raise ConfigError("tolerance overrides must be an object with key 'linking'")
        if "linking" in tol:
            data["linking_tolerance"] = tol["linking"]
        try:
            cfg = cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path) -> "Config":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(data)

    def validate(self) -> None:
        for name in ("cap", "infinite_cap", "linking_pairs"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ConfigError(f"{name} must be a positive integer")
        for name in ("samples", "steps"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 64:
                raise ConfigError(f"{name} must be an integer >= 64")
        if not 0 < self.linking_tolerance < 0.5:
            raise ConfigError("linking tolerance must lie in (0, 0.5)")


@dataclass
class VerificationCase:
    id: str
    expected: int | str
    computed: int | str
    method: str
    status: str = ""

    def __post_init__(self):
        if not self.status:
            self.status = judge(self.expected, self.computed)


def judge(expected, computed) -> str:
    if computed == INCONCLUSIVE:
        return INCONCLUSIVE
    return PASS if expected == computed else FAIL


@dataclass
class Report:
    version: str
    timestamp: str
    config: dict
    cases: list[VerificationCase] = field(default_factory=list)

    @property
    def overall(self) -> str:
        if any(c.status == FAIL for c in self.cases):
            return FAIL
        if any(c.status == INCONCLUSIVE and c.expected != INFINITE for c in self.cases):
            return INCONCLUSIVE
        return PASS

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "timestamp": self.timestamp,
            "config": self.config,
            "cases": [asdict(c) for c in self.cases],
            "overall": self.overall,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def case(self, case_id: str) -> VerificationCase:
        for c in self.cases:
            if c.id == case_id:
                return c
        raise KeyError(case_id)


def _guard(case_id: str, expected, fn: Callable[[], VerificationCase]) -> VerificationCase:
    try:
        return fn()
    except Exception as exc:  # module failures become failing cases
        return VerificationCase(case_id, expected, "error", f"{type(exc).__name__}: {exc}", FAIL)


# ---------------------------------------------------------------------------
# individual cases

def order_case(n: int, d: int, cap: int) -> VerificationCase:
    """|B_n(d)| by enumeration against (f/2)^(n-1) n!."""
    case_id = f"order:{n}:{d}"
    predicted = coxeter_order_formula(n, d)
    if predicted == math.inf:
        geom = classify(n, d).geometry.value
        res = enumerate_cosets(braid_presentation(n, d), (), cap)
        if res.index is not None:
            return VerificationCase(case_id, INFINITE, res.index,
                                    f"enumeration completed although {{{n},{d}}} is {geom}", FAIL)
        return VerificationCase(
            case_id, INFINITE, INCONCLUSIVE,
            f"coset enumeration exceeded cap {cap}; tiling {{{n},{d}}} is {geom}")

    def run():
        order = group_order(braid_presentation(n, d), cap)
        return VerificationCase(case_id, predicted, order,
                                f"coset enumeration (cap {cap}) vs (f/2)^(n-1) n! with f={face_count(n, d)}")
    return _guard(case_id, predicted, run)


def center_case(d: int, cap: int) -> VerificationCase:
    """Order of the full twist in B_3(d) against f(3, d)/2."""
    case_id = f"center:{d}"
    f = face_count(3, d)
    if f == math.inf:
        try:
            by_index, _ = element_order_both(braid_presentation(3, d), full_twist_word(3), cap)
        except CapExceeded:
            return VerificationCase(case_id, INFINITE, INCONCLUSIVE,
                                    f"coset enumeration exceeded cap {cap}; "
                                    f"tiling {{3,{d}}} is {classify(3, d).geometry.value}")
        return VerificationCase(case_id, INFINITE, by_index, "enumeration completed", FAIL)
    expected = f // 2

    def run():
        by_index, by_perm = element_order_both(braid_presentation(3, d), full_twist_word(3), cap)
        method = f"index method {by_index}, permutation method {by_perm}"
        if by_index != by_perm:
            return VerificationCase(case_id, expected, by_index, method + " (disagree)", FAIL)
        return VerificationCase(case_id, expected, by_index, method)
    return _guard(case_id, expected, run)


def triangle_case(d: int, cap: int) -> VerificationCase:
    """|Δ(2,3,d)| against 3 f(3,d) and the quadrilateral count."""
    case_id = f"triangle:{d}"
    expected = 3 * face_count(3, d)

    def run():
        order = group_order(triangle_presentation(2, 3, d), cap)
        quads = branched_cover_check(synthesize_tiling(3, d, cap))
        method = f"coset enumeration {order}; quadrilateral count 3F = {quads}"
        if quads != order:
            return VerificationCase(case_id, expected, order, method, FAIL)
        return VerificationCase(case_id, expected, order, method)
    return _guard(case_id, expected, run)


def product_case(d: int, cap: int) -> VerificationCase:
    """|B_3(d)| = ord(full twist) * |Δ(2,3,d)| = (f/2)^2 3!."""
    case_id = f"product:{d}"
    f = face_count(3, d)
    expected = coxeter_order_formula(3, d)

    def run():
        order = group_order(braid_presentation(3, d), cap)
        twist, _ = element_order_both(braid_presentation(3, d), full_twist_word(3), cap)
        tri = group_order(triangle_presentation(2, 3, d), cap)
        method = f"|B3({d})| = {order}; ord(twist) * |triangle| = {twist} * {tri}"
        if order != twist * tri:
            return VerificationCase(case_id, expected, order, method + " (mismatch)", FAIL)
        return VerificationCase(case_id, expected, order, method)
    return _guard(case_id, expected, run)


def tiling_case(n: int, d: int, cap: int) -> VerificationCase:
    case_id = f"tiling:{n}:{d}"
    expected = face_count(n, d)

    def run():
        t = synthesize_tiling(n, d, cap)
        return VerificationCase(case_id, expected, t.F,
                                f"dart model V={t.V} E={t.E} F={t.F} darts={t.dart_count}")
    return _guard(case_id, expected, run)


def meridian_cases(steps: int) -> list[VerificationCase]:
    out = [_guard("meridian", 1, lambda: VerificationCase(
        "meridian", 1, geo.meridian_loop(steps)[1], f"discriminant winding, {steps} steps"))]

    def mono():
        perm = geo.meridian_monodromy(steps)
        moved = sum(1 for i, j in enumerate(perm) if i != j)
        return VerificationCase("monodromy:meridian", 2, moved,
                                f"root tracking permutation {list(perm)}; 2 moved points = transposition")
    out.append(_guard("monodromy:meridian", 2, mono))
    return out


def orbit_cases(samples: int, rng: np.random.Generator) -> list[VerificationCase]:
    p = geo.random_generic_point(rng)

    def wind():
        return VerificationCase("orbit-winding", 6, geo.orbit_winding(p, samples),
                                f"discriminant winding along orbit, {samples} samples")

    def mono():
        perm = geo.orbit_monodromy(p, samples)
        moved = sum(1 for i, j in enumerate(perm) if i != j)
        return VerificationCase("monodromy:orbit", 0, moved,
                                f"root tracking permutation {list(perm)} (full twist is pure)")
    return [_guard("orbit-winding", 6, wind), _guard("monodromy:orbit", 0, mono)]


def linking_case(cfg: Config, rng: np.random.Generator) -> VerificationCase:
    def run():
        values = []
        for _ in range(cfg.linking_pairs):
            p, q = geo.random_generic_point(rng), geo.random_generic_point(rng)
            k1, k2 = geo.orbit_polyline(p, cfg.samples), geo.orbit_polyline(q, cfg.samples)
            values.append(geo.linking_number(k1, k2, cfg.linking_tolerance))
        nearest = {n for _, n in values}
        worst = max(abs(v - n) for v, n in values)
        method = (f"segment-pair solid angles, {cfg.linking_pairs} orbit pairs, "
                  f"{cfg.samples} samples; max deviation {worst:.3e}")
        if len(nearest) != 1:
            return VerificationCase("linking", 6, "inconsistent", method, FAIL)
        return VerificationCase("linking", 6, nearest.pop(), method)
    return _guard("linking", 6, run)


# ---------------------------------------------------------------------------

def spherical_pairs(limit: int = 6) -> list[tuple[int, int]]:
    return [(n, d) for n in range(2, limit + 1) for d in range(2, limit + 1)
            if classify(n, d).geometry is Geometry.SPHERICAL]


def verify_all(cfg: Config | None = None, timestamp: str | None = None) -> Report:
    cfg = cfg or Config()
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    cases: list[VerificationCase] = []
    # exceptional orders
    for n, d in ((3, 3), (3, 4), (3, 5), (4, 3), (5, 3)):
        cases.append(order_case(n, d, cfg.cap))
    # cyclic and symmetric families
    families = {(2, d) for d in range(2, 8)} | {(n, 2) for n in range(2, 7)}
    for n, d in sorted(families):
        cases.append(order_case(n, d, cfg.cap))
    for d in range(2, 6):
        cases.append(center_case(d, cfg.cap))
        cases.append(triangle_case(d, cfg.cap))
        cases.append(product_case(d, cfg.cap))
    for n, d in ((3, 6), (5, 4)):
        cases.append(order_case(n, d, cfg.infinite_cap))
    for n, d in spherical_pairs():
        cases.append(tiling_case(n, d, cfg.cap))
    cases.extend(meridian_cases(cfg.steps))
    cases.extend(orbit_cases(cfg.samples, rng))
    cases.append(linking_case(cfg, rng))
    cases.sort(key=lambda c: c.id)
    if timestamp is None:
        timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return Report(__version__, timestamp, asdict(cfg), cases)
