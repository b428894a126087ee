"""
Free-group words and the finitely presented groups built from them.

A word is a tuple of letters ``(generator, sign)`` with 0-based generator
indices and ``sign`` in {+1, -1}.  Words are plain tuples so they hash, compare
and concatenate without ceremony; ``u + v`` is the product ``uv``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]
Word = tuple[Letter, ...]


def word(letters: Iterable[Sequence[int]]) -> Word:
    """Build a word from any iterable of ``(generator, sign)`` pairs."""
    out = []
    for g, s in letters:
        if g < 0 or s not in (1, -1):
            raise ValueError(f"bad letter {(g, s)!r}")
        out.append((int(g), int(s)))
    return tuple(out)


def free_reduce(w: Iterable[Letter]) -> Word:
    stack: list[Letter] = []
    for g, s in w:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


def cyclic_reduce(w: Iterable[Letter]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return w[i:j + 1]


def inverse(w: Word) -> Word:
    return tuple((g, -s) for g, s in reversed(w))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return free_reduce(inverse(w) * -k)
    return free_reduce(w * k)


def max_generator(w: Word) -> int:
    return max((g for g, _ in w), default=-1)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation ``<generators | relators>``.

    Relators are stored freely and cyclically reduced; empty relators are
    dropped at construction.
    """
    generator_count: int
    relators: tuple[Word, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValueError("a presentation needs at least one generator")
        rels = []
        for r in self.relators:
            r = cyclic_reduce(r)
            if not r:
                continue
            if max_generator(r) >= self.generator_count:
                raise ValueError(f"relator {r!r} uses an unknown generator")
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))
        if self.labels is not None and len(self.labels) != self.generator_count:
            raise ValueError("need one label per generator")

    def check_word(self, w: Word) -> None:
        if max_generator(w) >= self.generator_count:
            raise ValueError(
                f"word {w!r} references a generator >= {self.generator_count}")

    def format_word(self, w: Word) -> str:
        return format_word(w, self.labels)

    def __str__(self):
        gens = ", ".join(self.labels or [f"g{i + 1}" for i in range(self.generator_count)])
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{gens} | {rels}>"


def braid_presentation(n: int, d: int | None = None) -> Presentation:
    """Presentation of the truncated braid group B_n(d).

    ``d=None`` (or ``math.inf``) omits the torsion relators and presents the
    ordinary braid group B_n.
    """
    if n < 2:
        raise ValueError("need n >= 2 strands")
    if d is not None and d != math.inf:
        if d < 2:
            raise ValueError("need d >= 2")
        d = int(d)
    else:
        d = None
    rels: list[Word] = []
    for i in range(n - 2):
        a, b = (i, 1), (i + 1, 1)
        rels.append((a, b, a, (i + 1, -1), (i, -1), (i + 1, -1)))
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            rels.append(((i, 1), (j, 1), (i, -1), (j, -1)))
    if d is not None:
        rels.extend(((i, 1),) * d for i in range(n - 1))
    labels = tuple(f"s{i + 1}" for i in range(n - 1))
    return Presentation(n - 1, tuple(rels), labels)


def triangle_presentation(p: int, q: int, r: int) -> Presentation:
    """The von Dyck group <x, y | x^p, y^q, (xy)^r>."""
    if min(p, q, r) < 2:
        raise ValueError("triangle group parameters must be >= 2")
    x, y = (0, 1), (1, 1)
    return Presentation(2, ((x,) * p, (y,) * q, (x, y) * r), ("x", "y"))


def full_twist_word(n: int) -> Word:
    """(s1 s2 ... s_{n-1})^n, the full twist; (s1 s2)^3 for three strands."""
    if n < 2:
        raise ValueError("need n >= 2 strands")
    return tuple((i, 1) for i in range(n - 1)) * n


def braid_permutation(w: Word, n: int) -> tuple[int, ...]:
    """Strand permutation of a braid word, as a 0-based image tuple.

    Letters act left to right; ``perm[i]`` is where the strand starting at
    position ``i`` ends up.  Signs are ignored.
    """
    pos = list(range(n))          # pos[k] = strand currently at position k
    for g, _ in w:
        if not 0 <= g < n - 1:
            raise ValueError(f"generator index {g} out of range for B_{n}")
        pos[g], pos[g + 1] = pos[g + 1], pos[g]
    perm = [0] * n
    for k, strand in enumerate(pos):
        perm[strand] = k
    return tuple(perm)


# ---------------------------------------------------------------------------
# text syntax: "s1 s2^-1 (s1 s2)^3", "x y^2"

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>[A-Za-z]\d*)|(?P<one>1)|(?P<open>\()|(?P<close>\))|\^\s*(?P<exp>[+-]?\d+))")


def _generator_index(name: str, labels: Sequence[str] | None) -> int:
    if labels is not None and name in labels:
        return list(labels).index(name)
    m = re.fullmatch(r"[sg](\d+)", name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1)) - 1
    if name in ("x", "y"):
        return "xy".index(name)
    if re.fullmatch(r"[a-z]", name):
        return ord(name) - ord("a")
    raise ValueError(f"unknown generator {name!r}")


def parse_word(text: str, labels: Sequence[str] | None = None) -> Word:
    """Parse the textual word syntax into a reduced word.

    ``s1 s2 s1 s2 s1 s2`` and ``(s1 s2)^3`` give the same word.  Inverses are
    written ``s2^-1``; ``x``/``y`` name the triangle-group generators.
    """
    stack: list[list[Letter]] = [[]]
    last: list[Letter] | None = None
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        pos = m.end()
        if m.group("gen"):
            last = [(_generator_index(m.group("gen"), labels), 1)]
            stack[-1].extend(last)
        elif m.group("one"):
            last = []
        elif m.group("open"):
            stack.append([])
            last = None
        elif m.group("close"):
            if len(stack) == 1:
                raise ValueError("unbalanced ')'")
            last = stack.pop()
            stack[-1].extend(last)
        else:
            if last is None:
                raise ValueError("exponent without a base")
            k = int(m.group("exp"))
            del stack[-1][len(stack[-1]) - len(last):]
            stack[-1].extend(power(tuple(last), k))
            last = None
    if len(stack) != 1:
        raise ValueError("unbalanced '('")
    return free_reduce(stack[0])


def format_word(w: Word, labels: Sequence[str] | None = None) -> str:
    if not w:
        return "1"
    names = labels or [f"s{i + 1}" for i in range(max_generator(w) + 1)]
    return " ".join(names[g] + ("" if s > 0 else "^-1") for g, s in w)
