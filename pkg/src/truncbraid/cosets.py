"""
Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Columns of the table are ordered ``g1, g1^-1, g2, g2^-1, ...``; the column of
letter ``(g, s)`` is ``2*g + (s < 0)`` and its inverse column is ``col ^ 1``.
Undefined entries hold ``-1``.

The enumeration follows the HLT scheme: cosets are processed in order of
definition; for each live coset every relator is scanned and filled, after
which any remaining undefined entries of that coset are defined.
Coincidences are merged with a union-find structure (smaller id survives) and
the coincidence queue is processed to exhaustion before any further
definition.  When the number of live cosets reaches 75% of the cap a
lookahead pass scans every live coset against every relator without defining
anything.

A completed table is renumbered by first discovery (breadth first from coset
0, columns in order), which is the canonical standard form: the output depends
only on the group and the subgroup, never on the route the enumeration took.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Sequence

from .words import Presentation, Word, free_reduce, inverse

UNDEF = -1
DEFAULT_CAP = 1_000_000
LOOKAHEAD_FRACTION = 0.75


class CapExceeded(Exception):
    """Raised when an enumeration needs more live cosets than allowed.

    This says nothing about whether the index is infinite.
    """

    def __init__(self, cap: int):
        super().__init__(f"coset enumeration exceeded the cap of {cap} live cosets")
        self.cap = cap


class _CapReached(Exception):
    pass


def letter_column(g: int, s: int) -> int:
    return 2 * g + (s < 0)


def word_columns(w: Word) -> tuple[int, ...]:
    return tuple(2 * g + (s < 0) for g, s in w)


@dataclass(frozen=True)
class EnumerationStats:
    total_defined: int
    max_live: int
    coincidences: int
    lookaheads: int


class CosetTable:
    """Mutable coset table used while an enumeration is running."""

    def __init__(self, presentation: Presentation, cap: int, debug: bool = False):
        self.presentation = presentation
        self.cap = cap
        self.debug = debug
        self.ncols = 2 * presentation.generator_count
        self.table: list[int] = [UNDEF] * self.ncols
        self.parent: list[int] = [0]
        self.live_count = 1
        self.total_defined = 1
        self.max_live = 1
        self.coincidences = 0
        self.lookaheads = 0

    # -- union find ---------------------------------------------------------

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def live_cosets(self) -> list[int]:
        return [c for c, p in enumerate(self.parent) if p == c]

    # -- primitive steps ----------------------------------------------------

    def define(self, c: int, x: int) -> int:
        if self.live_count >= self.cap:
            raise _CapReached
        new = len(self.parent)
        self.parent.append(new)
        self.table.extend([UNDEF] * self.ncols)
        self.table[c * self.ncols + x] = new
        self.table[new * self.ncols + (x ^ 1)] = c
        self.live_count += 1
        self.total_defined += 1
        if self.live_count > self.max_live:
            self.max_live = self.live_count
        return new

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live_count -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        """Identify cosets ``a`` and ``b`` and everything that follows."""
        table, nc, rep = self.table, self.ncols, self.rep
        queue: list[int] = []
        self._merge(a, b, queue)
        k = 0
        while k < len(queue):
            g = queue[k]
            k += 1
            self.coincidences += 1
            base = g * nc
            for x in range(nc):
                dlt = table[base + x]
                if dlt < 0:
                    continue
                xi = x ^ 1
                table[dlt * nc + xi] = UNDEF
                mu, nu = rep(g), rep(dlt)
                t = table[mu * nc + x]
                if t >= 0:
                    self._merge(nu, t, queue)
                    continue
                t = table[nu * nc + xi]
                if t >= 0:
                    self._merge(mu, t, queue)
                    continue
                table[mu * nc + x] = nu
                table[nu * nc + xi] = mu

    def scan(self, alpha: int, r: Sequence[int], fill: bool) -> None:
        """Scan relator columns ``r`` from ``alpha``; define cosets if ``fill``."""
        table, nc = self.table, self.ncols
        f = b = alpha
        i, j = 0, len(r) - 1
        while True:
            while i <= j:
                nxt = table[f * nc + r[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[b * nc + (r[j] ^ 1)]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f * nc + r[i]] = b
                table[b * nc + (r[i] ^ 1)] = f
                return
            if not fill:
                return
            self.define(f, r[i])

    def lookahead(self, relators: Sequence[Sequence[int]]) -> None:
        self.lookaheads += 1
        for c in range(len(self.parent)):
            for r in relators:
                if self.parent[c] != c:
                    break
                self.scan(c, r, fill=False)

    # -- checks --------------------------------------------------------------

    def check_consistency(self) -> None:
        table, nc = self.table, self.ncols
        for c in self.live_cosets():
            for x in range(nc):
                t = table[c * nc + x]
                if t < 0:
                    continue
                if self.parent[t] != t:
                    raise AssertionError(f"coset {c} column {x} points at dead coset {t}")
                if table[t * nc + (x ^ 1)] != c:
                    raise AssertionError(f"table inconsistent at coset {c}, column {x}")
        if self.parent[0] != 0:
            raise AssertionError("coset 0 was merged away")

    def is_complete(self) -> bool:
        table, nc = self.table, self.ncols
        return all(table[c * nc + x] >= 0 for c in self.live_cosets() for x in range(nc))

    # -- output ---------------------------------------------------------------

    def compacted(self) -> tuple[tuple[int, ...], ...]:
        """Renumber live cosets by first discovery from coset 0."""
        table, nc = self.table, self.ncols
        newid = {0: 0}
        order = [0]
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for x in range(nc):
                t = table[c * nc + x]
                if t < 0:
                    raise AssertionError("cannot compact an incomplete table")
                if t not in newid:
                    newid[t] = len(order)
                    order.append(t)
        return tuple(tuple(newid[table[c * nc + x]] for x in range(nc)) for c in order)


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of :func:`enumerate_cosets`.

    ``index`` is ``None`` when the cap was exceeded; ``table`` then is None too.
    Rows of ``table`` list action targets in column order g1, g1^-1, g2, ...
    """
    presentation: Presentation
    subgroup: tuple[Word, ...]
    cap: int
    index: int | None
    table: tuple[tuple[int, ...], ...] | None
    stats: EnumerationStats = field(compare=False)

    @property
    def complete(self) -> bool:
        return self.index is not None

    def act(self, coset: int, w: Word) -> int:
        """Image of ``coset`` under the word ``w`` (right action)."""
        if self.table is None:
            raise ValueError("enumeration did not complete")
        for g, s in w:
            coset = self.table[coset][2 * g + (s < 0)]
        return coset


def enumerate_cosets(presentation: Presentation, subgroup: Sequence[Word] = (),
                     cap: int = DEFAULT_CAP, debug: bool = False) -> EnumerationResult:
    """Enumerate the cosets of the subgroup generated by ``subgroup``.

    Returns a result whose ``index`` is None if more than ``cap`` live cosets
    were ever needed.  With ``debug`` the table consistency invariant is
    checked after every coset is processed.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    subgroup = tuple(free_reduce(w) for w in subgroup)
    for w in subgroup:
        presentation.check_word(w)
    rels = [word_columns(r) for r in presentation.relators]
    subs = [word_columns(w) for w in subgroup if w]
    ct = CosetTable(presentation, cap, debug)
    nc = ct.ncols
    next_lookahead = max(1, int(LOOKAHEAD_FRACTION * cap))
    try:
        for w in subs:
            ct.scan(0, w, fill=True)
        alpha = 0
        parent, table, scan = ct.parent, ct.table, ct.scan
        while alpha < len(parent):
            if parent[alpha] == alpha:
                if ct.live_count >= next_lookahead:
                    ct.lookahead(rels)
                    next_lookahead = max(ct.live_count + 1,
                                         ct.live_count + (cap - ct.live_count) // 2)
                for r in rels:
                    if parent[alpha] != alpha:
                        break
                    scan(alpha, r, True)
                if parent[alpha] == alpha:
                    for x in range(nc):
                        if table[alpha * nc + x] < 0:
                            ct.define(alpha, x)
                if debug:
                    ct.check_consistency()
            alpha += 1
    except _CapReached:
        stats = EnumerationStats(ct.total_defined, ct.max_live, ct.coincidences, ct.lookaheads)
        return EnumerationResult(presentation, subgroup, cap, None, None, stats)
    ct.check_consistency()
    if not ct.is_complete():
        raise AssertionError("enumeration finished with an incomplete table")
    compact = ct.compacted()
    stats = EnumerationStats(ct.total_defined, ct.max_live, ct.coincidences, ct.lookaheads)
    result = EnumerationResult(presentation, subgroup, cap, len(compact), compact, stats)
    _verify_closed(result)
    return result


def _verify_closed(result: EnumerationResult) -> None:
    table = result.table
    for r in result.presentation.relators:
        cols = word_columns(r)
        for c in range(len(table)):
            d = c
            for x in cols:
                d = table[d][x]
            if d != c:
                raise AssertionError(f"relator does not close at coset {c}")
    for w in result.subgroup:
        if result.act(0, w) != 0:
            raise AssertionError("subgroup generator moves coset 0")


def group_order(presentation: Presentation, cap: int = DEFAULT_CAP) -> int:
    """Order of the presented group; raises :class:`CapExceeded`."""
    res = enumerate_cosets(presentation, (), cap)
    if res.index is None:
        raise CapExceeded(cap)
    return res.index


# ---------------------------------------------------------------------------
# permutation representations

Perm = tuple[int, ...]


@dataclass(frozen=True)
class PermutationRep:
    degree: int
    images: tuple[Perm, ...]
    inverses: tuple[Perm, ...]


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def perm_rep(result: EnumerationResult) -> PermutationRep:
    """Generator permutations read off a completed coset table."""
    if result.table is None:
        raise ValueError("perm_rep needs a completed enumeration")
    table = result.table
    ngens = result.presentation.generator_count
    images = tuple(tuple(row[2 * g] for row in table) for g in range(ngens))
    inverses = tuple(tuple(row[2 * g + 1] for row in table) for g in range(ngens))
    rep = PermutationRep(len(table), images, inverses)
    for g in range(ngens):
        if sorted(images[g]) != list(range(rep.degree)) or perm_inverse(images[g]) != inverses[g]:
            raise AssertionError(f"generator {g} image is not a bijection")
    identity = tuple(range(rep.degree))
    for r in result.presentation.relators:
        if word_image(rep, r) != identity:
            raise AssertionError("relator acts nontrivially")
    for w in result.subgroup:
        if word_image(rep, w)[0] != 0:
            raise AssertionError("subgroup generator does not fix the point 0")
    return rep


def word_image(rep: PermutationRep, w: Word) -> Perm:
    """Permutation induced by ``w``; letters act left to right."""
    ngens = len(rep.images)
    current = list(range(rep.degree))
    for g, s in w:
        if not 0 <= g < ngens:
            raise ValueError(f"generator index {g} out of range")
        img = rep.images[g] if s > 0 else rep.inverses[g]
        current = [img[i] for i in current]
    return tuple(current)


def element_order(presentation: Presentation, w: Word, cap: int = DEFAULT_CAP) -> int:
    """Order of ``w`` in the presented group, computed two ways.

    The index route divides |G| by [G : <w>]; the permutation route takes the
    order of ``w`` acting on the regular representation.  They must agree.
    """
    presentation.check_word(w)
    full = enumerate_cosets(presentation, (), cap)
    if full.index is None:
        raise CapExceeded(cap)
    sub = enumerate_cosets(presentation, (w,), cap)
    if sub.index is None:
        raise CapExceeded(cap)
    by_index, rem = divmod(full.index, sub.index)
    if rem:
        raise AssertionError("subgroup index does not divide the group order")
    by_perm = perm_order(word_image(perm_rep(full), w))
    if by_index != by_perm:
        raise AssertionError(
            f"element order mismatch: index method {by_index}, permutation method {by_perm}")
    return by_index


def element_order_both(presentation: Presentation, w: Word,
                       cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Both routes of :func:`element_order` without the agreement check."""
    full = enumerate_cosets(presentation, (), cap)
    sub = enumerate_cosets(presentation, (w,), cap)
    if full.index is None or sub.index is None:
        raise CapExceeded(cap)
    return full.index // sub.index, perm_order(word_image(perm_rep(full), w))


# ---------------------------------------------------------------------------
# text dump

def presentation_hash(presentation: Presentation, subgroup: Sequence[Word] = ()) -> str:
    text = repr((presentation.generator_count, presentation.relators, tuple(subgroup)))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def dump_table(result: EnumerationResult) -> str:
    """Tab-separated table, one coset per line, after a header line."""
    if result.table is None:
        raise ValueError("nothing to dump for an incomplete enumeration")
    lines = [f"# presentation {presentation_hash(result.presentation, result.subgroup)}"
             f"\tindex {result.index}"]
    lines.extend("\t".join(map(str, row)) for row in result.table)
    return "\n".join(lines) + "\n"


def load_table(text: str) -> tuple[str, tuple[tuple[int, ...], ...]]:
    """Inverse of :func:`dump_table`; returns ``(hash, rows)``."""
    lines = text.strip("\n").split("\n")
    head = lines[0].split()
    if head[:2] != ["#", "presentation"] or head[3] != "index":
        raise ValueError("missing table header")
    rows = tuple(tuple(int(v) for v in line.split("\t")) for line in lines[1:])
    if len(rows) != int(head[4]):
        raise ValueError("row count does not match the header index")
    return head[2], rows
