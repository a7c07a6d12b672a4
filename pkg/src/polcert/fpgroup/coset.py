"""Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Column ``2*(g-1)`` of the table holds the action of generator g and column
``2*(g-1)+1`` that of its inverse.  Coincidences are processed with the
standard union-find queue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .words import Word, letters_in_order


def _col(x: int) -> int:
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


@dataclass
class CosetTable:
    generator_count: int
    rows: list[list[int]]
    complete: bool
    defined: int  # total cosets defined during the run

    @property
    def status(self) -> str:
        return "complete" if self.complete else "overflowed"

    @property
    def index(self) -> int | None:
        return len(self.rows) if self.complete else None

    def __len__(self):
        return len(self.rows)

    def act(self, coset: int, w: Sequence[int]) -> int:
        for x in w:
            coset = self.rows[coset][_col(x)]
        return coset

    def permutations(self) -> list[tuple[int, ...]]:
        """Permutation of the cosets induced by each generator."""
        return [tuple(row[2 * g] for row in self.rows) for g in range(self.generator_count)]

    def check(self, relators: Sequence[Sequence[int]], subgroup_gens: Sequence[Sequence[int]] = ()) -> bool:
        """Exhaustive consistency check of a complete table."""
        if not self.complete:
            return False
        n = len(self.rows)
        for row in self.rows:
            for g in range(self.generator_count):
                img = row[2 * g]
                if not 0 <= img < n:
                    return False
        for c in range(n):
            for g in range(self.generator_count):
                if self.rows[self.rows[c][2 * g]][2 * g + 1] != c:
                    return False
            for r in relators:
                if self.act(c, r) != c:
                    return False
        return all(self.act(0, h) == 0 for h in subgroup_gens)


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p = [0]  # union-find parent; p[c] == c for live cosets
        self.live = 1
        self.max_cosets = max_cosets
        self.defined = 1

    def rep(self, c: int) -> int:
        p = self.p
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def define(self, c: int, x: int) -> bool:
        if self.live >= self.max_cosets:
            return False
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(d)
        self.live += 1
        self.defined += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return True

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        a, b = self.rep(k), self.rep(l)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.p[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f is None:
                    continue
                table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] is not None:
                    self.merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] is not None:
                    self.merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan(self, c: int, w: Sequence[int], fill: bool) -> bool:
        """Scan coset c under relator w; returns False if a needed definition hit the limit."""
        table = self.table
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return True
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return True
            if not fill or not self.define(f, w[i]):
                return not fill

    def alive(self, c: int) -> bool:
        return self.p[c] == c


def todd_coxeter(
    p: Presentation,
    subgroup_gens: Sequence[Sequence[int]] = (),
    max_cosets: int = 100_000,
    max_lookaheads: int = 1000,
) -> CosetTable:
    """Enumerate the cosets of <subgroup_gens> in the group presented by p.

    On success the table is standardized (cosets numbered in order of first
    appearance under a breadth-first walk through columns in generator
    order) and ``complete`` is True.  Hitting ``max_cosets`` live cosets
    returns an incomplete table: the index is then unknown, not infinite.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    n = p.generator_count
    rels = [[_col(x) for x in r] for r in p.relators]
    hgens = [[_col(x) for x in Word(h)] for h in subgroup_gens]
    en = _Enumerator(n, max_cosets)

    for h in hgens:
        if not en.scan(0, h, fill=True):
            return CosetTable(n, [], False, en.defined)

    lookaheads = 0
    c = 0
    while c < len(en.table):
        if en.alive(c):
            ok = True
            for r in rels:
                if not en.alive(c):
                    break
                if not en.scan(c, r, fill=True):
                    ok = False
                    break
            if ok and en.alive(c):
                for x in range(en.ncols):
                    if en.table[c][x] is None and not en.define(c, x):
                        ok = False
                        break
            if not ok:
                lookaheads += 1
                if lookaheads > max_lookaheads or not _lookahead(en, rels):
                    return CosetTable(n, [], False, en.defined)
                continue  # redo coset c with the recovered space
        c += 1
    return CosetTable(n, _standardize(en), True, en.defined)


def _lookahead(en: _Enumerator, rels) -> bool:
    """Scan every live coset without defining; True if space was recovered."""
    before = en.live
    for c in range(len(en.table)):
        for r in rels:
            if not en.alive(c):
                break
            en.scan(c, r, fill=False)
    return en.live < before


def _standardize(en: _Enumerator) -> list[list[int]]:
    order = [0]
    index = {0: 0}
    i = 0
    while i < len(order):
        c = order[i]
        i += 1
        for x in range(en.ncols):
            d = en.rep(en.table[c][x])
            if d not in index:
                index[d] = len(order)
                order.append(d)
    return [[index[en.rep(en.table[c][x])] for x in range(en.ncols)] for c in order]


def group_order(p: Presentation, max_cosets: int = 100_000) -> int | None:
    """Order of the presented group, or None if enumeration overflowed."""
    return todd_coxeter(p, (), max_cosets).index


__all__ = ["CosetTable", "todd_coxeter", "group_order", "letters_in_order"]
