"""Finite groups as multiplication tables, plus the built-in battery."""

from __future__ import annotations

import itertools
import random
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np


class GroupValidationError(ValueError):
    pass


class GroupFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FiniteGroup:
    """Finite group given by its Cayley table.

    ``table[i, j]`` is the index of the product of elements i and j.  The
    group axioms are validated on construction: exhaustively up to order 64
    and on random triples beyond that.
    """

    FULL_CHECK_LIMIT = 64

    def __init__(self, table, labels: Sequence | None = None, name: str = "", validate: bool = True):
        self.table = np.asarray(table, dtype=np.int64)
        n = self.table.shape[0]
        if self.table.shape != (n, n):
            raise GroupValidationError("multiplication table must be square")
        self.order = n
        self.labels = list(labels) if labels is not None else list(range(n))
        self.name = name
        ids = [e for e in range(n) if np.array_equal(self.table[e], np.arange(n))]
        if not ids:
            raise GroupValidationError("no identity element")
        self.identity = ids[0]
        if validate:
            self._validate()
        inv = np.empty(n, dtype=np.int64)
        for x in range(n):
            inv[x] = int(np.nonzero(self.table[x] == self.identity)[0][0])
        self.inverse = inv
        self._index = None

    def _validate(self) -> None:
        t, n = self.table, self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupValidationError("table entries out of range")
        if not np.array_equal(t[:, self.identity], np.arange(n)):
            raise GroupValidationError("identity is not two-sided")
        for row in t:
            if len(set(row.tolist())) != n:
                raise GroupValidationError("a row is not a permutation (no inverses)")
        if n <= self.FULL_CHECK_LIMIT:
            if not np.array_equal(t[t], t[:, t]):
                raise GroupValidationError("multiplication is not associative")
        else:
            rng = random.Random(0)
            for _ in range(20000):
                x, y, z = (rng.randrange(n) for _ in range(3))
                if t[t[x, y], z] != t[x, t[y, z]]:
                    raise GroupValidationError("multiplication is not associative")

    # element arithmetic -----------------------------------------------
    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def product(self, xs: Iterable[int]) -> int:
        out = self.identity
        for x in xs:
            out = int(self.table[out, x])
        return out

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        out = self.identity
        for _ in range(k):
            out = int(self.table[out, x])
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = int(self.table[y, x])
            k += 1
        return k

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (self.element_order(x) for x in range(self.order)), 1)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def eval_word(self, w: Sequence[int], images: Sequence[int]) -> int:
        out = self.identity
        t = self.table
        for x in w:
            g = images[abs(x) - 1]
            out = int(t[out, g if x > 0 else self.inverse[g]])
        return out

    def generated_by(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def index_of(self, label) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def key(self) -> bytes:
        return self.table.tobytes()

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order'} {self.order})"

    # serialization ------------------------------------------------------
    def to_table_text(self) -> str:
        lines = [f"order {self.order}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.table]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def from_elements(elements: Iterable[Hashable], mul: Callable, name: str = "", identity=None) -> FiniteGroup:
    """Cayley table of a finite set closed under ``mul``.

    When ``identity`` is given it is listed first.
    """
    elems = list(elements)
    if identity is not None and identity in elems:
        elems.remove(identity)
        elems.insert(0, identity)
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            try:
                table[i, j] = idx[mul(x, y)]
            except KeyError:
                raise GroupValidationError("set is not closed under multiplication") from None
    return FiniteGroup(table, labels=elems, name=name)


def closure(gens: Sequence[Hashable], mul: Callable, identity: Hashable, limit: int = 10**6) -> list:
    """Elements generated by ``gens`` under ``mul``, in breadth-first order."""
    seen = {identity: None}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
                    if len(seen) > limit:
                        raise OverflowError(f"closure exceeds {limit} elements")
        frontier = nxt
    return list(seen)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], labels=["e"], name="1")


def cyclic_group(n: int) -> FiniteGroup:
    """C_n with element k standing for the k-th power of the generator."""
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str = "") -> FiniteGroup:
    n, m = g.order, h.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    for a in range(n):
        for b in range(m):
            for c in range(n):
                for d in range(m):
                    table[a * m + b, c * m + d] = g.table[a, c] * m + h.table[b, d]
    labels = [(x, y) for x in g.labels for y in h.labels]
    return FiniteGroup(table, labels=labels, name=name or f"{g.name}x{h.name}")


def _compose(p: tuple, q: tuple) -> tuple:
    # apply p first, then q  (left-to-right convention, as in GAP)
    return tuple(q[i] for i in p)


def permutation_group(gens: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group generated by permutations of {0..n-1} (images lists), composed left to right."""
    gens = [tuple(g) for g in gens]
    n = len(gens[0]) if gens else 1
    ident = tuple(range(n))
    elems = sorted(closure(gens, _compose, ident))
    return from_elements(elems, _compose, name=name, identity=ident)


def symmetric_group_3() -> FiniteGroup:
    """S_3 on {1,2,3} generated by (1 2 3) and (1 2)."""
    return permutation_group([(1, 2, 0), (1, 0, 2)], name="S3")


def semidirect_c9_c3(multiplier: int = 4) -> FiniteGroup:
    """C_9 x| C_3 where the generator of C_3 acts on C_9 by multiplication."""
    if pow(multiplier, 3, 9) != 1:
        raise ValueError("multiplier must have order dividing 3 mod 9")
    elems = [(x, k) for k in range(3) for x in range(9)]

    def mul(p, q):
        (x, k), (y, l) = p, q
        return ((x + pow(multiplier, k, 9) * y) % 9, (k + l) % 3)

    return from_elements(elems, mul, name="C9:C3", identity=(0, 0))


def _mat3_mod3_mul(x, y):
    return tuple(
        sum(x[3 * i + k] * y[3 * k + j] for k in range(3)) % 3 for i in range(3) for j in range(3)
    )


def heisenberg_3() -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_3 (exponent 3)."""
    elems = [(1, x, z, 0, 1, y, 0, 0, 1) for x in range(3) for y in range(3) for z in range(3)]
    return from_elements(elems, _mat3_mod3_mul, name="Heis3", identity=(1, 0, 0, 0, 1, 0, 0, 0, 1))


def c9_x_c3() -> FiniteGroup:
    return direct_product(cyclic_group(9), cyclic_group(3), name="C9xC3")


def battery() -> dict[str, FiniteGroup]:
    """Target groups used by the classification cross-checks."""
    return {
        "S3": symmetric_group_3(),
        "C9:C3": semidirect_c9_c3(),
        "Heis3": heisenberg_3(),
        "C9xC3": c9_x_c3(),
    }


# ---------------------------------------------------------------------------
# ingestion
# ---------------------------------------------------------------------------


def _parse_cycles(text: str, degree: int, lineno: int) -> tuple[int, ...]:
    perm = list(range(degree))
    text = text.strip()
    if text in ("", "()"):
        return tuple(perm)
    if not (text.startswith("(") and text.endswith(")")):
        raise GroupFormatError("expected cycles like (1 2 3)(4 5)", lineno)
    for chunk in text[1:-1].split(")("):
        pts = chunk.replace(",", " ").split()
        try:
            cyc = [int(p) - 1 for p in pts]
        except ValueError:
            raise GroupFormatError(f"bad cycle {chunk!r}", lineno) from None
        if any(not 0 <= p < degree for p in cyc) or len(set(cyc)) != len(cyc):
            raise GroupFormatError(f"bad cycle {chunk!r} for degree {degree}", lineno)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    return tuple(perm)


def parse_group(text: str, name: str = "") -> FiniteGroup:
    """Parse a group file.

    Two formats, both shown for S_3::

        order 6                 perm 3
        0 1 2 3 4 5             (1 2 3)
        1 2 0 5 3 4             (1 2)
        ...

    A multiplication table lists n rows of n 0-based indices; a permutation
    file gives the degree and then one generator per line in cycle notation
    on points 1..n.
    """
    lines = [(i, l.split("#", 1)[0].strip()) for i, l in enumerate(text.splitlines(), 1)]
    lines = [(i, l) for i, l in lines if l]
    if not lines:
        raise GroupFormatError("empty group file")
    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] not in ("order", "perm"):
        raise GroupFormatError("first line must be 'order n' or 'perm n'", head_no)
    try:
        n = int(parts[1])
    except ValueError:
        raise GroupFormatError(f"bad size {parts[1]!r}", head_no) from None
    if n < 1:
        raise GroupFormatError("size must be positive", head_no)
    body = lines[1:]
    if parts[0] == "order":
        if len(body) != n:
            raise GroupFormatError(f"expected {n} table rows, found {len(body)}", head_no)
        rows = []
        for lineno, line in body:
            try:
                row = [int(v) for v in line.split()]
            except ValueError:
                raise GroupFormatError("non-integer table entry", lineno) from None
            if len(row) != n:
                raise GroupFormatError(f"expected {n} entries, found {len(row)}", lineno)
            rows.append(row)
        try:
            return FiniteGroup(rows, name=name)
        except GroupValidationError as exc:
            raise GroupFormatError(str(exc)) from None
    gens = [_parse_cycles(line, n, lineno) for lineno, line in body]
    if not gens:
        gens = [tuple(range(n))]
    return permutation_group(gens, name=name)


def load_group(path: str | Path) -> FiniteGroup:
    path = Path(path)
    return parse_group(path.read_text(), name=path.stem)


def all_tuples(n: int, k: int):
    return itertools.product(range(n), repeat=k)
