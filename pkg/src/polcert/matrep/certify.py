"""Infinite-order certificates, bounded relation search and nilpotency witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..exactfields import RatFuncGF3
from ..fpgroup.words import Word, commutator, format_word, letters_in_order, substitute
from .mat3 import Mat3

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------- infinite order

@dataclass
class OrderVerdict:
    word: str
    verdict: str
    power: int | None = None
    trace: str | None = None
    traces: list[str] = field(default_factory=list)


def infinite_order_certificate(ev_rho, w: Sequence[int], max_power: int = 3) -> OrderVerdict:
    """Certify infinite order when some M^j (j <= max_power) has non-constant trace.

    A finite-order M in SL_3(F_3(t)) has eigenvalues that are roots of unity,
    so every power has trace algebraic over F_3, i.e. constant in F_3(t).
    All-constant traces prove nothing, so the verdict is then inconclusive.
    """
    if ev_rho.field is not RatFuncGF3 or ev_rho.mode != "exact":
        raise ValueError("the trace criterion needs the exact characteristic-3 evaluator")
    m = ev_rho.raw(w)
    p = m
    traces = []
    for j in range(1, max_power + 1):
        tr = p.trace()
        traces.append(str(tr))
        if not tr.is_constant():
            return OrderVerdict(format_word(w), CERTIFIED, j, str(tr), traces)
        p = p * m
    return OrderVerdict(format_word(w), INCONCLUSIVE, None, None, traces)


# ---------------------------------------------------------------- bounded relations

@dataclass
class RelationVerdict:
    length_bound: int
    words_checked: int
    relations: list[str]

    @property
    def relation_found(self) -> bool:
        return bool(self.relations)


def bounded_no_relation(ev, x: Sequence[int], y: Sequence[int], L: int, stop_at_first: bool = False) -> RelationVerdict:
    """Every freely reduced nonempty word of length <= L in x, y evaluated by depth-first search.

    A word that evaluates to the identity (a scalar in projective mode) is
    reported.  Finding none is evidence of freeness, not a proof.
    """
    X, Y = ev.raw(x), ev.raw(y)
    imgs = {1: X, -1: X.inverse(), 2: Y, -2: Y.inverse()}
    letters = letters_in_order(2)
    relations: list[str] = []
    count = 0
    names = "xy"

    def rec(w: list[int], m: Mat3) -> bool:
        nonlocal count
        for s in letters:
            if w and w[-1] == -s:
                continue
            mm = imgs[s] if not w else m * imgs[s]
            w.append(s)
            count += 1
            if ev.is_trivial(mm):
                relations.append(format_word(w, names))
                if stop_at_first:
                    return True
            if len(w) < L and rec(w, mm):
                return True
            w.pop()
        return False

    rec([], Mat3.identity(ev.field))
    return RelationVerdict(L, count, relations)


# ---------------------------------------------------------------- nilpotency

class _Trunc:
    """Matrices over F_3[u]/(u^n) as (n, 3, 3) coefficient arrays."""

    def __init__(self, n: int):
        self.n = n
        self.I = np.zeros((n, 3, 3), dtype=np.int64)
        self.I[0] = np.eye(3, dtype=np.int64)

    def encode(self, m: Mat3) -> np.ndarray:
        out = np.zeros((self.n, 3, 3), dtype=np.int64)
        for k, x in enumerate(m.entries):
            if x.is_zero():
                continue
            if not x.is_polynomial():
                raise ValueError("entry is not in F_3[u]")
            for e, c in enumerate(x.num.coeffs):
                if c and e % 3:
                    raise ValueError("entry is not in F_3[u]")
                if c and e // 3 < self.n:
                    out[e // 3, k // 3, k % 3] = c
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.zeros_like(a)
        for s in range(self.n):
            for t in range(self.n - s):
                out[s + t] += a[s] @ b[t]
        return out % 3

    def inv(self, a: np.ndarray) -> np.ndarray:
        """Inverse of I + N with N = 0 mod u: the finite geometric series."""
        N = (a - self.I) % 3
        if N[0].any():
            raise ValueError("not congruent to I mod u")
        out = self.I.copy()
        term = self.I.copy()
        negN = (-N) % 3
        for _ in range(1, self.n):
            term = self.mul(term, negN)
            out = (out + term) % 3
        return out

    def comm(self, a, b, ai=None, bi=None) -> np.ndarray:
        ai = self.inv(a) if ai is None else ai
        bi = self.inv(b) if bi is None else bi
        return self.mul(self.mul(a, b), self.mul(ai, bi))

    def is_identity(self, a) -> bool:
        return bool((a == self.I).all())


@dataclass
class NilpotencyWitness:
    n: int
    depth: int
    chain: list[int]  # indices into level_words, innermost first
    word: Word | None
    exhaustive_next_depth: bool | None  # all depth+1 commutators of generators trivial (None: not checked)


def nested_commutator_word(level_words: Sequence[Sequence[int]], chain: Sequence[int]) -> Word:
    """[x_k, [..., [x_2, x_1]]] for chain = (1, 2, ..., k)."""
    w = Word(level_words[chain[0]])
    for i in chain[1:]:
        w = commutator(level_words[i], w)
    return w


def nilpotency_witness(ev_rho, level_words: Sequence[Sequence[int]], n: int, exhaustive_limit: int = 10**5) -> NilpotencyWitness:
    """Deepest nested commutator of level-1 images that is nontrivial mod u^n.

    Depth 1 means a single nontrivial generator.  Since [level i, level j]
    lies in level i + j, depth n is always trivial; the search stops at n - 1.
    When the number of depth-(found+1) chains is at most ``exhaustive_limit``
    they are all checked as well.
    """
    T = _Trunc(n)
    mats = [T.encode(ev_rho.raw(w)) for w in level_words]
    for m in mats:
        if m[0].any() and not (m[0] == np.eye(3, dtype=np.int64)).all():
            raise ValueError("level word is not congruent to I mod u")
    invs = [T.inv(m) for m in mats]
    best: list[int] = []

    def dfs(chain: list[int], cur: np.ndarray, cur_inv: np.ndarray) -> bool:
        nonlocal best
        if len(chain) > len(best):
            best = list(chain)
        if len(chain) >= n - 1:
            return True
        for i, (m, mi) in enumerate(zip(mats, invs)):
            c = T.comm(m, cur, mi, cur_inv)
            if not T.is_identity(c):
                chain.append(i)
                if dfs(chain, c, T.comm(cur, m, cur_inv, mi)):
                    return True
                chain.pop()
        return False

    for i, m in enumerate(mats):
        if not T.is_identity(m):
            if dfs([i], m, invs[i]):
                break
    depth = len(best)

    exhaustive = None
    k = len(mats)
    if k ** (depth + 1) <= exhaustive_limit:
        exhaustive = _all_trivial(T, mats, invs, depth + 1)
    word = nested_commutator_word(level_words, best) if best else None
    return NilpotencyWitness(n, depth, best, word, exhaustive)


def _all_trivial(T: _Trunc, mats, invs, depth: int) -> bool:
    """Every nested commutator of ``depth`` generators is trivial."""
    def rec(cur, cur_inv, d) -> bool:
        if d == depth:
            return T.is_identity(cur)
        for m, mi in zip(mats, invs):
            if not rec(T.comm(m, cur, mi, cur_inv), T.comm(cur, m, cur_inv, mi), d + 1):
                return False
        return True

    return all(rec(m, mi, 1) for m, mi in zip(mats, invs))


def words_in_ab(words: Sequence[Sequence[int]], generators: Sequence[Sequence[int]]) -> list[Word]:
    """Substitute words over generators 1..k by the given a, b words."""
    return [substitute(w, generators) for w in words]
