"""Bounded breadth-first search for words evaluating to elementary matrices.

Words are explored layer by layer in shortlex order (letters
1 < -1 < 2 < -2 < ...), so the first hit is the shortlex-least word among
those not pruned.  Matrices already reached by a shorter word are not
expanded again.  Optionally a meet-in-the-middle pass matches the target
against products of two stored words.  Every returned word is re-evaluated
with the exact evaluator before it is reported.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ..exactfields import Eisen, RatFuncGF3
from ..fpgroup.words import Word, free_reduce, inverse, letters_in_order
from .mat3 import Mat3, projective


@dataclass(frozen=True)
class ElementaryTarget:
    """E_ij(x): identity plus x at (i, j), 1-based.  i == j == 0 means identity.

    In char 3 x = u^exponent (u = t^3); in char 0 x = 3^exponent.
    """

    i: int
    j: int
    exponent: int
    char: int = 3

    @property
    def is_identity(self) -> bool:
        return self.i == 0

    def label(self) -> str:
        if self.is_identity:
            return "identity"
        x = f"u^{self.exponent}" if self.char == 3 else f"3^{self.exponent}"
        return f"E{self.i}{self.j}:{x}"

    def value(self):
        if self.char == 3:
            return RatFuncGF3.t(3 * self.exponent)
        return Eisen(3**self.exponent)

    def matrix(self) -> Mat3:
        field_ = RatFuncGF3 if self.char == 3 else Eisen
        if self.is_identity:
            return Mat3.identity(field_)
        return Mat3.elementary(self.i - 1, self.j - 1, self.value(), field_)


_TARGET_RE = re.compile(r"^E([123])([123]):(?:u\^?(\d+)|u|3\^?(\d*))$")


def parse_target(text: str, char: int = 3) -> ElementaryTarget:
    """'identity', 'E13:u^2' (char 3) or 'E13:3' / 'E13:3^2' (char 0)."""
    text = text.strip().replace(" ", "")
    if text in ("identity", "I", "1"):
        return ElementaryTarget(0, 0, 0, char)
    m = _TARGET_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse target {text!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if i == j:
        raise ValueError("elementary targets need i != j")
    if "u" in text:
        if char != 3:
            raise ValueError("u-targets are characteristic 3")
        return ElementaryTarget(i, j, int(m.group(3) or 1), 3)
    if char != 0:
        raise ValueError("3-adic targets are characteristic 0")
    return ElementaryTarget(i, j, int(m.group(4) or 1), 0)


def all_elementary_targets(exponents: Sequence[int] = (2, 3), char: int = 3) -> list[ElementaryTarget]:
    return [ElementaryTarget(i, j, k, char) for k in exponents for i in (1, 2, 3) for j in (1, 2, 3) if i != j]


# ---------------------------------------------------------------- backends


class _PolyBackend:
    """Matrices over F_3[u] as (D+1, 3, 3) coefficient arrays; degree > D is pruned."""

    def __init__(self, max_degree: int):
        self.D = max_degree

    def encode(self, m: Mat3):
        arr = np.zeros((self.D + 1, 3, 3), dtype=np.int64)
        for k, x in enumerate(m.entries):
            if x.is_zero():
                continue
            if not x.is_polynomial():
                raise ValueError("search generators must be polynomial in u")
            for e, c in enumerate(x.num.coeffs):
                if c:
                    if e % 3:
                        raise ValueError("entry is not in F_3[u]")
                    if e // 3 > self.D:
                        return None
                    arr[e // 3, k // 3, k % 3] = c
        return arr

    def mul(self, x, y):
        D = self.D
        out = np.zeros((2 * D + 1, 3, 3), dtype=np.int64)
        for s in range(D + 1):
            xs = x[s]
            if xs.any():
                out[s:s + D + 1] += np.matmul(xs, y)
        out %= 3
        if out[D + 1:].any():
            return None
        return out[: D + 1]

    def key(self, x) -> bytes:
        return x.astype(np.int8).tobytes()


class _EisenBackend:
    """Z[omega] matrices of det 1 keyed projectively; coefficients above H are pruned."""

    def __init__(self, max_height: int):
        self.H = max_height

    def _ok(self, m: Mat3) -> bool:
        return all(abs(x.a) <= self.H and abs(x.b) <= self.H for x in m.entries)

    def encode(self, m: Mat3):
        return m if self._ok(m) else None

    def mul(self, x, y):
        z = x * y
        return z if self._ok(z) else None

    def key(self, x):
        return projective(x)


# ---------------------------------------------------------------- search


@dataclass
class SearchResult:
    target: str
    found: bool
    word: Word | None = None
    verified: bool = False
    reason: str = ""
    nodes: int = 0
    depth_reached: int = 0
    elapsed_ms: float = 0.0
    bounds: dict = field(default_factory=dict)


def elementary_word_search(
    ev,
    generators: Sequence[Sequence[int]],
    target: ElementaryTarget,
    max_len: int = 12,
    max_entry_degree: int = 6,
    budget_ms: float | None = None,
    max_nodes: int = 2_000_000,
    meet_in_middle: bool = False,
    assist: Mapping[str, Sequence[int]] | None = None,
) -> SearchResult:
    """Shortest word (in ``generators`` and inverses) hitting ``target``.

    ``assist`` maps target labels to already verified a, b words.  When it
    holds E_ij(u^2) and the target is E_ij(u^n), n > 2, any hit on
    E_ij(c u^2 + d u^n) (c in F_3, d = +-1) is also accepted: multiplying by
    E_ij(u^2)^-c and raising to the power d gives the target, because
    E_ij(f) E_ij(g) = E_ij(f + g).

    ``ev`` evaluates words in a, b (rho in char 3, pi in char 0); the
    returned word is in a, b.  In char 0 the generators are descended to
    det-1 Z[omega] matrices and ``max_entry_degree`` is read as a bound on
    the integer coordinates of the entries.
    """
    start = time.perf_counter()
    bounds = {"max_len": max_len, "max_entry_degree": max_entry_degree, "budget_ms": budget_ms,
              "max_nodes": max_nodes, "meet_in_middle": meet_in_middle}
    res = SearchResult(target.label(), False, bounds=bounds)
    if target.is_identity:
        res.found, res.word, res.verified, res.reason = True, Word(), True, "empty word"
        return res

    backend = _PolyBackend(max_entry_degree) if target.char == 3 else _EisenBackend(max_entry_degree)
    gen_mats = [_integral_image(ev, g, target.char) for g in generators]
    ng = len(generators)
    letters = letters_in_order(ng)
    enc = {}
    for x in letters:
        m = gen_mats[x - 1] if x > 0 else gen_mats[-x - 1].inverse()
        enc[x] = backend.encode(m)
    tmat = target.matrix()
    if backend.encode(tmat) is None:
        res.reason = "target exceeds the entry bound (inconclusive)"
        return res

    tmats = [tmat]
    combos = [(0, 1)]
    helper = None
    if assist and target.char == 3 and target.exponent > 2:
        helper = assist.get(ElementaryTarget(target.i, target.j, 2, 3).label())
        if helper is not None:
            u2 = RatFuncGF3.t(6)
            for c in range(3):
                for d in (1, 2):
                    if (c, d) != (0, 1):
                        f = u2 * RatFuncGF3(c) + target.value() * RatFuncGF3(d)
                        tmats.append(Mat3.elementary(target.i - 1, target.j - 1, f, RatFuncGF3))
                        combos.append((c, d))
            tmats = [m for m in tmats if backend.encode(m) is not None]
            combos = combos[: len(tmats)]

    def finish(found_word: tuple[int, ...] | None, reason: str, which: int = 0) -> SearchResult:
        res.elapsed_ms = (time.perf_counter() - start) * 1000
        res.reason = reason
        if found_word is None:
            return res
        ab_word = Word([y for x in found_word for y in (generators[x - 1] if x > 0 else inverse(generators[-x - 1]))])
        c, d = combos[which]
        if (c, d) != (0, 1):
            ab_word = (ab_word * Word(helper) ** (-c)) ** d
            res.reason += f"; assembled from E_ij({c}u^2 + {d}u^{target.exponent}) and the known E_ij(u^2) word"
        m = _integral_image(ev, ab_word, target.char)
        ok = m == tmat if target.char == 3 else projective(m) == projective(tmat)
        res.found, res.word, res.verified = ok, ab_word, ok
        if not ok:
            res.reason = "candidate failed post-verification (discarded)"
            res.word = None
        return res

    if target.char == 3:
        found, which, reason, nodes, depth = _search_poly(
            backend, enc, letters, tmats, max_len, start, budget_ms, max_nodes, meet_in_middle
        )
    else:
        which = 0
        found, reason, nodes, depth = _search_scalar(backend, enc, letters, tmat, max_len, start, budget_ms, max_nodes)
    res.nodes, res.depth_reached = nodes, depth
    return finish(found, reason, which)


def _over_budget(start, budget_ms) -> bool:
    return budget_ms is not None and (time.perf_counter() - start) * 1000 > budget_ms


def _search_scalar(backend, enc, letters, tmat, max_len, start, budget_ms, max_nodes):
    ident = backend.encode(Mat3.identity(tmat.field))
    tkey = backend.key(backend.encode(tmat))
    visited = {backend.key(ident)}
    layer = [((), ident)]
    nodes = 0
    for length in range(1, max_len + 1):
        nxt = []
        for w, m in layer:
            for x in letters:
                if w and w[-1] == -x or enc[x] is None:
                    continue
                nodes += 1
                y = backend.mul(m, enc[x])
                if y is None:
                    continue
                k = backend.key(y)
                if k in visited:
                    continue
                visited.add(k)
                wx = w + (x,)
                if k == tkey:
                    return wx, f"found at length {length}", nodes, length
                nxt.append((wx, y))
            if nodes > max_nodes:
                return None, "node budget exhausted (inconclusive)", nodes, length - 1
            if _over_budget(start, budget_ms):
                return None, "time budget exhausted (inconclusive)", nodes, length - 1
        if not nxt:
            return None, f"search space exhausted at length {length} within the height bound", nodes, length
        layer = nxt
    return None, f"not found up to length {max_len} within the height bound (inconclusive)", nodes, max_len


# Vectorized search over F_3[u]: a whole BFS layer is one (N, D+1, 3, 3)
# array.  Nodes are deduplicated by a 64-bit linear hash of the coefficient
# array; a collision can only hide a node, never produce a wrong answer,
# because every hit is re-evaluated exactly.

_HASH_SEED = 20240917


def _hash_weights(size: int) -> np.ndarray:
    rng = np.random.default_rng(_HASH_SEED)
    return rng.integers(1, 2**62, size=size, dtype=np.int64)


def _rmul(X: np.ndarray, G: np.ndarray, D: int):
    """X @ G for a batch X and a single G, truncated to degree D; returns (product, fits)."""
    n = X.shape[0]
    out = np.zeros((n, 2 * D + 1, 3, 3), dtype=np.int16)
    for t in range(D + 1):
        if G[t].any():
            out[:, t:t + D + 1] += np.matmul(X, G[t])
    out %= 3
    fits = ~out[:, D + 1:].reshape(n, -1).any(axis=1)
    return out[:, : D + 1].astype(np.int8), fits


def _lmul(G: np.ndarray, X: np.ndarray, D: int):
    """G @ X for a single G and a batch X."""
    n = X.shape[0]
    out = np.zeros((n, 2 * D + 1, 3, 3), dtype=np.int16)
    for t in range(D + 1):
        if G[t].any():
            out[:, t:t + D + 1] += np.matmul(G[t], X)
    out %= 3
    fits = ~out[:, D + 1:].reshape(n, -1).any(axis=1)
    return out[:, : D + 1].astype(np.int8), fits


class _Layer:
    __slots__ = ("M", "Minv", "inv_ok", "h", "parent", "letter", "order")

    def __init__(self, M, Minv, inv_ok, h, parent, letter):
        self.M, self.Minv, self.inv_ok, self.h = M, Minv, inv_ok, h
        self.parent, self.letter = parent, letter
        self.order = np.argsort(h, kind="stable")

    def find(self, hashes: np.ndarray) -> np.ndarray:
        """Index of each hash in this layer, or -1."""
        sh = self.h[self.order]
        pos = np.searchsorted(sh, hashes)
        pos = np.minimum(pos, len(sh) - 1)
        hit = sh[pos] == hashes if len(sh) else np.zeros(len(hashes), bool)
        return np.where(hit, self.order[pos] if len(sh) else -1, -1)


def _word_of(layers: list, li: int, idx: int) -> tuple[int, ...]:
    out = []
    while li > 0:
        L = layers[li]
        out.append(int(L.letter[idx]))
        idx = int(L.parent[idx])
        li -= 1
    return tuple(reversed(out))


def _search_poly(backend, enc, letters, tmats, max_len, start, budget_ms, max_nodes, meet_in_middle):
    """Returns (word in generator letters, index of the target hit, reason, nodes, depth)."""
    D = backend.D
    W = _hash_weights(9 * (D + 1))

    def hashes(M):
        return (M.reshape(M.shape[0], -1).astype(np.int64) * W).sum(axis=1)

    Ts = [backend.encode(m).astype(np.int8) for m in tmats]
    ths = hashes(np.stack(Ts))
    gens = [(x, enc[x].astype(np.int8), enc[-x].astype(np.int8)) for x in letters if enc[x] is not None and enc[-x] is not None]

    I = backend.encode(Mat3.identity(RatFuncGF3)).astype(np.int8)[None]
    layers = [_Layer(I, I.copy(), np.ones(1, bool), hashes(I), np.zeros(1, np.int64), np.zeros(1, np.int64))]
    seen = np.sort(layers[0].h)
    nodes = 0
    for length in range(1, max_len + 1):
        prev = layers[-1]
        n = len(prev.h)
        k = len(gens)
        if len(seen) + n * k > 4 * max_nodes:
            return None, 0, "node budget exhausted (inconclusive)", nodes, length - 1
        parts = []
        for lo in range(0, n, _CHUNK):
            hi = min(n, lo + _CHUNK)
            parts.append(_expand(prev, lo, hi, gens, D, length, hashes, seen))
        nodes += n * k
        M = np.concatenate([p[0] for p in parts])
        Mi = np.concatenate([p[1] for p in parts])
        iok = np.concatenate([p[2] for p in parts])
        h = np.concatenate([p[3] for p in parts])
        par = np.concatenate([p[4] for p in parts])
        let = np.concatenate([p[5] for p in parts])
        _, first = np.unique(h, return_index=True)
        idx = np.sort(first)
        layer = _Layer(M[idx], Mi[idx], iok[idx], h[idx], par[idx], let[idx])
        layers.append(layer)
        seen = np.union1d(seen, layer.h)
        for ti, th in enumerate(ths):
            hit = np.nonzero(layer.h == th)[0]
            if len(hit):
                return _word_of(layers, length, int(hit[0])), ti, f"found at length {length}", nodes, length
        if meet_in_middle and len(layer.h):
            for ti, T in enumerate(Ts):
                w = _meet_poly(layers, T, D, hashes)
                if w is not None:
                    return w, ti, f"found by meet-in-the-middle (halves up to length {length})", nodes, length
        if not len(layer.h):
            return None, 0, f"search space exhausted at length {length} within the degree bound", nodes, length
        if len(seen) > max_nodes:
            return None, 0, "node budget exhausted (inconclusive)", nodes, length
        if _over_budget(start, budget_ms):
            return None, 0, "time budget exhausted (inconclusive)", nodes, length
    return None, 0, f"not found up to length {max_len} within the degree bound (inconclusive)", nodes, max_len


_CHUNK = 50_000


def _expand(prev, lo, hi, gens, D, length, hashes, seen):
    """Children of parents lo..hi-1 in parent-major order, minus pruned and seen ones."""
    n = hi - lo
    k = len(gens)
    bM, bMi, bok, bfit = [], [], [], []
    for x, G, Gi in gens:
        M, fits = _rmul(prev.M[lo:hi], G, D)
        Mi, iok = _lmul(Gi, prev.Minv[lo:hi], D)
        if length > 1:
            fits &= prev.letter[lo:hi] != -x
        bM.append(M)
        bMi.append(Mi)
        bok.append(iok & prev.inv_ok[lo:hi])
        bfit.append(fits)
    M = np.stack(bM, 1).reshape(n * k, D + 1, 3, 3)
    Mi = np.stack(bMi, 1).reshape(n * k, D + 1, 3, 3)
    iok = np.stack(bok, 1).reshape(-1)
    keep = np.stack(bfit, 1).reshape(-1)
    par = np.repeat(np.arange(lo, hi), k)
    let = np.tile(np.array([g[0] for g in gens]), n)
    h = hashes(M)
    keep &= ~np.isin(h, seen)
    idx = np.nonzero(keep)[0]
    return M[idx], Mi[idx], iok[idx], h[idx], par[idx], let[idx]


def _meet_poly(layers, T, D, hashes):
    """x * y = T with y in the newest layer (x = T y^-1) or x in it (y = x^-1 T)."""
    new = layers[-1]
    ok = np.nonzero(new.inv_ok)[0]
    if not len(ok):
        return None
    # x = T * y^-1
    X, fits = _lmul(T, new.Minv[ok], D)
    # y = x^-1 * T
    Y, fits2 = _rmul(new.Minv[ok], T, D)
    for P, fit, newest_first in ((X, fits, False), (Y, fits2, True)):
        hp = hashes(P)
        for li, L in enumerate(layers):
            pos = L.find(hp)
            good = np.nonzero((pos >= 0) & fit)[0]
            if len(good):
                g = int(good[0])
                other = _word_of(layers, li, int(pos[g]))
                mine = _word_of(layers, len(layers) - 1, int(ok[g]))
                return free_reduce(mine + other) if newest_first else free_reduce(other + mine)
    return None


def _integral_image(ev, w, char: int) -> Mat3:
    if char == 3:
        return ev.raw(w)
    from .congruence import descend_and_normalize

    return descend_and_normalize(ev.raw(w), w)
