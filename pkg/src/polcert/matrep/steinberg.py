"""Steinberg commutator closure of verified elementary matrices over F_3[u].

If E_ij(u^2) and E_ij(u^3) lie in a group for all i != j, then so does
E_ij(u^n) for every n >= 2: n = 2, 3 are given and n >= 4 splits as
a + b with a, b >= 2, so [E_ik(u^a), E_kj(u^b)] = E_ij(u^(a+b)).  Since
E_ij(f) E_ij(g) = E_ij(f + g), every E_ij(f) with f in u^2 F_3[u] follows.
That these generate the full level-(u^2) congruence subgroup is the
Euclidean-ring lemma, which is assumed rather than re-proved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..exactfields import RatFuncGF3
from ..fpgroup.words import Word, commutator
from .mat3 import Mat3

PAIRS = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]

FULL = "level-(u^2) congruence generation certified modulo Euclidean lemma"
PARTIAL = "partial"
EUCLIDEAN_LEMMA = (
    "for a Euclidean ring R and ideal I, the elementary matrices with entries in I "
    "generate the level-I congruence subgroup of SL_3(R)"
)


def elem(i: int, j: int, n: int) -> Mat3:
    """E_ij(u^n), 1-based indices."""
    return Mat3.elementary(i - 1, j - 1, RatFuncGF3.t(3 * n), RatFuncGF3)


def group_commutator(x: Mat3, y: Mat3) -> Mat3:
    return x * y * x.inverse() * y.inverse()


def steinberg_identity_holds(i: int, j: int, k: int, a: int, b: int) -> bool:
    """[E_ij(u^a), E_jk(u^b)] == E_ik(u^(a+b)) for distinct i, j, k, by multiplication."""
    if len({i, j, k}) != 3:
        raise ValueError("the identity needs three distinct indices")
    return group_commutator(elem(i, j, a), elem(j, k, b)) == elem(i, k, a + b)


@dataclass
class SteinbergVerdict:
    verdict: str
    identities_checked: int
    identities_failed: list[tuple]
    exponents: dict[str, list[int]]
    gaps: list[str]
    excluded_pairs: int
    assumption: str = EUCLIDEAN_LEMMA
    notes: list[str] = field(default_factory=list)

    @property
    def full(self) -> bool:
        return self.verdict == FULL


def steinberg_closure(found: Iterable[tuple[int, int, int]], max_exponent: int = 8) -> SteinbergVerdict:
    """Close the verified set {(i, j, n): E_ij(u^n) in the group} under Steinberg commutators.

    Every commutator used is checked by exact multiplication.  Pairs
    (E_ij, E_ji) are skipped: their commutator is not elementary.  Inputs
    may include exponent 1; the verdict needs u^2 and u^3 at every position
    after closure.
    """
    have: dict[tuple[int, int], set[int]] = {p: set() for p in PAIRS}
    for i, j, n in found:
        if (i, j) not in have:
            raise ValueError(f"({i}, {j}) is not an off-diagonal position")
        have[(i, j)].add(n)

    checked, failed, excluded = 0, [], 0
    verified_cache: dict[tuple, bool] = {}
    changed = True
    while changed:
        changed = False
        for (i, j) in PAIRS:
            for (j2, k) in PAIRS:
                if j2 != j:
                    continue
                if k == i:
                    excluded += 1
                    continue
                for a in sorted(have[(i, j)]):
                    for b in sorted(have[(j, k)]):
                        if a + b > max_exponent or a + b in have[(i, k)]:
                            continue
                        key = (i, j, k, a, b)
                        ok = verified_cache.get(key)
                        if ok is None:
                            ok = verified_cache[key] = steinberg_identity_holds(i, j, k, a, b)
                            checked += 1
                        if not ok:
                            failed.append(key)
                            continue
                        have[(i, k)].add(a + b)
                        changed = True

    gaps = [f"E{i}{j}(u^{n})" for (i, j) in PAIRS for n in (2, 3) if n not in have[(i, j)]]
    exps = {f"E{i}{j}": sorted(have[(i, j)]) for (i, j) in PAIRS}
    notes = []
    if not gaps and not failed:
        complete = all(set(range(2, max_exponent + 1)) <= have[p] for p in PAIRS)
        notes.append(f"exponents 2..{max_exponent} reached at every position: {complete}")
        verdict = FULL if complete else PARTIAL
    else:
        verdict = PARTIAL
    return SteinbergVerdict(verdict, checked, failed, exps, gaps, excluded, notes=notes)


def commutator_words(known: dict[tuple[int, int, int], Word], ev_rho, max_exponent: int = 3) -> dict[tuple[int, int, int], Word]:
    """Extend verified words for E_ij(u^n) by Steinberg commutators.

    A word for E_ik(u^(a+b)) is [w_ij(a), w_jk(b)].  New words are
    evaluated exactly and kept only if they equal the elementary matrix;
    existing entries are never replaced.  Shorter words are preferred when
    several splits are available.
    """
    words = dict(known)
    changed = True
    while changed:
        changed = False
        for n in range(2, max_exponent + 1):
            for (i, k) in PAIRS:
                if (i, k, n) in words:
                    continue
                best = None
                for j in (1, 2, 3):
                    if j in (i, k):
                        continue
                    for a in range(1, n):
                        w1, w2 = words.get((i, j, a)), words.get((j, k, n - a))
                        if w1 is None or w2 is None:
                            continue
                        c = commutator(w1, w2)
                        if best is None or len(c) < len(best):
                            best = c
                if best is not None and ev_rho.raw(best) == elem(i, k, n):
                    words[(i, k, n)] = best
                    changed = True
    return words
