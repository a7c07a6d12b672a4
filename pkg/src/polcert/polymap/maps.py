"""Finite differences and polynomial degree of maps between finite groups."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .groups import FiniteGroup, cyclic_group


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class MapTable:
    """A map G -> H stored as the image index of each element of G."""

    domain: FiniteGroup
    codomain: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.order:
            raise ValueError("one image per domain element required")

    def __call__(self, g: int) -> int:
        return self.images[g]

    def is_unital(self) -> bool:
        return self.images[self.domain.identity] == self.codomain.identity

    def is_trivial(self) -> bool:
        return all(x == self.codomain.identity for x in self.images)

    def is_homomorphism(self) -> bool:
        G, H, f = self.domain, self.codomain, self.images
        return all(
            f[G.mul(x, y)] == H.mul(f[x], f[y]) for x in range(G.order) for y in range(G.order)
        )

    def __hash__(self):
        return hash(self.images)

    def __eq__(self, other):
        return (
            isinstance(other, MapTable)
            and self.images == other.images
            and self.domain is other.domain
            and self.codomain is other.codomain
        )


def delta(phi: MapTable, k: int) -> MapTable:
    """(Delta_k phi)(g) = phi(k g) phi(g)^-1."""
    G, H = phi.domain, phi.codomain
    f = phi.images
    return MapTable(G, H, tuple(H.mul(f[G.mul(k, g)], H.inv(f[g])) for g in range(G.order)))


def beta(phi: MapTable, k: int) -> MapTable:
    """Unitalized difference: beta_k(g) = phi(k)^-1 phi(k g) phi(g)^-1."""
    H = phi.codomain
    d = delta(phi, k)
    ik = H.inv(phi.images[k])
    return MapTable(phi.domain, H, tuple(H.mul(ik, x) for x in d.images))


def _degree_at_most(G: FiniteGroup, H: FiniteGroup, images: tuple[int, ...], d: int, memo: dict) -> bool:
    key = (images, d)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if d < 0:
        out = all(x == H.identity for x in images)
    else:
        out = True
        gt, ht, hinv = G.table, H.table, H.inverse
        for k in range(G.order):
            diff = tuple(int(ht[images[int(gt[k, g])], hinv[images[g]]]) for g in range(G.order))
            if not _degree_at_most(G, H, diff, d - 1, memo):
                out = False
                break
    memo[key] = out
    return out


_MEMOS: dict[tuple[bytes, bytes], dict] = {}


def _memo_for(G: FiniteGroup, H: FiniteGroup) -> dict:
    key = (G.key(), H.key())
    memo = _MEMOS.get(key)
    if memo is None:
        if len(_MEMOS) > 64:
            _MEMOS.clear()
        memo = _MEMOS[key] = {}
    return memo


def degree_at_most(phi: MapTable, d: int) -> bool:
    """True when every (d+1)-fold iterated difference of phi is identically 1.

    Degree -1 means identically 1.  Results are memoized per (map table, d).
    """
    if d < -1:
        raise ValueError("degree must be >= -1")
    return _degree_at_most(phi.domain, phi.codomain, phi.images, d, _memo_for(phi.domain, phi.codomain))


def degree(phi: MapTable, max_degree: int = 16) -> int | None:
    """Least d with degree_at_most(phi, d), or None if above max_degree."""
    for d in range(-1, max_degree + 1):
        if degree_at_most(phi, d):
            return d
    return None


def unital_maps(G: FiniteGroup, H: FiniteGroup, guard: int = 10**6):
    """All unital maps G -> H, lexicographic in the images of the non-identity elements."""
    others = [g for g in range(G.order) if g != G.identity]
    total = H.order ** len(others)
    if total > guard:
        raise GuardExceeded(f"{total} maps exceed the brute-force guard {guard}")
    for combo in itertools.product(range(H.order), repeat=len(others)):
        images = [H.identity] * G.order
        for g, x in zip(others, combo):
            images[g] = x
        yield MapTable(G, H, tuple(images))


def classify_unital_polynomial_maps(G: FiniteGroup, H: FiniteGroup, d: int, guard: int = 10**6) -> list[MapTable]:
    """Every unital map G -> H of degree at most d (exhaustive)."""
    return [phi for phi in unital_maps(G, H, guard) if degree_at_most(phi, d)]


# C_3 = <sigma>: index 0 = 1, 1 = sigma, 2 = tau = sigma^2
SIGMA, TAU = 1, 2


def c3() -> FiniteGroup:
    return cyclic_group(3)


def c2() -> FiniteGroup:
    return cyclic_group(2)


def map_from_c3(H: FiniteGroup, image_sigma: int, image_tau: int, domain: FiniteGroup | None = None) -> MapTable:
    G = domain if domain is not None else c3()
    return MapTable(G, H, (H.identity, image_sigma, image_tau))


def image_pairs(maps: Sequence[MapTable]) -> list[tuple[int, int]]:
    """(phi(sigma), phi(tau)) for maps out of C_3."""
    return [(m.images[SIGMA], m.images[TAU]) for m in maps]
