"""Brute-force isomorphism test for small finite groups."""

from __future__ import annotations

import itertools

from .groups import FiniteGroup


class SizeGuardError(ValueError):
    pass


def small_generating_set(G: FiniteGroup) -> list[int]:
    """A generating set found greedily, preferring elements of large order."""
    by_order = sorted(range(G.order), key=lambda x: (-G.element_order(x), x))
    gens: list[int] = []
    span = {G.identity}
    for k in (1, 2, 3):
        for combo in itertools.combinations(by_order, k):
            if len(G.generated_by(list(combo))) == G.order:
                return list(combo)
    # fall back to a greedy cover
    for x in by_order:
        if x not in span:
            gens.append(x)
            span = G.generated_by(gens)
    return gens


def extend_to_hom(G: FiniteGroup, H: FiniteGroup, gens: list[int], images: tuple[int, ...]) -> list[int] | None:
    """The homomorphism G -> H sending gens to images, or None if none exists."""
    f = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, images):
                y = G.mul(x, g)
                fy = H.mul(f[x], h)
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(f) != G.order:
        return None
    table = [f[x] for x in range(G.order)]
    for x in range(G.order):
        fx = table[x]
        for y in range(G.order):
            if table[G.mul(x, y)] != H.mul(fx, table[y]):
                return None
    return table


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, guard: int = 100) -> list[int] | None:
    if G.order != H.order:
        return None
    if G.order > guard:
        raise SizeGuardError(f"order {G.order} exceeds the brute-force guard {guard}")
    gens = small_generating_set(G)
    orders = [G.element_order(g) for g in gens]
    cands = [[h for h in range(H.order) if H.element_order(h) == o] for o in orders]
    for images in itertools.product(*cands):
        f = extend_to_hom(G, H, gens, images)
        if f is not None and len(set(f)) == G.order:
            return f
    return None


def is_isomorphic_small(G: FiniteGroup, H: FiniteGroup, guard: int = 100) -> bool:
    """True iff G and H are isomorphic (brute force over generator images)."""
    return find_isomorphism(G, H, guard) is not None


def automorphisms(G: FiniteGroup) -> list[list[int]]:
    """Every automorphism of G, as image tables."""
    gens = small_generating_set(G)
    out = []
    for images in itertools.product(range(G.order), repeat=len(gens)):
        f = extend_to_hom(G, G, gens, images)
        if f is not None and len(set(f)) == G.order:
            out.append(f)
    return out
