"""Brute-force enumeration of homomorphisms into finite groups."""

from __future__ import annotations

import itertools

from ..polymap.groups import FiniteGroup
from .presentation import Presentation


class SizeGuardError(ValueError):
    pass


def hom_tuples(p: Presentation, h: FiniteGroup, guard: int = 10**6) -> list[tuple[int, ...]]:
    """Generator-image tuples satisfying every relator, in lexicographic order."""
    total = h.order ** p.generator_count
    if total > guard:
        raise SizeGuardError(f"{total} candidate tuples exceed the guard {guard}")
    out = []
    for images in itertools.product(range(h.order), repeat=p.generator_count):
        if all(h.eval_word(r, images) == h.identity for r in p.relators):
            out.append(images)
    return out


def count_homs(p: Presentation, h: FiniteGroup, guard: int = 10**6) -> int:
    return len(hom_tuples(p, h, guard))
