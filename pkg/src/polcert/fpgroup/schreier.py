"""Reidemeister-Schreier generators for kernels of maps onto finite groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..polymap.groups import FiniteGroup
from .words import IDENTITY, Word, inverse, letters_in_order, mul


class NotGeneratingError(ValueError):
    pass


@dataclass
class SubgroupData:
    """Kernel of a map from the free group F_n onto a finite group.

    ``transversal[i]`` is the shortlex-least word mapping to ``coset_elements[i]``
    (letters ordered a < a^-1 < b < b^-1 < ...).  Schreier generators are
    ``t * g * rep(t*g)^-1`` for t in the transversal and g a generator, with
    the trivial ones dropped, listed in transversal order then generator order.
    """

    generator_count: int
    transversal: list[Word]
    coset_elements: list[int]
    schreier_generators: list[Word]
    sources: list[tuple[int, int]]  # (transversal index, generator) per Schreier generator
    candidates: int  # number of pairs (t, g) before trivial ones were dropped

    @property
    def index(self) -> int:
        return len(self.transversal)

    def rank_formula(self) -> int:
        """Nielsen-Schreier rank 1 + index * (n - 1)."""
        return 1 + self.index * (self.generator_count - 1)


def reidemeister_schreier(generator_count: int, group: FiniteGroup, images: Sequence[int]) -> SubgroupData:
    """Schreier generators of the kernel of the map sending generator k to ``images[k-1]``."""
    if len(images) != generator_count:
        raise ValueError("need one image per generator")
    if len(group.generated_by(list(images))) != group.order:
        raise NotGeneratingError("generator images do not generate the group")

    letters = letters_in_order(generator_count)

    def act(x: int, letter: int) -> int:
        g = images[abs(letter) - 1]
        return group.mul(x, g if letter > 0 else group.inv(g))

    rep: dict[int, Word] = {group.identity: IDENTITY}
    order = [group.identity]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        w = rep[x]
        for letter in letters:
            if w and w[-1] == -letter:
                continue
            y = act(x, letter)
            if y not in rep:
                rep[y] = Word(tuple(w) + (letter,))
                order.append(y)

    gens, sources = [], []
    for ti, x in enumerate(order):
        t = rep[x]
        for g in range(1, generator_count + 1):
            s = mul(t, (g,), inverse(rep[act(x, g)]))
            if s:
                gens.append(s)
                sources.append((ti, g))
    return SubgroupData(
        generator_count=generator_count,
        transversal=[rep[x] for x in order],
        coset_elements=order,
        schreier_generators=gens,
        sources=sources,
        candidates=len(order) * generator_count,
    )
