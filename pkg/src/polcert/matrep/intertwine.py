"""Is there an automorphism of U_+(F_3) carrying one tuple of generator images to another?"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..exactfields import GF3
from ..polymap.groups import FiniteGroup, from_elements
from ..polymap.isomorphism import automorphisms, extend_to_hom
from .congruence import IDENTITY_KEY, _mul_key, canonical_sl_key, finite_image_subgroup, standard_unitriangular
from .mat3 import Mat3, gf3_key

class ImageMismatchError(ValueError):
    pass


def inverse_key(g: tuple) -> tuple:
    m = Mat3([GF3(v) for v in g])
    return gf3_key(m.inverse())


def conjugate_key(g: tuple, x: tuple) -> tuple:
    """g x g^-1."""
    return _mul_key(_mul_key(g, x), inverse_key(g))


def sl3_keys():
    """All of SL_3(F_3) as entry keys, in lexicographic order."""
    for k in itertools.product(range(3), repeat=9):
        if Mat3([GF3(v) for v in k]).det() == GF3(1):
            yield k


def find_conjugator(subgroup: frozenset, target: frozenset | None = None) -> tuple | None:
    """Lexicographically least g in SL_3(F_3) with g S g^-1 = target (default U_+)."""
    target = target or standard_unitriangular()
    if len(subgroup) != len(target):
        return None
    gens = sorted(subgroup)
    for g in sl3_keys():
        gi = inverse_key(g)
        if all(_mul_key(_mul_key(g, x), gi) in target for x in gens):
            return g
    return None


def unitriangular_group() -> FiniteGroup:
    return from_elements(sorted(standard_unitriangular()), _mul_key, name="U+(F3)", identity=IDENTITY_KEY)


@dataclass
class IntertwinerVerdict:
    automorphism_count: int
    witness: list[int] | None
    direct_extension: bool  # does x_i -> y_i extend to an isomorphism directly?

    @property
    def found(self) -> bool:
        return self.witness is not None


def automorphism_intertwiner_search(images1: Sequence, images2: Sequence, transport: tuple | None = None) -> IntertwinerVerdict:
    """Search Aut(U_+) for alpha with alpha(images1[i]) == images2[i] for all i.

    Images are GF3 matrices or entry keys, normalized to det 1.  When
    ``transport`` (a matrix key g) is given, images2 is first conjugated
    by g; any g carrying the group generated by images2 onto U_+ gives the
    same answer, since two such g differ by an element normalizing U_+.

    As an independent check the map images1[i] -> images2[i] is also
    tested directly for extension to an isomorphism.
    """
    k1 = [canonical_sl_key(m) for m in images1]
    k2 = [canonical_sl_key(m) for m in images2]
    if transport is not None:
        k2 = [conjugate_key(transport, x) for x in k2]
    if len(k1) != len(k2):
        raise ValueError("image lists differ in length")
    U = standard_unitriangular()
    for name, ks in (("images1", k1), ("images2", k2)):
        if finite_image_subgroup(ks) != U:
            raise ImageMismatchError(f"{name} do not generate the standard unitriangular group")
    G = unitriangular_group()
    x = [G.index_of(k) for k in k1]
    y = [G.index_of(k) for k in k2]
    auts = automorphisms(G)
    witness = None
    for f in auts:
        if all(f[a] == b for a, b in zip(x, y)):
            witness = f
            break
    direct = extend_to_hom(G, G, x, tuple(y))
    direct_ok = direct is not None and len(set(direct)) == G.order
    return IntertwinerVerdict(len(auts), witness, direct_ok)
