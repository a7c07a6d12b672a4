"""Congruence filtrations at the primes 1 - omega (char 0) and u = t^3 (char 3).

Level 0 is reduction to SL_3(F_3); level 1 is the log map
I + p X  ->  X mod p, landing in sl_3(F_3).  In char 0 the matrices are
only defined up to the units +-omega^k; fixing det = 1 removes the sign,
and omega = 1 - lambda shifts X by -I, so char-0 logs live in
sl_3(F_3) modulo the scalar line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm, prod
from typing import Iterable, Sequence

from ..exactfields import (
    LAMBDA,
    Eisen,
    GF3,
    RatFuncGF3,
    eisen_gcd,
    lambda_valuation,
    residue_lambda,
    u_coefficient,
    u_residue,
    u_valuation,
)
from .mat3 import Mat3, gf3_key
from .reps import weight

CHAR0 = "char0-PSL"
CHAR3 = "char3-SL"

IDENTITY_KEY = (1, 0, 0, 0, 1, 0, 0, 0, 1)


class NotInGammaZeroError(ValueError):
    pass


class NotInPSL3Error(ArithmeticError):
    pass


class LevelError(ValueError):
    pass


@dataclass(frozen=True)
class CongruenceLevel:
    level: int
    ambient: str = CHAR0

    def __post_init__(self):
        if self.ambient not in (CHAR0, CHAR3):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        if self.level < 0:
            raise ValueError("level must be >= 0")


# ---------------------------------------------------------------- char 0 descent

def _content(entries: Iterable[Eisen]) -> Eisen:
    g = Eisen.zero()
    for x in entries:
        if not x.is_zero():
            g = x if g.is_zero() else eisen_gcd(g, x)
    return g


def normalize_eisen(m: Mat3) -> Mat3:
    """Clear denominators, divide by the content, then fix det to +1 if it is -1.

    Raises NotInPSL3Error unless the result has determinant +-1.
    """
    den = 1
    for x in m.entries:
        den = lcm(den, x.d)
    if den != 1:
        k = Eisen(den)
        m = m.map(lambda x: x * k)
    g = _content(m.entries)
    ginv = g.inv()
    m = m.map(lambda x: x * ginv)
    d = m.det()
    one = Eisen.one()
    if d == -one:
        m = -m
    elif d != one:
        raise NotInPSL3Error(f"normalized determinant {d} is not a unit of the form +-1")
    return m


def descend_and_normalize(m: Mat3, w: Sequence[int] | None = None) -> Mat3:
    """A Z[omega]-integral, det-1 representative of a pi-image of a Gamma° word.

    ``m`` is a Tower matrix (any scalar multiple).  When ``w`` is given its
    weight d(w) must be divisible by 3.
    """
    if w is not None and weight(w) % 3:
        raise NotInGammaZeroError(f"weight {weight(w)} is not divisible by 3: not in Gamma°")
    lead = m.first_nonzero()
    m = m.map(lambda x: x / lead)
    out = []
    for x in m.entries:
        if not x.is_zero() and x.r_support() != (0,):
            raise NotInGammaZeroError("entries are not Q(omega)-multiples of one another: not in Gamma°")
        out.append(x.coeffs()[0])
    return normalize_eisen(Mat3(out))


def is_integral_matrix(m: Mat3) -> bool:
    return all(x.is_integral() for x in m.entries)


# ---------------------------------------------------------------- residues

def _sl_normalize(m: Mat3) -> Mat3:
    """Over F_3 scale by -1 if needed so det = 1 (the only unit scalars are +-1)."""
    d = m.det()
    if d.is_zero():
        raise ArithmeticError("singular residue")
    return m if d == GF3(1) else -m


def residue_matrix(m: Mat3, ambient: str) -> Mat3:
    if ambient == CHAR0:
        return _sl_normalize(m.map(residue_lambda))
    return m.map(u_residue)


def level1_log(m: Mat3, ambient: str) -> Mat3:
    """X with m = I + p X (mod p^2), p = lambda or u; m must be I mod p."""
    res = residue_matrix(m, ambient)
    if gf3_key(res) != IDENTITY_KEY:
        vals = [lambda_valuation(x) if ambient == CHAR0 else u_valuation(x) for x in (m - Mat3.identity(m.field)).entries]
        raise LevelError(f"matrix is not congruent to I at level 1 (entry valuations of M - I: {vals})")
    if ambient == CHAR0:
        if m.det() != Eisen.one():
            m = -m
        lam_inv = LAMBDA.inv()
        x = (m - Mat3.identity(Eisen)).map(lambda e: e * lam_inv)
        out = x.map(residue_lambda)
    else:
        out = Mat3([u_coefficient(e, 1) for e in m.entries])
    if not out.trace().is_zero():
        raise ArithmeticError("level-1 log has nonzero trace")
    return out


def reduce_mod_level(m: Mat3, level: CongruenceLevel) -> Mat3:
    """Level 0: SL_3(F_3) residue; level 1: the log in sl_3(F_3)."""
    if level.level == 0:
        return residue_matrix(m, level.ambient)
    if level.level == 1:
        return level1_log(m, level.ambient)
    raise ValueError("only levels 0 and 1 are implemented")


def congruence_level(m: Mat3, ambient: str, max_level: int = 64) -> int:
    """Largest n with m = I mod p^n (sign-normalized in char 0)."""
    if ambient == CHAR0:
        if m.det() != Eisen.one():
            m = -m
        vals = [lambda_valuation(e) for e in (m - Mat3.identity(Eisen)).entries]
    else:
        vals = [u_valuation(e) for e in (m - Mat3.identity(RatFuncGF3)).entries]
    v = min(vals)
    return max_level if v == float("inf") else int(v)


# ---------------------------------------------------------------- subspaces

def _rref(rows: list[list[int]]) -> list[list[int]]:
    rows = [[x % 3 for x in r] for r in rows]
    out: list[list[int]] = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        piv = next((i for i, r in enumerate(rows) if r[col]), None)
        if piv is None:
            continue
        p = rows.pop(piv)
        inv = p[col]  # 1 or 2, self-inverse mod 3
        p = [(x * inv) % 3 for x in p]
        rows = [[(x - r[col] * y) % 3 for x, y in zip(r, p)] for r in rows]
        out = [[(x - r[col] * y) % 3 for x, y in zip(r, p)] for r in out]
        out.append(p)
        rows = [r for r in rows if any(r)]
    out.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return out


SL3 = "sl3"
SL3_MOD_SCALARS = "sl3/I"


class SubspaceGF3:
    """A subspace of 3x3 matrices over F_3 (row-major coordinates).

    ``basis`` is the reduced echelon basis of the span of the given
    matrices.  With ambient ``sl3/I`` the dimension is that of the image in
    sl_3 modulo the scalar line.
    """

    def __init__(self, vectors: Iterable[Sequence[int]] = (), ambient: str = SL3):
        if ambient not in (SL3, SL3_MOD_SCALARS):
            raise ValueError(f"unknown ambient {ambient!r}")
        self.ambient = ambient
        vecs = [list(v) for v in vectors]
        self.basis = _rref(vecs) if vecs else []

    @classmethod
    def from_matrices(cls, mats: Iterable[Mat3], ambient: str = SL3) -> "SubspaceGF3":
        return cls([gf3_key(m) for m in mats], ambient)

    @property
    def raw_dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return 8 if self.ambient == SL3 else 7

    def _with_scalars(self) -> list[list[int]]:
        return _rref(self.basis + [list(IDENTITY_KEY)])

    @property
    def dim(self) -> int:
        if self.ambient == SL3:
            return self.raw_dim
        return len(self._with_scalars()) - 1

    def contains(self, v: Sequence[int]) -> bool:
        base = self.basis if self.ambient == SL3 else self._with_scalars()
        return len(_rref(base + [list(v)])) == len(base)

    def same_as(self, other: "SubspaceGF3") -> bool:
        """Equality in the ambient (modulo scalars for ``sl3/I``)."""
        if self.ambient != other.ambient:
            raise ValueError("different ambients")
        if self.ambient == SL3:
            return self.basis == other.basis
        return self._with_scalars() == other._with_scalars()

    def __repr__(self):
        return f"SubspaceGF3(dim={self.dim}, raw_dim={self.raw_dim}, ambient={self.ambient!r})"


def displayed_level1_set() -> SubspaceGF3:
    """{X : X11 = 0, X31 = 0, X33 = -X22}, parameters (a..f) as below."""
    gens = []
    # ((0,a,b),(c,d,e),(0,f,-d))
    for pos in (1, 2, 3, 5, 7):
        v = [0] * 9
        v[pos] = 1
        gens.append(v)
    gens.append([0, 0, 0, 0, 1, 0, 0, 0, 2])
    return SubspaceGF3(gens, SL3_MOD_SCALARS)


def level1_span(kernel_words: Sequence[Sequence[int]], ev, ambient: str) -> SubspaceGF3:
    """Span of level-1 logs of ev-images of kernel words.

    In char 0 ``ev`` must produce Z[omega]-integral matrices (e.g. an
    evaluator over normalized Gamma° generators).
    """
    space = SL3_MOD_SCALARS if ambient == CHAR0 else SL3
    logs = []
    for w in kernel_words:
        m = ev.raw(w)
        try:
            logs.append(level1_log(m, ambient))
        except LevelError as exc:
            raise LevelError(f"kernel word {tuple(w)} is not trivial at level 0: {exc}") from exc
    return SubspaceGF3.from_matrices(logs, space)


# ---------------------------------------------------------------- finite images

def sl3_order(q: int = 3, n: int = 3) -> int:
    """|SL_n(F_q)| = prod_{k<n} (q^n - q^k) / (q - 1)."""
    return prod(q**n - q**k for k in range(n)) // (q - 1)


def _mul_key(x: tuple, y: tuple) -> tuple:
    return tuple(
        (x[3 * i] * y[j] + x[3 * i + 1] * y[3 + j] + x[3 * i + 2] * y[6 + j]) % 3
        for i in range(3)
        for j in range(3)
    )


def canonical_sl_key(m: Mat3 | Sequence[int]) -> tuple:
    m = m if isinstance(m, Mat3) else Mat3([GF3(v) for v in m])
    return gf3_key(_sl_normalize(m))


def finite_image_subgroup(images: Sequence[Mat3 | Sequence[int]], guard: int = 10**6) -> frozenset:
    """Closure of GF3 matrices in SL_3(F_3) (each scaled to det 1), as entry keys."""
    gens = [canonical_sl_key(m) for m in images]
    seen = {IDENTITY_KEY}
    frontier = [IDENTITY_KEY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul_key(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > guard:
                        raise OverflowError(f"closure exceeds guard {guard}")
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def standard_unitriangular() -> frozenset:
    return frozenset((1, x, y, 0, 1, z, 0, 0, 1) for x, y, z in itertools.product(range(3), repeat=3))


def index_reconstruction(level0_order: int, level1_dim: int, ambient: str = CHAR0) -> int:
    """[K_0 : image] from the level-0 image order and the level-1 span dimension."""
    ambient_dim = 7 if ambient == CHAR0 else 8
    top = sl3_order()
    if top % level0_order:
        raise ValueError(f"{level0_order} does not divide {top}")
    return top // level0_order * 3 ** (ambient_dim - level1_dim)
