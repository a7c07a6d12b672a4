"""The two 3x3 representations of Gamma and the word evaluator.

pi lands in PGL_3 of the tower E = Q(omega)(r), r^3 = 1 - omega, and is
handled projectively.  rho lands in SL_3(F_3(t)) and is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..exactfields import OMEGA, Eisen, RatFuncGF3, Tower
from ..fpgroup.presentation import Presentation
from ..fpgroup.words import Word, format_word
from .mat3 import Mat3, projective


class TranscriptionError(RuntimeError):
    pass


class WordEvaluator:
    """Evaluates words in generators 1..n to products of fixed matrices.

    ``mode`` is "exact" or "projective"; in projective mode results are
    returned in canonical projective form.
    """

    def __init__(self, images: Sequence[Mat3], mode: str = "exact", name: str = ""):
        if mode not in ("exact", "projective"):
            raise ValueError("mode must be 'exact' or 'projective'")
        self.images = tuple(images)
        self.mode = mode
        self.name = name
        self.field = self.images[0].field
        self.one = Mat3.identity(self.field)
        invs = []
        for m in self.images:
            mi = m.inverse()
            if m * mi != self.one:
                raise ArithmeticError("cached inverse failed verification")
            invs.append(mi)
        self.inverses = tuple(invs)

    @property
    def generator_count(self) -> int:
        return len(self.images)

    def letter(self, x: int) -> Mat3:
        return self.images[x - 1] if x > 0 else self.inverses[-x - 1]

    def raw(self, w: Sequence[int]) -> Mat3:
        """Product of the letter images with no normalization."""
        out = None
        for x in w:
            m = self.letter(x)
            out = m if out is None else out * m
        return self.one if out is None else out

    def __call__(self, w: Sequence[int]) -> Mat3:
        m = self.raw(w)
        return projective(m) if self.mode == "projective" else m

    def is_trivial(self, m: Mat3) -> bool:
        return m.is_scalar() if self.mode == "projective" else m == self.one

    def equal(self, m: Mat3, n: Mat3) -> bool:
        if self.mode == "projective":
            return projective(m) == projective(n)
        return m == n

    def substituted(self, words: Sequence[Sequence[int]], name: str = "") -> "WordEvaluator":
        """Evaluator whose generators are the images of ``words``."""
        return WordEvaluator([self.raw(w) for w in words], self.mode, name or self.name)

    def with_image(self, k: int, m: Mat3) -> "WordEvaluator":
        imgs = list(self.images)
        imgs[k - 1] = m
        return WordEvaluator(imgs, self.mode, self.name + "*")


def eval_word(ev: WordEvaluator, w: Sequence[int]) -> Mat3:
    return ev(w)


# ---------------------------------------------------------------- pi

_W = OMEGA


def _e(c0, c1=0) -> Eisen:
    return Eisen(c0, c1)


def pi_matrices_eisen() -> tuple[list[list[Eisen]], list[list[Eisen]]]:
    """The Eisenstein parts A, B with pi(a) = r^2 A and pi(b) = r B."""
    w = _W
    third = Eisen(1) / 3
    A = [
        [w, (-2 * w - 1) * third, (-w - 2) * third],
        [_e(-1), -w, (-2 * w - 1) * third],
        [-(w + 1), _e(1), _e(1)],
    ]
    B = [
        [_e(0), _e(0), (w + 2) * third],
        [_e(1), _e(0), w + 1],
        [_e(0), _e(1), w],
    ]
    return A, B


def pi_images() -> tuple[Mat3, Mat3]:
    A, B = pi_matrices_eisen()
    r = Tower.r()
    r2 = r * r
    pa = Mat3([Tower.coerce(x) * r2 for row in A for x in row])
    pb = Mat3([Tower.coerce(x) * r for row in B for x in row])
    for m, k in ((pa, 2), (pb, 1)):
        for x in m.entries:
            if not x.is_zero() and x.r_support() != (k,):
                raise TranscriptionError("pi entry is not a pure r-power multiple")
    return pa, pb


def pi_generators() -> WordEvaluator:
    pa, pb = pi_images()
    return WordEvaluator([pa, pb], mode="projective", name="pi")


# ---------------------------------------------------------------- rho

def rho_images() -> tuple[Mat3, Mat3]:
    t = RatFuncGF3.t
    z = RatFuncGF3.zero()
    ra = Mat3([
        z, z, t(-1),
        t(-1, 2), z, z,
        t(2, 2), t(2, 2), z,
    ])
    rb = Mat3([
        z, t(1, 2), z,
        z, z, t(-2, 2),
        t(1), z, t(1),
    ])
    one = RatFuncGF3.one()
    for name, m in (("rho(a)", ra), ("rho(b)", rb)):
        if m.det() != one:
            raise TranscriptionError(f"det {name} = {m.det()} != 1")
    return ra, rb


def rho_generators() -> WordEvaluator:
    ra, rb = rho_images()
    return WordEvaluator([ra, rb], mode="exact", name="rho")


# ---------------------------------------------------------------- grading

GRADING = {1: 2, 2: 1}  # r-degree of pi(a), pi(b)


def weight(w: Sequence[int]) -> int:
    """d(w): sum of r-degrees, with inverses counted negatively."""
    return sum(GRADING[abs(x)] * (1 if x > 0 else -1) for x in w)


def mu(w: Sequence[int]) -> int:
    """Image of w in C_3 = Z/3 under a -> sigma, b -> tau = sigma^2."""
    return sum((1 if abs(x) == 1 else 2) * (1 if x > 0 else -1) for x in w) % 3


# ---------------------------------------------------------------- relators

@dataclass
class RelatorVerdict:
    ok: bool
    results: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.results if not r["ok"]]


def check_relators(ev: WordEvaluator, relators: Presentation | Sequence[Sequence[int]]) -> RelatorVerdict:
    """Evaluate every relator; exact mode wants I, projective mode a scalar."""
    if isinstance(relators, Presentation):
        names = relators.names
        rels = relators.relators
    else:
        names, rels = None, relators
    results = []
    for rel in rels:
        m = ev.raw(rel)
        ok = ev.is_trivial(m)
        rec = {"relator": format_word(rel, names) if names else format_word(rel), "ok": ok}
        if ok and ev.mode == "projective":
            rec["scalar"] = str(m.entries[0])
        if not ok:
            rec["residual"] = [[str(x) for x in row] for row in projective(m).rows()] if ev.mode == "projective" else [[str(x) for x in row] for row in m.rows()]
        if ev.mode == "exact":
            rec["det"] = str(m.det())
        results.append(rec)
    return RelatorVerdict(all(r["ok"] for r in results), results)


def corrupted(ev: WordEvaluator, generator: int, position: tuple[int, int], delta) -> WordEvaluator:
    """Negative control: add ``delta`` to one entry of a generator image."""
    m = ev.images[generator - 1]
    e = list(m.entries)
    i, j = position
    e[3 * i + j] = e[3 * i + j] + delta
    bad = Mat3(e)
    if bad.det().is_zero():
        raise ValueError("mutation made the matrix singular")
    return ev.with_image(generator, bad)


def word(text: str) -> Word:
    from ..fpgroup.words import parse_word

    return parse_word(text, "ab")
