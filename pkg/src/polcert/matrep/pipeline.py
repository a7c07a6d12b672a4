"""End-to-end congruence analysis of pi(Gamma°) and rho(Gamma°)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..exactfields import NotIntegralError, u_valuation
from ..fpgroup.schreier import SubgroupData, reidemeister_schreier
from ..fpgroup.words import Word, substitute
from ..polymap.groups import FiniteGroup, from_elements
from ..polymap.maps import SIGMA, TAU, c3
from .congruence import (
    CHAR0,
    CHAR3,
    IDENTITY_KEY,
    SubspaceGF3,
    _mul_key,
    canonical_sl_key,
    descend_and_normalize,
    displayed_level1_set,
    finite_image_subgroup,
    index_reconstruction,
    level1_span,
    residue_matrix,
    standard_unitriangular,
)
from .mat3 import Mat3
from .reps import WordEvaluator, pi_generators, rho_generators


def gamma0_schreier() -> SubgroupData:
    """Schreier generators of ker(mu: Gamma -> C_3), a -> sigma, b -> tau."""
    return reidemeister_schreier(2, c3(), [SIGMA, TAU])


@dataclass
class CongruenceData:
    ambient: str
    gamma0: SubgroupData
    integral: list[Mat3]  # images of the Schreier generators (Z[omega] or F_3[u])
    residues: list[tuple]  # SL_3(F_3) keys
    image: frozenset
    image_group: FiniteGroup
    kernel: SubgroupData  # over the 4 Schreier generators
    kernel_words_ab: list[Word]
    span: SubspaceGF3
    index: int

    @property
    def schreier_words(self) -> list[Word]:
        return self.gamma0.schreier_generators

    @property
    def image_is_standard(self) -> bool:
        return self.image == standard_unitriangular()

    def evaluator(self) -> WordEvaluator:
        return WordEvaluator(self.integral, mode="exact", name=f"Gamma° ({self.ambient})")


def _analyse(ambient: str, integral: list[Mat3], g0: SubgroupData) -> CongruenceData:
    residues = [canonical_sl_key(residue_matrix(m, ambient)) for m in integral]
    image = finite_image_subgroup(residues)
    G = from_elements(sorted(image), _mul_key, name="level-0 image", identity=IDENTITY_KEY)
    kernel = reidemeister_schreier(len(integral), G, [G.index_of(k) for k in residues])
    ev = WordEvaluator(integral, mode="exact")
    span = level1_span(kernel.schreier_generators, ev, ambient)
    idx = index_reconstruction(len(image), span.dim, ambient)
    ab = [substitute(w, g0.schreier_generators) for w in kernel.schreier_generators]
    return CongruenceData(ambient, g0, integral, residues, image, G, kernel, ab, span, idx)


def char0_analysis(pi: WordEvaluator) -> CongruenceData:
    g0 = gamma0_schreier()
    integral = [descend_and_normalize(pi.raw(w), w) for w in g0.schreier_generators]
    return _analyse(CHAR0, integral, g0)


def char3_analysis(rho: WordEvaluator) -> CongruenceData:
    g0 = gamma0_schreier()
    integral = [rho.raw(w) for w in g0.schreier_generators]
    for m in integral:
        for x in m.entries:
            u_valuation(x)  # raises unless the entry lies in F_3(u)
            if not x.is_polynomial():
                raise NotIntegralError(f"Schreier generator image has entry {x} outside F_3[u]")
    return _analyse(CHAR3, integral, g0)


@lru_cache(maxsize=None)
def char0_data() -> CongruenceData:
    return char0_analysis(pi_generators())


@lru_cache(maxsize=None)
def char3_data() -> CongruenceData:
    return char3_analysis(rho_generators())


def char0_matches_display(data: CongruenceData | None = None) -> bool:
    data = data or char0_data()
    return data.span.same_as(displayed_level1_set())


@dataclass
class ElementaryCampaign:
    words: dict  # (i, j, n) -> verified word in a, b
    results: list  # SearchResult per direct search, in order
    excluded: list[str]  # degree-1 targets ruled out by the level-1 span
    derived: list[tuple[int, int, int]]  # targets obtained as commutator words

    def missing(self, exponents=(2, 3)) -> list[tuple[int, int, int]]:
        from .steinberg import PAIRS

        return [(i, j, n) for n in exponents for (i, j) in PAIRS if (i, j, n) not in self.words]


def elementary_campaign(
    rho: WordEvaluator | None = None,
    max_len: int = 40,
    max_entry_degree: int = 3,
    max_nodes: int = 500_000,
    budget_ms: float | None = None,
    meet_in_middle: bool = True,
) -> ElementaryCampaign:
    """Verified words for E_ij(u^2), E_ij(u^3) over rho(Gamma°).

    Degree-1 elementaries are searched first, except those whose direction
    lies outside the level-1 span (they cannot be in the group).  Steinberg
    commutators then produce higher exponents; direct (assisted) searches
    fill what remains.  Every word is verified by exact evaluation.
    """
    from .search import ElementaryTarget, elementary_word_search
    from .steinberg import PAIRS, commutator_words

    pristine = rho is None
    rho = rho or rho_generators()
    gens = gamma0_schreier().schreier_generators
    span = (char3_data() if pristine else char3_analysis(rho)).span
    words: dict = {}
    results = []
    excluded = []

    def run(i, j, n):
        tgt = ElementaryTarget(i, j, n, 3)
        assist = {ElementaryTarget(a, b, m, 3).label(): w for (a, b, m), w in words.items()}
        r = elementary_word_search(rho, gens, tgt, max_len=max_len, max_entry_degree=max_entry_degree,
                                   budget_ms=budget_ms, max_nodes=max_nodes, meet_in_middle=meet_in_middle,
                                   assist=assist)
        results.append(r)
        if r.found and r.verified:
            words[(i, j, n)] = r.word

    for (i, j) in PAIRS:
        v = [0] * 9
        v[3 * (i - 1) + (j - 1)] = 1
        if not span.contains(v):
            excluded.append(f"E{i}{j}(u)")
            continue
        run(i, j, 1)
    before = set(words)
    words = commutator_words(words, rho, 3)
    for n in (2, 3):
        for (i, j) in PAIRS:
            if (i, j, n) not in words:
                run(i, j, n)
                words = commutator_words(words, rho, 3)
    derived = sorted(k for k in words if k not in before and not any(
        r.found and r.target == ElementaryTarget(*k, 3).label() for r in results))
    return ElementaryCampaign(words, results, excluded, derived)
