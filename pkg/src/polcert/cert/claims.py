"""Claim runners.  Each returns (verdict, witness, inputs) for one registry id."""

from __future__ import annotations

import threading
import time
from typing import Callable

from ..exactfields import Eisen, NotIntegralError, R, RatFuncGF3
from ..fpgroup import (
    NotGeneratingError,
    SizeGuardError as HomGuardError,
    Word,
    abelianization,
    check_derivation,
    count_homs,
    cubic_derivation_script,
    format_word,
    gamma,
    group_order,
    pol2,
    quadratic_relators,
)
from ..fpgroup.presentation import Presentation
from ..fpgroup.words import cyclic_rotations, inverse
from ..polymap import GuardExceeded, battery, classify_unital_polynomial_maps, c3
from ..polymap.pol2model import ModelConstructionError, build_pol2_model, structure_claims
from ..polymap.isomorphism import SizeGuardError as IsoGuardError
from ..matrep import (
    LevelError,
    NotInGammaZeroError,
    NotInPSL3Error,
    TranscriptionError,
    WordEvaluator,
    automorphism_intertwiner_search,
    bounded_no_relation,
    check_relators,
    corrupted,
    displayed_level1_set,
    find_conjugator,
    infinite_order_certificate,
    nilpotency_witness,
    pi_generators,
    rho_generators,
    sl3_order,
)
from ..matrep.intertwine import ImageMismatchError
from ..matrep.pipeline import char0_analysis, char3_analysis, elementary_campaign
from ..matrep.reps import word
from ..matrep.steinberg import EUCLIDEAN_LEMMA, steinberg_closure
from .certificate import ASSUMED, FALSIFIED, INCONCLUSIVE, VERIFIED, ClaimRecord
from .config import RunConfig

# resource limits hit: nothing was decided
RESOURCE_ERRORS = (GuardExceeded, HomGuardError, IsoGuardError, MemoryError, RecursionError, TimeoutError,
                   OverflowError)
# the mathematics came out differently from the claim
MATH_ERRORS = (ArithmeticError, ValueError, ModelConstructionError, NotInPSL3Error, NotInGammaZeroError,
               LevelError, TranscriptionError, NotIntegralError, ImageMismatchError, NotGeneratingError)

FALSE_RELATOR = "(a*b^-1)^3"
# a^3 and b^3 are NOT free: (a^3 b^3)^3 is scalar.  This pair has no relation up to length 8.
FREENESS_PAIR = ("b^3", "a^4*b")


def _verdict(ok: bool) -> str:
    return VERIFIED if ok else FALSIFIED


def _fmt_ab(w) -> str:
    return format_word(w, "ab") if w is not None else None


def _key_str(k) -> list[list[int]]:
    return [list(k[0:3]), list(k[3:6]), list(k[6:9])]


def _mutated_gamma() -> Presentation:
    """One relator with a single letter inverted: (a b^-1 a)^3 -> (a b a)^3."""
    g = gamma()
    rels = list(g.relators)
    rels[1] = Word(x if abs(x) != 2 else -x for x in rels[1])
    return Presentation(g.generator_count, tuple(rels), g.names)


def _mutated_pol2() -> Presentation:
    p = pol2()
    rels = list(p.relators)
    rels[0] = Word((1,) * 8)
    return Presentation(p.generator_count, tuple(rels), p.names)


class Context:
    """Inputs for one run (after negative-control mutations) and shared, lazily computed data."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.mutations = tuple(sorted(config.corrupt))
        self._lock = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}
        self._cache: dict[str, object] = {}

    def shared(self, key: str, fn: Callable):
        with self._lock:
            lk = self._locks.setdefault(key, threading.Lock())
        with lk:
            if key not in self._cache:
                try:
                    self._cache[key] = ("ok", fn())
                except Exception as exc:  # re-raised for every claim that needs it
                    self._cache[key] = ("err", exc)
        tag, val = self._cache[key]
        if tag == "err":
            raise val
        return val

    # ---- inputs
    def gamma(self) -> Presentation:
        return _mutated_gamma() if "relator" in self.mutations else gamma()

    def pol2(self) -> Presentation:
        return _mutated_pol2() if "pol2_relator" in self.mutations else pol2()

    def pi(self) -> WordEvaluator:
        def build():
            ev = pi_generators()
            if "pi_a" in self.mutations:
                ev = corrupted(ev, 1, (0, 0), R * R)
            if "pi_b" in self.mutations:
                ev = corrupted(ev, 2, (0, 0), R)
            return ev
        return self.shared("pi", build)

    def rho(self) -> WordEvaluator:
        def build():
            ev = rho_generators()
            if "rho_a" in self.mutations:
                ev = corrupted(ev, 1, (0, 0), RatFuncGF3(1))
            if "rho_b" in self.mutations:
                ev = corrupted(ev, 2, (0, 0), RatFuncGF3(1))
            return ev
        return self.shared("rho", build)

    def inputs(self, *names: str) -> dict:
        d = {"mutations": list(self.mutations)}
        for n in names:
            if n == "gamma":
                d["gamma"] = [format_word(r, "ab") for r in self.gamma().relators]
            elif n == "pol2":
                d["pol2"] = [format_word(r, "ab") for r in self.pol2().relators]
            elif n in ("pi", "rho"):
                ev = self.pi() if n == "pi" else self.rho()
                d[n] = [[str(x) for x in m.entries] for m in ev.images]
            else:
                d[n] = getattr(self.config, n)
        return d

    # ---- shared computations
    def char0(self):
        return self.shared("char0", lambda: char0_analysis(self.pi()))

    def char3(self):
        return self.shared("char3", lambda: char3_analysis(self.rho()))

    def pol2_model(self):
        return self.shared("pol2_model", build_pol2_model)


RUNNERS: dict[str, Callable[[Context], tuple[str, dict, dict]]] = {}


def runner(claim_id: str):
    def deco(fn):
        RUNNERS[claim_id] = fn
        return fn
    return deco


# ------------------------------------------------------------------ pol2

def _pol2_order(ctx) -> int:
    n = group_order(ctx.pol2(), ctx.config.coset_limit)
    if n is None:
        raise GuardExceeded(f"coset limit {ctx.config.coset_limit} reached")
    return n


@runner("pol2.cosets")
def _pol2_cosets(ctx):
    n = _pol2_order(ctx)
    return _verdict(n == 27), {"cosets": n}, ctx.inputs("pol2", "coset_limit")


@runner("pol2.model")
def _pol2_model(ctx):
    m = ctx.pol2_model()
    p = ctx.pol2()
    G = m.group
    rel_ok = {format_word(r, "ab"): G.eval_word(r, (m.a, m.b)) == G.identity for r in p.relators}
    ok = all(m.checks.values()) and all(rel_ok.values())
    return _verdict(ok), {"checks": m.checks, "presentation_relators_hold": rel_ok}, ctx.inputs("pol2")


@runner("pol2.exponent")
def _pol2_exponent(ctx):
    e = ctx.pol2_model().group.exponent()
    # the presentation itself must define a group of the model's order for the exponent to transfer
    n = _pol2_order(ctx)
    ok = e == 9 and n == ctx.pol2_model().group.order
    return _verdict(ok), {"exponent": e, "presentation_order": n}, ctx.inputs("pol2", "coset_limit")


@runner("pol2.structure")
def _pol2_structure(ctx):
    claims = structure_claims(ctx.pol2_model())
    n = _pol2_order(ctx)
    claims["presentation order matches model"] = n == 27
    return _verdict(all(claims.values())), {"checks": claims}, ctx.inputs("pol2", "coset_limit")


# ------------------------------------------------------------------ presentation

def _proves_trivial(verdict, script, rel) -> bool:
    targets = set()
    for r in (Word(rel), inverse(rel)):
        targets.update(cyclic_rotations(r))
    for lhs, rhs in verdict.facts.values():
        if not rhs and script.expand(lhs) in targets:
            return True
    return False


@runner("gamma.derivation")
def _gamma_derivation(ctx):
    script = cubic_derivation_script()
    v = check_derivation(quadratic_relators(), script)
    gam = ctx.gamma()
    proven = {format_word(r, "ab"): _proves_trivial(v, script, r) for r in gam.relators}
    step_check = pow(4, 8, 9) == 7
    ok = v.valid and all(proven.values()) and step_check and all(
        v.proves(script.expand(x)) or v.proves(x) for x in ((3, 3, 3), (4, 4, 4), (5, 5, 5)))
    wit = {"valid": v.valid, "steps": len(script.steps), "conclusions": v.conclusions,
           "reason": v.reason, "gamma_relators_derived": proven, "4^8 mod 9": pow(4, 8, 9)}
    return _verdict(ok), wit, ctx.inputs("gamma")


@runner("gamma.abelianization")
def _gamma_ab(ctx):
    f = abelianization(ctx.gamma())
    return _verdict(f == [3, 9]), {"invariant_factors": f}, ctx.inputs("gamma")


@runner("gamma.battery")
def _gamma_battery(ctx):
    rows = {}
    ok = True
    groups = battery()
    for name in ctx.config.battery:
        H = groups[name]
        cubic = len(classify_unital_polynomial_maps(c3(), H, 3, ctx.config.map_guard))
        quad = len(classify_unital_polynomial_maps(c3(), H, 2, ctx.config.map_guard))
        hg = count_homs(ctx.gamma(), H, ctx.config.hom_guard)
        hp = count_homs(ctx.pol2(), H, ctx.config.hom_guard)
        rows[name] = {"cubic_maps": cubic, "homs_gamma": hg, "quadratic_maps": quad, "homs_pol2": hp}
        ok &= cubic == hg and quad == hp
    from ..fpgroup.presentation import cyclic
    from ..polymap import c2, cyclic_group

    c8 = cyclic_group(8)
    m2 = len(classify_unital_polynomial_maps(c2(), c8, 3, ctx.config.map_guard))
    h2 = count_homs(cyclic(8), c8, ctx.config.hom_guard)
    rows["C2->C8"] = {"cubic_maps": m2, "homs_C8": h2}
    ok &= m2 == h2 == 8
    return _verdict(ok), {"counts": rows}, ctx.inputs("gamma", "pol2", "battery", "map_guard", "hom_guard")


# ------------------------------------------------------------------ char 0

@runner("char0.relators")
def _c0_relators(ctx):
    v = check_relators(ctx.pi(), ctx.gamma())
    return _verdict(v.ok), {"results": v.results}, ctx.inputs("pi", "gamma")


@runner("char0.det")
def _c0_det(ctx):
    pi = ctx.pi()
    dets = [m.det() for m in pi.images]
    return _verdict(all(d == pi.one.det() for d in dets)), {"det": [str(d) for d in dets]}, ctx.inputs("pi")


@runner("char0.false_relator")
def _c0_false(ctx):
    v = check_relators(ctx.pi(), [word(FALSE_RELATOR)])
    return _verdict(not v.ok), {"word": FALSE_RELATOR, "scalar": v.ok}, ctx.inputs("pi")


@runner("char0.schreier")
def _c0_schreier(ctx):
    d = ctx.char0()
    ok = len(d.schreier_words) == 4 and all(m.det() in (Eisen(1), Eisen(-1)) for m in d.integral)
    wit = {"schreier_generators": [_fmt_ab(w) for w in d.schreier_words],
           "normalized_images": [[str(x) for x in m.entries] for m in d.integral]}
    return _verdict(ok), wit, ctx.inputs("pi")


@runner("char0.level0")
def _c0_level0(ctx):
    d = ctx.char0()
    wit = {"order": len(d.image), "equals_standard": d.image_is_standard,
           "residues": [_key_str(k) for k in d.residues]}
    return _verdict(d.image_is_standard), wit, ctx.inputs("pi")


@runner("char0.level1")
def _c0_level1(ctx):
    d = ctx.char0()
    match = d.span.same_as(displayed_level1_set())
    wit = {"kernel_generators": len(d.kernel.schreier_generators), "dim_mod_scalars": d.span.dim,
           "raw_dim": d.span.raw_dim, "matches_displayed_set": match, "basis": [list(b) for b in d.span.basis]}
    return _verdict(d.span.dim == 6 and match), wit, ctx.inputs("pi")


@runner("char0.index")
def _c0_index(ctx):
    d = ctx.char0()
    return _verdict(d.index == 624), {"index": d.index, "level0_order": len(d.image),
                                      "level1_dim": d.span.dim}, ctx.inputs("pi")


@runner("char0.free_evidence")
def _c0_free(ctx):
    L = ctx.config.freeness_length
    x, y = (word(s) for s in FREENESS_PAIR)
    d = ctx.char0()
    if x == y:
        return FALSIFIED, {"reason": "x = y: the relation x y^-1 is trivial"}, ctx.inputs("pi")
    ev = WordEvaluator([ctx.pi().raw(x), ctx.pi().raw(y)], mode="projective")
    v = bounded_no_relation(ev, (1,), (2,), L, stop_at_first=True)
    wit = {"x": FREENESS_PAIR[0], "y": FREENESS_PAIR[1], "length_bound": L,
           "words_checked": v.words_checked, "relations": v.relations,
           "note": "absence of short relations is evidence, not a proof of freeness",
           "level0_order": len(d.image)}
    if v.relation_found:
        return FALSIFIED, wit, ctx.inputs("pi", "freeness_length")
    return VERIFIED, wit, ctx.inputs("pi", "freeness_length")


# ------------------------------------------------------------------ char 3

@runner("char3.relators")
def _c3_relators(ctx):
    v = check_relators(ctx.rho(), ctx.gamma())
    ok = v.ok and all(r["det"] == "1" for r in v.results)
    return _verdict(ok), {"results": v.results}, ctx.inputs("rho", "gamma")


@runner("char3.det")
def _c3_det(ctx):
    dets = [str(m.det()) for m in ctx.rho().images]
    return _verdict(all(d == "1" for d in dets)), {"det": dets}, ctx.inputs("rho")


@runner("char3.schreier")
def _c3_schreier(ctx):
    d = ctx.char3()
    ok = len(d.schreier_words) == 4 and all(m.det() == RatFuncGF3(1) for m in d.integral)
    wit = {"schreier_generators": [_fmt_ab(w) for w in d.schreier_words],
           "images": [[str(x) for x in m.entries] for m in d.integral]}
    return _verdict(ok), wit, ctx.inputs("rho")


@runner("char3.level0")
def _c3_level0(ctx):
    d = ctx.char3()
    g = ctx.shared("char3_conjugator", lambda: find_conjugator(d.image))
    ok = len(d.image) == 27 and g is not None
    wit = {"order": len(d.image), "equals_standard": d.image_is_standard,
           "conjugator_to_standard": _key_str(g) if g else None,
           "note": "isomorphic (conjugate) to the upper unitriangular group; not literally equal to it",
           "residues": [_key_str(k) for k in d.residues]}
    return _verdict(ok), wit, ctx.inputs("rho")


@runner("char3.level1")
def _c3_level1(ctx):
    d = ctx.char3()
    wit = {"kernel_generators": len(d.kernel.schreier_generators), "dim": d.span.dim,
           "basis": [list(b) for b in d.span.basis]}
    return _verdict(d.span.dim == 7), wit, ctx.inputs("rho")


@runner("char3.index")
def _c3_index(ctx):
    d = ctx.char3()
    wit = {"index": d.index, "level0_order": len(d.image), "level1_dim": d.span.dim,
           "sl3_f3_order": sl3_order(), "assumes": "the image contains the level-2 congruence subgroup"}
    return _verdict(d.index == 624), wit, ctx.inputs("rho")


@runner("char3.infinite_order")
def _c3_order(ctx):
    rho = ctx.rho()
    res = {s: infinite_order_certificate(rho, word(s)) for s in ("a", "b", "b*a")}
    wit = {s: {"verdict": v.verdict, "power": v.power, "trace": v.trace, "traces": v.traces} for s, v in res.items()}
    ok = res["a"].verdict == "certified" and res["b"].verdict == "certified" and res["b*a"].verdict != "certified"
    return _verdict(ok), wit, ctx.inputs("rho")


def _campaign(ctx):
    c = ctx.config
    rho = None if not ctx.mutations else ctx.rho()
    return elementary_campaign(rho, c.search_max_len, c.search_max_degree, c.search_max_nodes,
                               c.search_budget_ms, c.search_meet_in_middle)


@runner("char3.elementary")
def _c3_elementary(ctx):
    camp = ctx.shared("campaign", lambda: _campaign(ctx))
    closure = steinberg_closure(camp.words.keys())
    words = {f"E{i}{j}:u^{n}": _fmt_ab(w) for (i, j, n), w in sorted(camp.words.items())}
    searches = [{"target": r.target, "found": r.found, "verified": r.verified, "reason": r.reason,
                 "nodes": r.nodes, "depth": r.depth_reached} for r in camp.results]
    wit = {"words": words, "excluded": camp.excluded, "searches": searches,
           "steinberg": {"verdict": closure.verdict, "identities_checked": closure.identities_checked,
                         "gaps": closure.gaps}}
    inputs = ctx.inputs("rho", "search_max_len", "search_max_degree", "search_max_nodes", "search_budget_ms")
    if any(r.found and not r.verified for r in camp.results) or closure.identities_failed:
        return FALSIFIED, wit, inputs
    return (VERIFIED if closure.full else INCONCLUSIVE), wit, inputs


@runner("char3.euclidean_lemma")
def _c3_lemma(ctx):
    return ASSUMED, {"statement": EUCLIDEAN_LEMMA}, {}


# ------------------------------------------------------------------ remark / nilpotency

@runner("remark.no_intertwiner")
def _remark(ctx):
    d0, d3 = ctx.char0(), ctx.char3()
    g = ctx.shared("char3_conjugator", lambda: find_conjugator(d3.image))
    if g is None:
        raise ImageMismatchError("the characteristic-3 level-0 image is not conjugate to the unitriangular group")
    v = automorphism_intertwiner_search(d0.residues, d3.residues, transport=g)
    wit = {"automorphisms_checked": v.automorphism_count, "found": v.found,
           "direct_extension": v.direct_extension, "transport": _key_str(g)}
    return _verdict(not v.found and not v.direct_extension), wit, ctx.inputs("pi", "rho")


@runner("nilpotency.depth")
def _nilpotency(ctx):
    d = ctx.char3()
    words = d.kernel_words_ab
    rows = {}
    ok = True
    for n in ctx.config.nilpotency_levels:
        w = nilpotency_witness(ctx.rho(), words, n, exhaustive_limit=10**4)
        rows[f"n={n}"] = {"depth": w.depth, "chain": w.chain, "word_length": len(w.word) if w.word else 0,
                          "exhaustive_next_depth_trivial": w.exhaustive_next_depth}
        ok &= w.depth == n - 1 and w.exhaustive_next_depth is not False
    return _verdict(ok), {"levels": rows, "level_generators": len(words)}, ctx.inputs("rho", "nilpotency_levels")


# ------------------------------------------------------------------ execution

def run_claim(claim_id: str, ctx: Context) -> ClaimRecord:
    start = time.perf_counter()
    try:
        verdict, wit, inputs = RUNNERS[claim_id](ctx)
    except RESOURCE_ERRORS as exc:
        verdict, inputs = INCONCLUSIVE, ctx.inputs()
        wit = {"error": type(exc).__name__, "message": str(exc), "resource_limit": True}
    except MATH_ERRORS as exc:
        verdict, wit, inputs = FALSIFIED, {"error": type(exc).__name__, "message": str(exc)}, ctx.inputs()
    return ClaimRecord(claim_id, verdict, wit, inputs, (time.perf_counter() - start) * 1000)
