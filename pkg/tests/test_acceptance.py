"""One test per acceptance criterion; the terminal summary lists a PASS/FAIL line for each.

Run alone with ``pytest tests/test_acceptance.py`` (or ``python3 tests/test_acceptance.py``).
"""

import sys
import time

import pytest

import props
from polcert.cert import FALSIFIED, RunConfig, verify
from polcert.fpgroup import abelianization, check_derivation, count_homs, cubic_derivation_script, gamma, pol2
from polcert.fpgroup import quadratic_relators, todd_coxeter
from polcert.fpgroup.presentation import cyclic
from polcert.matrep import (
    automorphism_intertwiner_search,
    char0_matches_display,
    check_relators,
    find_conjugator,
    infinite_order_certificate,
    nilpotency_witness,
    pi_generators,
    rho_generators,
    standard_unitriangular,
    steinberg_closure,
)
from polcert.matrep.congruence import descend_and_normalize, finite_image_subgroup, residue_matrix, CHAR0, CHAR3
from polcert.matrep.pipeline import char0_analysis, char3_analysis, elementary_campaign, gamma0_schreier
from polcert.matrep.reps import word
from polcert.polymap import battery, build_pol2_model, c2, c3, classify_unital_polynomial_maps, cyclic_group
from polcert.polymap import structure_claims
from polcert.exactfields import RatFuncGF3


def test_criterion_01_coset_enumeration(acceptance):
    t0 = time.perf_counter()
    table = todd_coxeter(pol2())
    dt = time.perf_counter() - t0
    ok = table.complete and table.index == 27 and dt < 1.0
    acceptance(1, ok, f"{table.index} cosets in {dt * 1000:.1f} ms")
    assert ok


def test_criterion_02_pol2_model(acceptance):
    m = build_pol2_model()
    s = structure_claims(m)
    needed = ["a^2=(e1,tau)", "a^3=(e1+e2,1)", "b^3=(2e1+2e2,1)", "bab^-1=a^4", "aba^-1=b^4"]
    ok = all(m.checks[k] for k in needed) and all(m.checks.values()) and m.group.exponent() == 9 and all(s.values())
    acceptance(2, ok, f"{sum(m.checks.values())}/{len(m.checks)} model checks, exponent {m.group.exponent()}, "
                      f"C9:C3 {s['isomorphic to C9:C3 (x4)']}, not Heisenberg {s['not isomorphic to Heisenberg mod 3']}")
    assert ok


def test_criterion_03_abelianization(acceptance):
    f = abelianization(gamma())
    acceptance(3, f == [3, 9], f"invariant factors {f}")
    assert f == [3, 9]


def test_criterion_04_derivation(acceptance):
    s = cubic_derivation_script()
    v = check_derivation(quadratic_relators(), s)
    cubes = all(c in v.conclusions for c in ("z^3", "w^3", "v^3"))
    ok = v.valid and cubes and pow(4, 8, 9) == 7
    acceptance(4, ok, f"{len(s.steps)} steps valid={v.valid}, z^3 = w^3 = v^3 = 1 derived={cubes}, 4^8 mod 9 = {pow(4, 8, 9)}")
    assert ok


def test_criterion_05_relators(acceptance):
    t0 = time.perf_counter()
    vr = check_relators(rho_generators(), gamma())
    vp = check_relators(pi_generators(), gamma())
    dt = time.perf_counter() - t0
    ok = vr.ok and all(r["det"] == "1" for r in vr.results) and vp.ok and dt < 1.0
    acceptance(5, ok, f"rho exact with det 1: {vr.ok}, pi projective: {vp.ok}, {dt * 1000:.0f} ms")
    assert ok


def test_criterion_06_infinite_order(acceptance):
    rho = rho_generators()
    a, b, ba = (infinite_order_certificate(rho, word(s)) for s in ("a", "b", "b*a"))
    ok = (a.verdict, a.power, a.trace) == ("certified", 2, "t") and (b.verdict, b.power, b.trace) == ("certified", 1, "t") \
        and ba.verdict == "inconclusive"
    acceptance(6, ok, f"tr rho(a)^2 = {a.trace}, tr rho(b) = {b.trace}, ba {ba.verdict}")
    assert ok


def test_criterion_07_schreier(acceptance):
    g0 = gamma0_schreier()
    pi, rho = pi_generators(), rho_generators()
    ok = len(g0.schreier_generators) == 4
    for w in g0.schreier_generators:
        m = descend_and_normalize(pi.raw(w), w)
        ok &= all(x.is_integral() for x in m.entries) and m.det() in (m.field.one(), -m.field.one())
        r = rho.raw(w)
        for x in r.entries:
            ok &= isinstance(x, RatFuncGF3) and x.is_polynomial() and all(k % 3 == 0 for k in x.num.support())
    acceptance(7, ok, f"{len(g0.schreier_generators)} generators; PSL3(Z[w]) and F3[u] images")
    assert ok


def _level0(ambient):
    g0 = gamma0_schreier()
    if ambient == CHAR0:
        pi = pi_generators()
        mats = [descend_and_normalize(pi.raw(w), w) for w in g0.schreier_generators]
    else:
        rho = rho_generators()
        mats = [rho.raw(w) for w in g0.schreier_generators]
    return finite_image_subgroup([residue_matrix(m, ambient) for m in mats])


def test_criterion_08_char0_level0(acceptance):
    img = _level0(CHAR0)
    ok = len(img) == 27 and img == standard_unitriangular()
    acceptance(8, ok, f"mod (1 - w): order {len(img)}, equals U+ {img == standard_unitriangular()}")
    assert ok


@pytest.mark.xfail(strict=True, reason="the mod-u image is a different Sylow 3-subgroup: conjugate to U+, not equal")
def test_criterion_08_char3_level0(acceptance):
    img = _level0(CHAR3)
    equal = img == standard_unitriangular()
    g = find_conjugator(img)
    acceptance(8, len(img) == 27 and equal,
               f"mod u: order {len(img)}, equals U+ {equal}, conjugate via g = {g}")
    assert len(img) == 27 and g is not None
    assert equal


def test_criterion_09_level1(acceptance):
    t0 = time.perf_counter()
    d0 = char0_analysis(pi_generators())
    d3 = char3_analysis(rho_generators())
    dt = time.perf_counter() - t0
    match = char0_matches_display(d0)
    ok = (d3.span.dim == 7 and d0.span.dim == 6 and match and d0.index == 624 == 2**4 * 3 * 13
          and len(d0.kernel.schreier_generators) == 82 and dt < 60)
    acceptance(9, ok, f"char3 dim {d3.span.dim}, char0 dim {d0.span.dim} (display match {match}), "
                      f"index {d0.index}, {len(d0.kernel.schreier_generators)} kernel generators, {dt:.2f} s")
    assert ok


def test_criterion_10_intertwiner(acceptance):
    d0 = char0_analysis(pi_generators())
    d3 = char3_analysis(rho_generators())
    g = find_conjugator(d3.image)
    v = automorphism_intertwiner_search(d0.residues, d3.residues, transport=g)
    ok = v.automorphism_count == 432 and not v.found and not v.direct_extension
    acceptance(10, ok, f"{v.automorphism_count} automorphisms of U+, intertwiner found {v.found}")
    assert ok


def test_criterion_11_cross_oracle(acceptance):
    parts = []
    ok = True
    for name, H in battery().items():
        cub = len(classify_unital_polynomial_maps(c3(), H, 3))
        quad = len(classify_unital_polynomial_maps(c3(), H, 2))
        hg, hp = count_homs(gamma(), H), count_homs(pol2(), H)
        ok &= cub == hg and quad == hp
        parts.append(f"{name} {cub}/{hg}, {quad}/{hp}")
    c8 = len(classify_unital_polynomial_maps(c2(), cyclic_group(8), 3))
    ok &= c8 == 8 == count_homs(cyclic(8), cyclic_group(8))
    acceptance(11, ok, "; ".join(parts) + f"; C2->C8 cubic {c8}")
    assert ok


def test_criterion_12_nilpotency(acceptance):
    d3 = char3_analysis(rho_generators())
    rho = rho_generators()
    depths = {}
    ok = True
    for n in (2, 3, 4):
        w = nilpotency_witness(rho, d3.kernel_words_ab, n, exhaustive_limit=10**4)
        depths[n] = w.depth
        ok &= w.depth == n - 1
        if n == 2:
            ok &= w.exhaustive_next_depth is True
    acceptance(12, ok, f"depths {depths}; level-1 quotient abelian mod u^2")
    assert ok


@pytest.mark.parametrize("name", ["field_axioms", "eval_homomorphism", "grading", "level1_trace_zero"])
def test_criterion_13_properties(acceptance, name):
    bad = getattr(props, name)(props.CASES)
    acceptance(13, not bad, f"{name}: {props.CASES} cases, {len(bad)} failures")
    assert not bad


def test_criterion_14_elementary(acceptance):
    camp = elementary_campaign()
    bad = [r.target for r in camp.results if r.found and not r.verified]
    closure = steinberg_closure(camp.words.keys())
    ok = not bad and not closure.identities_failed
    acceptance(14, ok, f"{len(camp.words)} verified words, {len(camp.missing())} targets missing, "
                       f"{len(bad)} post-verification failures, closure: {closure.verdict}")
    assert ok


@pytest.mark.parametrize("mutation, target, claim", [
    ("pi_a", "char0", "char0.relators"),
    ("rho_b", "char3", "char3.relators"),
    ("relator", "presentation", "gamma.abelianization"),
])
def test_criterion_15_negative_controls(acceptance, mutation, target, claim):
    cert = verify(target, RunConfig(corrupt=[mutation]), threads=1)
    got = {r.claim_id: r.verdict for r in cert.records}[claim]
    acceptance(15, got == FALSIFIED, f"{mutation}: {claim} {got}")
    assert got == FALSIFIED


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
