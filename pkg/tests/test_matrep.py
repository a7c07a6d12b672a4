import random

import numpy as np
import pytest

from polcert.exactfields import GF3, RatFuncGF3
from polcert.fpgroup import gamma
from polcert.matrep import (
    CHAR3,
    FULL,
    LevelError,
    Mat3,
    NotInGammaZeroError,
    automorphism_intertwiner_search,
    bounded_no_relation,
    char0_data,
    char0_matches_display,
    char3_data,
    check_relators,
    corrupted,
    descend_and_normalize,
    elem,
    elementary_word_search,
    find_conjugator,
    gamma0_schreier,
    gf3_key,
    gf3_matrix,
    index_reconstruction,
    infinite_order_certificate,
    level1_log,
    nilpotency_witness,
    parse_target,
    pi_generators,
    residue_matrix,
    rho_generators,
    sl3_order,
    standard_unitriangular,
    steinberg_closure,
    steinberg_identity_holds,
)
from polcert.matrep.reps import word
from polcert.matrep.steinberg import PAIRS

CONJUGATOR = (0, 1, 0, 1, 0, 0, 0, 0, 2)


def np_mod3(m: Mat3) -> np.ndarray:
    return np.array(gf3_key(m)).reshape(3, 3)


def test_mat3_against_numpy():
    rng = random.Random(5)
    for _ in range(300):
        x = gf3_matrix([rng.randrange(3) for _ in range(9)])
        y = gf3_matrix([rng.randrange(3) for _ in range(9)])
        assert (np_mod3(x * y) == (np_mod3(x) @ np_mod3(y)) % 3).all()
        d = int(round(np.linalg.det(np_mod3(x)))) % 3
        assert x.det() == GF3(d)
        if d:
            assert (x * x.inverse()).is_identity()


def test_relators_hold():
    assert check_relators(rho_generators(), gamma()).ok
    assert all(r["det"] == "1" for r in check_relators(rho_generators(), gamma()).results)
    assert check_relators(pi_generators(), gamma()).ok


@pytest.mark.parametrize("text", ["a^3", "(a*b^-1)^3", "a^9", "b^3", "[a,b]"])
def test_false_relators_fail(text):
    assert not check_relators(pi_generators(), [word(text)]).ok
    assert not check_relators(rho_generators(), [word(text)]).ok


def test_ab_cubed_is_trivial_in_both():
    # (ab)^3 is conjugate to (ba)^3, a genuine relator
    assert check_relators(pi_generators(), [word("(a*b)^3")]).ok
    assert check_relators(rho_generators(), [word("(a*b)^3")]).ok


def test_corruption_is_detected():
    bad = corrupted(rho_generators(), 2, (0, 0), RatFuncGF3(1))
    assert not check_relators(bad, gamma()).ok


def test_descent():
    pi = pi_generators()
    for w in gamma0_schreier().schreier_generators:
        m = descend_and_normalize(pi.raw(w), w)
        assert all(x.is_integral() for x in m.entries) and m.det() == m.field.one()
    with pytest.raises(NotInGammaZeroError):
        descend_and_normalize(pi.raw(word("a")), word("a"))


def test_level0_images():
    assert char0_data().image == standard_unitriangular()
    d3 = char3_data()
    assert len(d3.image) == 27
    assert d3.image != standard_unitriangular()
    assert find_conjugator(d3.image) == CONJUGATOR


def test_level1_spans_and_index():
    d0, d3 = char0_data(), char3_data()
    assert len(d0.kernel.schreier_generators) == 82 == len(d3.kernel.schreier_generators)
    assert d0.span.dim == 6 and d0.span.raw_dim == 7 and char0_matches_display(d0)
    assert d3.span.dim == 7
    assert d0.index == d3.index == 624 == 2**4 * 3 * 13
    assert sl3_order() == 5616
    assert index_reconstruction(27, 8, CHAR3) == 5616 // 27


def test_level1_log_rejects_level0():
    with pytest.raises(LevelError):
        level1_log(char3_data().integral[0], CHAR3)


def test_intertwiner():
    d0, d3 = char0_data(), char3_data()
    v = automorphism_intertwiner_search(d0.residues, d3.residues, transport=find_conjugator(d3.image))
    assert v.automorphism_count == 432 and not v.found and not v.direct_extension
    same = automorphism_intertwiner_search(d0.residues, d0.residues)
    assert same.found and same.direct_extension


def test_infinite_order():
    rho = rho_generators()
    a = infinite_order_certificate(rho, word("a"))
    b = infinite_order_certificate(rho, word("b"))
    ba = infinite_order_certificate(rho, word("b*a"))
    assert (a.verdict, a.power, a.trace) == ("certified", 2, "t")
    assert (b.verdict, b.power, b.trace) == ("certified", 1, "t")
    assert ba.verdict == "inconclusive"


def test_bounded_relations():
    from polcert.matrep import WordEvaluator

    pi = pi_generators()
    torsion = WordEvaluator([pi.raw(word("a^3")), pi.raw(word("b^3"))], mode="projective")
    assert bounded_no_relation(torsion, (1,), (2,), 6, stop_at_first=True).relation_found
    free = WordEvaluator([pi.raw(word("b^3")), pi.raw(word("a^4*b"))], mode="projective")
    assert not bounded_no_relation(free, (1,), (2,), 6).relation_found


def test_nilpotency_small():
    d3 = char3_data()
    w = nilpotency_witness(rho_generators(), d3.kernel_words_ab, 2)
    assert w.depth == 1 and w.exhaustive_next_depth is True
    w = nilpotency_witness(rho_generators(), d3.kernel_words_ab, 3, exhaustive_limit=1)
    assert w.depth == 2


def test_steinberg():
    for i, j, k in [(1, 2, 3), (3, 1, 2), (2, 3, 1)]:
        assert steinberg_identity_holds(i, j, k, 1, 2)
    no32 = [(i, j, 1) for (i, j) in PAIRS if (i, j) != (3, 2)] + [(3, 2, 2), (3, 2, 3)]
    # without E32(u) the only commutator routes to E12(u^2) and E31(u^2) are missing
    assert steinberg_closure(no32).gaps == ["E12(u^2)", "E31(u^2)"]
    assert steinberg_closure(no32 + [(1, 2, 2), (3, 1, 2)]).verdict == FULL
    partial = steinberg_closure([(1, 2, 2)])
    assert partial.verdict != FULL and partial.gaps


def test_elementary_search():
    rho = rho_generators()
    gens = gamma0_schreier().schreier_generators
    r = elementary_word_search(rho, gens, parse_target("E12:u"), max_len=6, max_entry_degree=3, meet_in_middle=True)
    assert r.found and r.verified
    assert rho.raw(r.word) == elem(1, 2, 1)
    ident = elementary_word_search(rho, gens, parse_target("identity"))
    assert ident.found and len(ident.word) == 0
    tiny = elementary_word_search(rho, gens, parse_target("E13:u^2"), max_len=4, max_entry_degree=3)
    assert not tiny.found and "inconclusive" in tiny.reason


def test_e32_u_outside_level1_span():
    v = [0] * 9
    v[3 * 2 + 1] = 1
    assert not char3_data().span.contains(v)


def test_residue_matrix_char3():
    m = char3_data().integral[1]
    assert residue_matrix(m, CHAR3).det() == GF3(1)
