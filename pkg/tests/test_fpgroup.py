import math

import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy import Matrix, ZZ

from polcert.fpgroup import (
    Word,
    abelianization,
    check_derivation,
    commutator,
    count_homs,
    cubic_derivation_script,
    format_word,
    gamma,
    group_order,
    invariant_factors,
    parse_presentation,
    parse_word,
    pol2,
    quadratic_relators,
    reidemeister_schreier,
    todd_coxeter,
)
from polcert.fpgroup.derivation import Step
from polcert.fpgroup.presentation import PresentationSyntaxError, cyclic
from polcert.fpgroup.words import WordSyntaxError, shortlex_key
from polcert.polymap import battery, c3, cyclic_group
from polcert.polymap.maps import SIGMA, TAU


def test_word_parsing_and_formatting():
    w = parse_word("[b*a, a*b^-1*a]")
    assert w == commutator(Word((2, 1)), Word((1, -2, 1)))
    assert parse_word("a a^-1 b") == Word((2,))
    assert format_word(parse_word("(a*b)^3")) == "a*b*a*b*a*b"
    assert parse_word(format_word(w)) == w
    with pytest.raises(WordSyntaxError):
        parse_word("a*(b")


def test_letter_order():
    keys = sorted([(2,), (-1,), (1,), (-2,)], key=shortlex_key)
    assert keys == [(1,), (-1,), (2,), (-2,)]


def test_presentation_parse_errors():
    with pytest.raises((PresentationSyntaxError, WordSyntaxError)):
        parse_presentation("gens: a b\nrels: c^2")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("rels: a^2")


def _sympy_order(p):
    F, a, b = free_group("a, b")
    gens = (a, b)
    rels = []
    for r in p.relators:
        x = F.identity
        for s in r:
            x = x * (gens[abs(s) - 1] ** (1 if s > 0 else -1))
        rels.append(x)
    return FpGroup(F, rels).order()


@pytest.mark.parametrize("text, order", [
    ("gens: a b\nrels: a^2, b^3, (a*b)^2", 6),
    ("gens: a b\nrels: a^2, b^3, (a*b)^3", 12),
    ("gens: a b\nrels: a^2, b^3, (a*b)^4", 24),
    ("gens: a b\nrels: a^2, b^3, (a*b)^5", 60),
])
def test_coset_enumeration_known_orders(text, order):
    p = parse_presentation(text)
    assert group_order(p) == order == _sympy_order(p)


def test_pol2_order_matches_sympy():
    assert group_order(pol2()) == 27 == _sympy_order(pol2())


def test_coset_limit_is_inconclusive():
    t = todd_coxeter(gamma(), max_cosets=50)
    assert not t.complete and t.index is None


def test_subgroup_index():
    p = parse_presentation("gens: a b\nrels: a^2, b^3, (a*b)^5")
    assert todd_coxeter(p, [parse_word("b")]).index == 20


def test_abelianization_against_sympy():
    from polcert.fpgroup.snf import relation_matrix

    for p, want in ((gamma(), [3, 9]), (pol2(), [3, 3])):
        assert abelianization(p) == want
        m = Matrix(relation_matrix(p))
        d = sympy_snf(m, domain=ZZ)
        diag = sorted(abs(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0)
        assert [x for x in diag if x != 1] == want
    assert invariant_factors([[2, 0], [0, 3]]) == [6]
    assert abelianization(parse_presentation("gens: a b\nrels: a^4")) == [4, 0]


def test_reidemeister_schreier_gamma0():
    d = reidemeister_schreier(2, c3(), [SIGMA, TAU])
    assert d.index == 3 and d.rank_formula() == 4 == len(d.schreier_generators)
    assert [format_word(w) for w in d.schreier_generators] == ["b*a", "a^3", "a*b", "a^-1*b*a^-1"]


def test_count_homs_cyclic_oracle():
    for n in range(1, 13):
        for m in (2, 3, 4, 6, 9):
            assert count_homs(cyclic(n), cyclic_group(m)) == math.gcd(n, m)


def test_count_homs_battery():
    want = {"S3": (9, 9), "C9:C3": (243, 135), "Heis3": (729, 297), "C9xC3": (243, 81)}
    for name, H in battery().items():
        assert (count_homs(gamma(), H), count_homs(pol2(), H)) == want[name]


def test_derivation_validates():
    v = check_derivation(quadratic_relators(), cubic_derivation_script())
    assert v.valid, v.reason
    assert set(v.conclusions) >= {"z^3", "w^3", "v^3"}
    assert pow(4, 8, 9) == 7


def test_derivation_rejects_tampered_step():
    s = cubic_derivation_script()
    bad = s.steps[6]
    s.steps[6] = Step(bad.label, bad.lhs, Word(bad.rhs) * Word((1,)), bad.rule, bad.refs, bad.arg, bad.side,
                      bad.exponent, bad.note)
    assert not check_derivation(quadratic_relators(), s).valid


def test_derivation_rejects_missing_relator():
    rels = quadratic_relators()
    rels.pop("quad1")
    assert not check_derivation(rels, cubic_derivation_script()).valid
