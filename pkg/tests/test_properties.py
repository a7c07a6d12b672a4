"""Hypothesis-driven versions of the algebraic properties (shrinking counterexamples)."""

from hypothesis import given, settings, strategies as st

from polcert.exactfields import GF3, Eisen, PolyGF3, RatFuncGF3, Tower
from polcert.fpgroup import Word, inverse
from polcert.matrep import mu, pi_generators, rho_generators, weight

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
eisen = st.builds(Eisen, fracs, fracs)
tower = st.builds(Tower, eisen, eisen, eisen)
polys = st.lists(st.integers(0, 2), max_size=5).map(PolyGF3)
ratfuncs = st.tuples(polys, polys.filter(lambda p: not p.is_zero())).map(lambda nd: RatFuncGF3(*nd))
words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6).map(Word)

RHO = rho_generators()
PI = pi_generators()


@given(tower, tower, tower)
@settings(max_examples=200, deadline=None)
def test_tower_ring_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if not x.is_zero():
        assert x * x.inv() == Tower.one()


@given(ratfuncs, ratfuncs)
@settings(max_examples=300, deadline=None)
def test_ratfunc_field(x, y):
    assert x + y == y + x and x * y == y * x
    if not y.is_zero():
        assert (x / y) * y == x
    assert x.den.coeffs[-1] == 1  # monic denominator


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_gf3_matches_ints(a, b):
    assert GF3(a) * GF3(b) == GF3(a * b) and GF3(a) - GF3(b) == GF3(a - b)


@given(words, words)
@settings(max_examples=200, deadline=None)
def test_rho_is_homomorphism(u, v):
    assert RHO.raw(u * v) == RHO.raw(u) * RHO.raw(v)
    assert RHO.raw(inverse(u)) == RHO.raw(u).inverse()


@given(words, words)
@settings(max_examples=100, deadline=None)
def test_pi_is_projective_homomorphism(u, v):
    assert PI.equal(PI.raw(u * v), PI.raw(u) * PI.raw(v))


@given(words)
@settings(max_examples=300, deadline=None)
def test_grading(w):
    d = weight(w) % 3
    assert d == (-mu(w)) % 3
    assert all(x.is_zero() or x.r_support() == (d,) for x in PI.raw(w).entries)
