"""Scalar arithmetic against sympy as an independent exact oracle."""

from fractions import Fraction
import random

import pytest
import sympy as sp

from polcert.exactfields import (
    GF3,
    LAMBDA,
    OMEGA,
    Eisen,
    NotIntegralError,
    PolyGF3,
    R,
    RatFuncGF3,
    Tower,
    eisen_gcd,
    eisen_units,
    lambda_valuation,
    residue_lambda,
    u_coefficient,
    u_residue,
    u_valuation,
)

w_, r_ = sp.symbols("w r")
IDEAL = sp.groebner([w_**2 + w_ + 1, r_**3 - (1 - w_)], r_, w_, order="lex", domain="QQ")


def sym_eisen(x: Eisen):
    return (sp.Rational(x.a, x.d) + sp.Rational(x.b, x.d) * w_)


def sym_tower(x: Tower):
    return sum(sym_eisen(e) * r_**k for k, e in enumerate(x.coeffs()))


def same(expr, x) -> bool:
    return sp.expand(IDEAL.reduce(sp.expand(expr - sym_tower(Tower.coerce(x))))[1]) == 0


def rand_eisen(rng, frac=True):
    q = (lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 4))) if frac else (lambda: rng.randint(-9, 9))
    return Eisen(q(), q())


def rand_tower(rng):
    return Tower(rand_eisen(rng), rand_eisen(rng), rand_eisen(rng))


def test_omega_relations():
    assert OMEGA * OMEGA + OMEGA + Eisen(1) == Eisen(0)
    assert OMEGA ** 3 == Eisen(1)
    # 3 = -omega^2 (1 - omega)^2
    assert -(OMEGA ** 2) * LAMBDA * LAMBDA == Eisen(3)


def test_eisen_against_sympy():
    rng = random.Random(1)
    for _ in range(300):
        x, y = rand_eisen(rng), rand_eisen(rng)
        assert same(sym_eisen(x) * sym_eisen(y), x * y)
        assert same(sym_eisen(x) + sym_eisen(y), x + y)
        if not y.is_zero():
            assert same(sym_eisen(x) * sym_eisen(y.inv()), x * y.inv())
            assert x / y * y == x


def test_tower_against_sympy():
    rng = random.Random(2)
    assert same(r_**3, Tower(LAMBDA))
    assert R ** 3 == Tower(LAMBDA)
    for _ in range(150):
        x, y = rand_tower(rng), rand_tower(rng)
        assert same(sym_tower(x) * sym_tower(y), x * y)
        if not y.is_zero():
            assert y * y.inv() == Tower.one()


def test_units_and_gcd():
    units = eisen_units()
    assert len(units) == 6 and all(u.norm() == 1 for u in units)
    g = eisen_gcd(Eisen(6), Eisen(3, 3))
    # 3 and 3(1 + omega) = -3 omega^2 are associates
    assert g.norm() == 9
    assert lambda_valuation(Eisen(3)) == 2
    assert lambda_valuation(Eisen(9, 0) * LAMBDA) == 5
    assert residue_lambda(Eisen(2, 5)) == GF3(7)  # omega = 1 mod lambda
    with pytest.raises(NotIntegralError):
        residue_lambda(Eisen(Fraction(1, 3)))


def test_poly_divmod_and_rational_normal_form():
    rng = random.Random(3)
    for _ in range(300):
        a = PolyGF3([rng.randrange(3) for _ in range(rng.randint(0, 7))])
        b = PolyGF3([rng.randrange(3) for _ in range(rng.randint(1, 5))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a and r.degree < b.degree
    t = RatFuncGF3.t()
    x = (t * t - RatFuncGF3(1)) / (t - RatFuncGF3(1))
    assert x == t + RatFuncGF3(1) and x.is_polynomial()
    assert (t ** 3).is_polynomial() and not RatFuncGF3.t(-1).is_polynomial()
    assert RatFuncGF3(2).is_constant() and not t.is_constant()


def test_u_adic_helpers():
    u = RatFuncGF3.t(3)
    x = u * u + RatFuncGF3(2) * u
    assert u_valuation(x) == 1
    assert u_coefficient(x, 1) == GF3(2) and u_coefficient(x, 2) == GF3(1)
    assert u_residue(x + RatFuncGF3(1)) == GF3(1)
    with pytest.raises(Exception):
        u_valuation(RatFuncGF3.t(1))  # t is not in F_3(u)


def test_gf3_arithmetic():
    for a in range(3):
        for b in range(3):
            assert GF3(a) * GF3(b) == GF3(a * b) and GF3(a) + GF3(b) == GF3(a + b)
    assert GF3(2).inv() == GF3(2)
    with pytest.raises(ZeroDivisionError):
        GF3(0).inv()
