"""Seeded randomized property checks; each returns the list of failing cases."""

import random
from fractions import Fraction

from polcert.exactfields import GF3, Eisen, PolyGF3, RatFuncGF3, Tower
from polcert.fpgroup import Word, inverse
from polcert.matrep import CHAR0, CHAR3, level1_log, mu, pi_generators, rho_generators, weight
from polcert.matrep.pipeline import char0_data, char3_data

CASES = 10_000
SEED = 20240917


def _q(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 3))


def _eisen(rng):
    return Eisen(_q(rng), _q(rng))


def _tower(rng):
    return Tower(_eisen(rng), _eisen(rng), _eisen(rng))


def _gf3(rng):
    return GF3(rng.randrange(3))


def _ratfunc(rng):
    num = PolyGF3([rng.randrange(3) for _ in range(rng.randint(0, 3))])
    den = PolyGF3([rng.randrange(3) for _ in range(rng.randint(1, 3))])
    if den.is_zero():
        den = PolyGF3.one()
    return RatFuncGF3(num, den)


FIELDS = [(Eisen, _eisen), (Tower, _tower), (GF3, _gf3), (RatFuncGF3, _ratfunc)]


def field_axioms(cases=CASES, seed=SEED):
    rng = random.Random(seed)
    bad = []
    for n in range(cases):
        F, gen = FIELDS[n % len(FIELDS)]
        x, y, z = gen(rng), gen(rng), gen(rng)
        zero, one = F.zero(), F.one()
        ok = (
            (x + y) + z == x + (y + z)
            and (x * y) * z == x * (y * z)
            and x + y == y + x
            and x * y == y * x
            and x * (y + z) == x * y + x * z
            and x + zero == x and x * one == x
            and x + (-x) == zero
            and (x.is_zero() or x * x.inv() == one)
        )
        if not ok:
            bad.append((F.__name__, x, y, z))
    return bad


def _rand_word(rng, max_len):
    return Word(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, max_len)))


def eval_homomorphism(cases=CASES, seed=SEED):
    """ev(uv) = ev(u) ev(v) and ev(u^-1) = ev(u)^-1, alternating rho (exact) and pi (projective)."""
    rng = random.Random(seed)
    evs = [rho_generators(), pi_generators()]
    bad = []
    for n in range(cases):
        ev = evs[n % 2]
        u, v = _rand_word(rng, 4), _rand_word(rng, 4)
        mu_, mv = ev.raw(u), ev.raw(v)
        ok = ev.equal(ev.raw(u * v), mu_ * mv) and ev.equal(ev.raw(inverse(u)) * mu_, ev.one)
        if not ok:
            bad.append((n % 2, u, v))
    return bad


def grading(cases=CASES, seed=SEED):
    """d(w) = -mu(w) mod 3 (so 3 | d(w) iff w lies in the kernel of mu), and pi(w) is supported on r^(d(w) mod 3)."""
    rng = random.Random(seed)
    pi = pi_generators()
    bad = []
    for _ in range(cases):
        w = _rand_word(rng, 6)
        d = weight(w) % 3
        m = pi.raw(w)
        ok = d == (-mu(w)) % 3 and all(x.is_zero() or x.r_support() == (d,) for x in m.entries)
        if not ok:
            bad.append(w)
    return bad


def level1_trace_zero(cases=CASES, seed=SEED):
    """Random products of level-1 kernel elements (both characteristics) have trace-0 logs."""
    rng = random.Random(seed)
    pools = []
    for data, amb in ((char0_data(), CHAR0), (char3_data(), CHAR3)):
        ev = data.evaluator()
        mats = [ev.raw(w) for w in data.kernel.schreier_generators]
        pools.append((amb, mats + [m.inverse() for m in mats]))
    bad = []
    for n in range(cases):
        amb, mats = pools[n % 2]
        m = mats[rng.randrange(len(mats))]
        for _ in range(rng.randint(0, 2)):
            m = m * mats[rng.randrange(len(mats))]
        try:
            ok = level1_log(m, amb).trace().is_zero()
        except ArithmeticError:
            ok = False
        if not ok:
            bad.append((amb, n))
    return bad
