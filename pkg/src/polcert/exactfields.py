"""Exact scalar arithmetic.

Scalar domains used by the matrix layer:

* ``Fraction`` (stdlib) for rationals,
* ``Eisen``      -- Q(omega), omega**2 + omega + 1 = 0,
* ``Tower``      -- E = Q(omega)[r] / (r**3 - (1 - omega)),
* ``GF3``        -- the field with three elements,
* ``PolyGF3``    -- F_3[t],
* ``RatFuncGF3`` -- F_3(t).

Every value is immutable and stored in a canonical form, so ``==`` is
structural and values are hashable.  Eisen and Tower keep integer
coordinates over one positive common denominator; this is several times
faster than carrying a Fraction per coordinate.

Valuations: ``lambda_valuation`` / ``residue_lambda`` work at the prime
lambda = 1 - omega of Z[omega]; ``u_valuation`` / ``u_residue`` work at
u = t**3 inside F_3(t).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, inf
from typing import Iterable, Sequence


class NotIntegralError(ArithmeticError):
    """Raised when a residue is requested for a value with a pole at the prime."""


class NotInSubfieldError(ValueError):
    """Raised when an element of F_3(t) does not lie in F_3(u), u = t**3."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def v3(n: int) -> int:
    """3-adic valuation of a nonzero integer."""
    n = abs(n)
    k = 0
    while n % 3 == 0:
        n //= 3
        k += 1
    return k


# ---------------------------------------------------------------------------
# Q(omega)
# ---------------------------------------------------------------------------


class Eisen:
    """``(a + b*omega) / d`` with integers a, b and d >= 1 in lowest terms."""

    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, c0=0, c1=0):
        c0 = _as_fraction(c0)
        c1 = _as_fraction(c1)
        d = _lcm(c0.denominator, c1.denominator)
        self._set(c0.numerator * (d // c0.denominator), c1.numerator * (d // c1.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self.a, self.b, self.d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Eisen":
        x = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        x._set(a, b, d)
        return x

    @classmethod
    def zero(cls) -> "Eisen":
        return cls._raw(0, 0, 1)

    @classmethod
    def one(cls) -> "Eisen":
        return cls._raw(1, 0, 1)

    @classmethod
    def omega(cls) -> "Eisen":
        return cls._raw(0, 1, 1)

    @classmethod
    def coerce(cls, x) -> "Eisen":
        if isinstance(x, Eisen):
            return x
        return cls(x)

    # coordinates ------------------------------------------------------
    @property
    def c0(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def c1(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        """True when the value lies in Z[omega]."""
        return self.d == 1

    def norm(self) -> Fraction:
        """Field norm a**2 - a*b + b**2 down to Q."""
        a, b = self.a, self.b
        return Fraction(a * a - a * b + b * b, self.d * self.d)

    def conj(self) -> "Eisen":
        # omega -> omega**2 = -1 - omega
        return Eisen._raw(self.a - self.b, -self.b, self.d)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Eisen):
            if isinstance(other, (int, Fraction)):
                other = Eisen(other)
            else:
                return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == d2:
            return Eisen._raw(self.a + other.a, self.b + other.b, d1)
        return Eisen._raw(self.a * d2 + other.a * d1, self.b * d2 + other.b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Eisen._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        if not isinstance(other, Eisen):
            if isinstance(other, (int, Fraction)):
                other = Eisen(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Eisen):
            if isinstance(other, int):
                return Eisen._raw(self.a * other, self.b * other, self.d)
            if isinstance(other, Fraction):
                return Eisen._raw(self.a * other.numerator, self.b * other.numerator, self.d * other.denominator)
            return NotImplemented
        a, b, c, e = self.a, self.b, other.a, other.b
        bd = b * e
        return Eisen._raw(a * c - bd, a * e + b * c - bd, self.d * other.d)

    __rmul__ = __mul__

    def inv(self) -> "Eisen":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        a, b = self.a, self.b
        n = a * a - a * b + b * b
        # (a + b w)^-1 = d * (a - b - b w) / n
        return Eisen._raw((a - b) * self.d, -b * self.d, n)

    def __truediv__(self, other):
        other = Eisen.coerce(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return Eisen.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result, base = Eisen.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Eisen):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Eisen", self.a, self.b, self.d))
        return self._hash

    def __repr__(self):
        return f"Eisen({self.c0}, {self.c1})"

    def __str__(self):
        c0, c1 = self.c0, self.c1
        if c1 == 0:
            return str(c0)
        w = "w" if c1 == 1 else ("-w" if c1 == -1 else f"{c1}*w")
        if c0 == 0:
            return w
        return f"{c0}{'' if w.startswith('-') else '+'}{w}"


OMEGA = Eisen.omega()
LAMBDA = Eisen._raw(1, -1, 1)  # 1 - omega


def lambda_valuation(x: Eisen) -> int | float:
    """Valuation at the prime 1 - omega (``inf`` for zero).

    The prime 1 - omega is the only prime above 3 and has norm 3, so the
    valuation equals the 3-adic valuation of the norm.
    """
    x = Eisen.coerce(x)
    if x.is_zero():
        return inf
    a, b = x.a, x.b
    return v3(a * a - a * b + b * b) - 2 * v3(x.d)


def residue_lambda(x: Eisen) -> "GF3":
    """Image of x in Z[omega]/(1 - omega) = F_3 (omega maps to 1)."""
    x = Eisen.coerce(x)
    if x.is_zero():
        return GF3(0)
    nu = lambda_valuation(x)
    if nu < 0:
        raise NotIntegralError(f"{x} is not lambda-integral (valuation {nu})")
    a, b, d = x.a, x.b, x.d
    if d % 3 == 0:
        # lambda-integral with 3 | d: write x = (a + b w)/d and rescale by
        # 3 = -w^2 (1-w)^2 until the denominator is prime to 3.
        # Equivalently divide the integral numerator by lambda**(2k).
        k = v3(d)
        num = Eisen._raw(a, b, 1)
        lam_inv = Eisen._raw(2, 1, 3)  # 1/(1 - w) = (2 + w)/3
        for _ in range(2 * k):
            num = num * lam_inv
        # num * (unit) where 3**k = (-w^2)**k lambda**(2k) -> the unit's residue is (-1)**k
        rest = d // 3**k
        res = residue_lambda(num)
        sign = 1 if k % 2 == 0 else -1
        return GF3(res.value * sign * pow(rest, -1, 3))
    return GF3((a + b) * pow(d, -1, 3))


def eisen_divmod(x: Eisen, y: Eisen) -> tuple[Eisen, Eisen]:
    """Euclidean division in Z[omega]: x = q*y + r with N(r) < N(y)."""
    if not (x.is_integral() and y.is_integral()):
        raise ValueError("Euclidean division needs Z[omega] arguments")
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[omega]")
    q = x / y
    # nearest lattice point; testing the neighbours keeps N(r) < N(y)
    best = None
    fa, fb = q.c0, q.c1
    for da in (0, 1):
        for db in (0, 1):
            cand = Eisen._raw(int(fa // 1) + da, int(fb // 1) + db, 1)
            r = x - cand * y
            n = r.norm()
            if best is None or n < best[0]:
                best = (n, cand, r)
    return best[1], best[2]


def eisen_gcd(x: Eisen, y: Eisen) -> Eisen:
    """A gcd in Z[omega] (defined up to a unit)."""
    while not y.is_zero():
        _, r = eisen_divmod(x, y)
        x, y = y, r
    return x


def eisen_units() -> list[Eisen]:
    """The six units of Z[omega]: +-1, +-omega, +-omega**2."""
    w2 = Eisen._raw(-1, -1, 1)
    out = []
    for u in (Eisen.one(), OMEGA, w2):
        out.extend([u, -u])
    return out


# ---------------------------------------------------------------------------
# E = Q(omega)(r), r**3 = 1 - omega
# ---------------------------------------------------------------------------


def _lam_mul(a: int, b: int) -> tuple[int, int]:
    # (1 - w)(a + b w) = (a + b) + (2b - a) w
    return a + b, 2 * b - a


class Tower:
    """``e0 + e1*r + e2*r**2`` over Q(omega) with r**3 = 1 - omega.

    Stored as six integers over a common positive denominator.
    """

    __slots__ = ("c", "d", "_hash")

    def __init__(self, e0=0, e1=0, e2=0):
        es = [Eisen.coerce(e) for e in (e0, e1, e2)]
        d = 1
        for e in es:
            d = _lcm(d, e.d)
        c = []
        for e in es:
            m = d // e.d
            c.extend((e.a * m, e.b * m))
        self._set(tuple(c), d)

    def _set(self, c: tuple, d: int) -> None:
        g = gcd(*c, d)
        if g > 1:
            c = tuple(x // g for x in c)
            d //= g
        self.c = c
        self.d = d
        self._hash = None

    @classmethod
    def _raw(cls, c, d: int) -> "Tower":
        x = object.__new__(cls)
        if d < 0:
            c = tuple(-v for v in c)
            d = -d
        x._set(tuple(c), d)
        return x

    @classmethod
    def zero(cls) -> "Tower":
        return cls._raw((0,) * 6, 1)

    @classmethod
    def one(cls) -> "Tower":
        return cls._raw((1, 0, 0, 0, 0, 0), 1)

    @classmethod
    def r(cls) -> "Tower":
        return cls._raw((0, 0, 1, 0, 0, 0), 1)

    @classmethod
    def coerce(cls, x) -> "Tower":
        if isinstance(x, Tower):
            return x
        return cls(x)

    def coeffs(self) -> tuple[Eisen, Eisen, Eisen]:
        """The three Q(omega) coordinates in the basis 1, r, r**2."""
        c, d = self.c, self.d
        return (Eisen._raw(c[0], c[1], d), Eisen._raw(c[2], c[3], d), Eisen._raw(c[4], c[5], d))

    def is_zero(self) -> bool:
        return not any(self.c)

    def r_support(self) -> tuple[int, ...]:
        """Powers of r (0, 1, 2) carrying a nonzero coordinate."""
        c = self.c
        return tuple(k for k in range(3) if c[2 * k] or c[2 * k + 1])

    def __add__(self, other):
        if not isinstance(other, Tower):
            if isinstance(other, (int, Fraction, Eisen)):
                other = Tower(other)
            else:
                return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == d2:
            return Tower._raw(tuple(x + y for x, y in zip(self.c, other.c)), d1)
        return Tower._raw(tuple(x * d2 + y * d1 for x, y in zip(self.c, other.c)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Tower._raw(tuple(-x for x in self.c), self.d)

    def __sub__(self, other):
        if not isinstance(other, Tower):
            if isinstance(other, (int, Fraction, Eisen)):
                other = Tower(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Tower):
            if isinstance(other, (int, Fraction, Eisen)):
                other = Tower(other)
            else:
                return NotImplemented
        x, y = self.c, other.c
        # p_k = sum_{i+j=k} e_i f_j in Z[w]; (a+bw)(c+dw) = (ac-bd) + (ad+bc-bd)w
        p = [[0, 0] for _ in range(5)]
        for i in range(3):
            a, b = x[2 * i], x[2 * i + 1]
            if not (a or b):
                continue
            for j in range(3):
                c, e = y[2 * j], y[2 * j + 1]
                if not (c or e):
                    continue
                be = b * e
                pk = p[i + j]
                pk[0] += a * c - be
                pk[1] += a * e + b * c - be
        l3 = _lam_mul(*p[3])
        l4 = _lam_mul(*p[4])
        c = (p[0][0] + l3[0], p[0][1] + l3[1], p[1][0] + l4[0], p[1][1] + l4[1], p[2][0], p[2][1])
        return Tower._raw(c, self.d * other.d)

    __rmul__ = __mul__

    def mult_matrix(self) -> list[list[Eisen]]:
        """Matrix of multiplication by self on the Q(omega)-basis 1, r, r**2 (columns = images)."""
        e0, e1, e2 = self.coeffs()
        lam = LAMBDA
        # x*1 = e0 + e1 r + e2 r^2; x*r = lam e2 + e0 r + e1 r^2; x*r^2 = lam e1 + lam e2 r + e0 r^2
        return [
            [e0, lam * e2, lam * e1],
            [e1, e0, lam * e2],
            [e2, e1, e0],
        ]

    def inv(self) -> "Tower":
        """Inverse by solving (multiplication matrix) * y = (1, 0, 0) over Q(omega)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in E")
        m = self.mult_matrix()
        det = _det3(m)
        # y = first column of adj(m) / det
        y0 = m[1][1] * m[2][2] - m[1][2] * m[2][1]
        y1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0])
        y2 = m[1][0] * m[2][1] - m[1][1] * m[2][0]
        dinv = det.inv()
        return Tower(y0 * dinv, y1 * dinv, y2 * dinv)

    def __truediv__(self, other):
        return self * Tower.coerce(other).inv()

    def __rtruediv__(self, other):
        return Tower.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result, base = Tower.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Tower):
            return self.d == other.d and self.c == other.c
        if isinstance(other, (int, Fraction, Eisen)):
            return self == Tower(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Tower", self.c, self.d))
        return self._hash

    def __repr__(self):
        e0, e1, e2 = self.coeffs()
        return f"Tower({e0!r}, {e1!r}, {e2!r})"

    def __str__(self):
        parts = []
        for k, e in enumerate(self.coeffs()):
            if e.is_zero():
                continue
            s = f"({e})"
            parts.append(s if k == 0 else f"{s}*r" if k == 1 else f"{s}*r^2")
        return " + ".join(parts) or "0"


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


R = Tower.r()


# ---------------------------------------------------------------------------
# F_3, F_3[t], F_3(t)
# ---------------------------------------------------------------------------


class GF3:
    __slots__ = ("value",)

    def __init__(self, value: int = 0):
        if isinstance(value, GF3):
            value = value.value
        self.value = int(value) % 3

    @classmethod
    def zero(cls) -> "GF3":
        return cls(0)

    @classmethod
    def one(cls) -> "GF3":
        return cls(1)

    @classmethod
    def coerce(cls, x) -> "GF3":
        return x if isinstance(x, GF3) else cls(x)

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other):
        if isinstance(other, int):
            return GF3(self.value + other)
        if not isinstance(other, GF3):
            return NotImplemented
        return GF3(self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return GF3(-self.value)

    def __sub__(self, other):
        if isinstance(other, int):
            return GF3(self.value - other)
        if not isinstance(other, GF3):
            return NotImplemented
        return GF3(self.value - other.value)

    def __rsub__(self, other):
        return GF3(other - self.value)

    def __mul__(self, other):
        if isinstance(other, int):
            return GF3(self.value * other)
        if not isinstance(other, GF3):
            return NotImplemented
        return GF3(self.value * other.value)

    __rmul__ = __mul__

    def inv(self) -> "GF3":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_3")
        return GF3(self.value)  # 1*1 = 1, 2*2 = 4 = 1

    def __truediv__(self, other):
        return self * GF3.coerce(other).inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return GF3(pow(self.value, n, 3))

    def __eq__(self, other):
        if isinstance(other, GF3):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other % 3
        return NotImplemented

    def __hash__(self):
        return hash(("GF3", self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF3({self.value})"

    __str__ = lambda self: str(self.value)


def _strip(cs: Iterable[int]) -> tuple[int, ...]:
    cs = [c % 3 for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pmul(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    if not x or not y:
        return ()
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    out[i + j] += a * b
    return _strip(out)


class PolyGF3:
    """Polynomial in t over F_3; ``coeffs[k]`` is the coefficient of t**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "PolyGF3":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "PolyGF3":
        return cls([0] * k + [c])

    @classmethod
    def zero(cls) -> "PolyGF3":
        return cls._raw(())

    @classmethod
    def one(cls) -> "PolyGF3":
        return cls._raw((1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> int:
        return self.coeffs[-1]

    def t_valuation(self) -> int | float:
        if not self.coeffs:
            return inf
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and all(c == 0 for c in self.coeffs[:-1])

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def __add__(self, other):
        x, y = self.coeffs, other.coeffs
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        for i, c in enumerate(y):
            out[i] += c
        return PolyGF3._raw(_strip(out))

    def __neg__(self):
        return PolyGF3._raw(tuple((-c) % 3 for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyGF3([c * other for c in self.coeffs])
        return PolyGF3._raw(_pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int) -> "PolyGF3":
        """Multiply by t**k (k >= 0) or divide exactly by t**(-k)."""
        if not self.coeffs:
            return self
        if k >= 0:
            return PolyGF3._raw((0,) * k + self.coeffs)
        assert all(c == 0 for c in self.coeffs[:-k]), "inexact shift"
        return PolyGF3._raw(self.coeffs[-k:])

    def divmod(self, other: "PolyGF3") -> tuple["PolyGF3", "PolyGF3"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dv = other.coeffs
        n = len(dv) - 1
        inv_lead = dv[-1]  # self-inverse in F_3
        if len(r) <= n:
            return PolyGF3.zero(), self
        q = [0] * (len(r) - n)
        for k in range(len(r) - 1, n - 1, -1):
            c = r[k] % 3
            if c == 0:
                continue
            f = c * inv_lead % 3
            q[k - n] = f
            for i, dc in enumerate(dv):
                r[k - n + i] -= f * dc
        return PolyGF3(q), PolyGF3(r[:n])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "PolyGF3":
        if not self.coeffs:
            return self
        return self * self.lead()  # lead is self-inverse

    def __call__(self, x: int) -> GF3:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 3
        return GF3(acc)

    def __eq__(self, other):
        if isinstance(other, PolyGF3):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("PolyGF3", self.coeffs))

    def __repr__(self):
        return f"PolyGF3({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mon:
                terms.append(str(c))
            else:
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms)


def poly_gcd(x: PolyGF3, y: PolyGF3) -> PolyGF3:
    """Monic gcd (gcd(0, 0) = 0)."""
    while not y.is_zero():
        x, y = y, x % y
    return x.monic()


class RatFuncGF3:
    """Element num/den of F_3(t), den monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        num = _to_poly(num)
        den = PolyGF3.one() if den is None else _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in F_3(t)")
        self._normalize(num, den)

    def _normalize(self, num: PolyGF3, den: PolyGF3) -> None:
        if num.is_zero():
            self.num, self.den = num, PolyGF3.one()
            self._hash = None
            return
        if den.is_monomial():
            # fast path: gcd with a monomial is a power of t
            k = min(num.t_valuation(), den.degree)
            if k:
                num = num.shift(-k)
                den = PolyGF3.monomial(den.degree - k, den.lead())
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lc = den.lead()
        if lc != 1:
            num, den = num * lc, den * lc
        self.num, self.den = num, den
        self._hash = None

    @classmethod
    def zero(cls) -> "RatFuncGF3":
        return cls(0)

    @classmethod
    def one(cls) -> "RatFuncGF3":
        return cls(1)

    @classmethod
    def t(cls, k: int = 1, c: int = 1) -> "RatFuncGF3":
        """c * t**k for any integer k."""
        if k >= 0:
            return cls(PolyGF3.monomial(k, c))
        return cls(PolyGF3([c]), PolyGF3.monomial(-k))

    @classmethod
    def coerce(cls, x) -> "RatFuncGF3":
        if isinstance(x, RatFuncGF3):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        if not isinstance(other, RatFuncGF3):
            if isinstance(other, (int, GF3, PolyGF3)):
                other = RatFuncGF3(other)
            else:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFuncGF3(self.num + other.num, self.den)
        a, b = self.den, other.den
        if a.is_monomial() and b.is_monomial():
            # common denominator t**max
            m = max(a.degree, b.degree)
            n1 = self.num.shift(m - a.degree)
            n2 = other.num.shift(m - b.degree)
            return RatFuncGF3(n1 + n2, PolyGF3.monomial(m))
        return RatFuncGF3(self.num * b + other.num * a, a * b)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RatFuncGF3)
        r.num, r.den, r._hash = -self.num, self.den, None
        return r

    def __sub__(self, other):
        if not isinstance(other, RatFuncGF3):
            if isinstance(other, (int, GF3, PolyGF3)):
                other = RatFuncGF3(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFuncGF3):
            if isinstance(other, (int, GF3, PolyGF3)):
                other = RatFuncGF3(other)
            else:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFuncGF3.zero()
        return RatFuncGF3(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFuncGF3":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in F_3(t)")
        return RatFuncGF3(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFuncGF3.coerce(other).inv()

    def __rtruediv__(self, other):
        return RatFuncGF3.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result, base = RatFuncGF3.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RatFuncGF3):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, GF3, PolyGF3)):
            return self == RatFuncGF3(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFuncGF3", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RatFuncGF3({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _to_poly(x) -> PolyGF3:
    if isinstance(x, PolyGF3):
        return x
    if isinstance(x, GF3):
        return PolyGF3([x.value])
    if isinstance(x, int):
        return PolyGF3([x])
    if isinstance(x, (list, tuple)):
        return PolyGF3(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial over F_3")


def _check_u_element(x: RatFuncGF3) -> None:
    for p in (x.num, x.den):
        bad = [k for k in p.support() if k % 3]
        if bad:
            raise NotInSubfieldError(f"{x} is not in F_3(u): exponent {bad[0]} of t is not a multiple of 3")


def u_valuation(x: RatFuncGF3) -> int | float:
    """Valuation at u = t**3 of an element of F_3(u) (``inf`` for zero)."""
    x = RatFuncGF3.coerce(x)
    _check_u_element(x)
    if x.is_zero():
        return inf
    return (x.num.t_valuation() - x.den.t_valuation()) // 3


def u_residue(x: RatFuncGF3) -> GF3:
    """Constant term of the u-expansion of a u-integral element of F_3(u)."""
    x = RatFuncGF3.coerce(x)
    nu = u_valuation(x)
    if nu < 0:
        raise NotIntegralError(f"{x} is not u-integral (valuation {nu})")
    if nu > 0:
        return GF3(0)
    return GF3(x.num.coeffs[0]) / GF3(x.den.coeffs[0])


def u_valuation_and_residue(x: RatFuncGF3) -> tuple[int | float, GF3]:
    return u_valuation(x), u_residue(x)


def u_coefficient(x: RatFuncGF3, k: int) -> GF3:
    """Coefficient of u**k in a polynomial element of F_3[u]."""
    x = RatFuncGF3.coerce(x)
    _check_u_element(x)
    if not x.is_polynomial():
        raise NotIntegralError(f"{x} is not in F_3[u]")
    c = x.num.coeffs
    i = 3 * k
    return GF3(c[i] if i < len(c) else 0) * x.den.coeffs[0]


SCALAR_TYPES = (Eisen, Tower, GF3, RatFuncGF3)


def field_arith(x, y, op: str):
    """Dispatch a field operation by name (add, sub, mul, div, inv, neg, eq)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "inv":
        return x.inv()
    if op == "neg":
        return -x
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")
