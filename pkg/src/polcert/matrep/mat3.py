"""3x3 matrices over any of the exact scalar types."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from ..exactfields import GF3


def _zero_like(x):
    return type(x).zero()


def _one_like(x):
    return type(x).one()


class Mat3:
    """Immutable 3x3 matrix; ``entries`` is the row-major 9-tuple."""

    __slots__ = ("entries", "_hash")

    def __init__(self, rows: Iterable):
        rows = list(rows)
        if len(rows) == 3 and all(isinstance(r, (list, tuple)) for r in rows):
            flat = [x for r in rows for x in r]
        else:
            flat = rows
        if len(flat) != 9:
            raise ValueError("a 3x3 matrix needs 9 entries")
        self.entries = tuple(flat)
        self._hash = None

    @classmethod
    def _raw(cls, entries: tuple) -> "Mat3":
        m = object.__new__(cls)
        m.entries = entries
        m._hash = None
        return m

    @classmethod
    def identity(cls, field) -> "Mat3":
        z, o = field.zero(), field.one()
        return cls._raw((o, z, z, z, o, z, z, z, o))

    @classmethod
    def zero(cls, field) -> "Mat3":
        return cls._raw((field.zero(),) * 9)

    @classmethod
    def elementary(cls, i: int, j: int, x, field=None) -> "Mat3":
        """Identity plus x in position (i, j) (0-based)."""
        field = field or type(x)
        e = list(cls.identity(field).entries)
        e[3 * i + j] = e[3 * i + j] + x
        return cls._raw(tuple(e))

    @property
    def field(self):
        return type(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[3 * i + j]

    def rows(self) -> list[list]:
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def map(self, f: Callable) -> "Mat3":
        return Mat3._raw(tuple(f(x) for x in self.entries))

    def __mul__(self, other):
        if not isinstance(other, Mat3):
            return Mat3._raw(tuple(x * other for x in self.entries))
        a, b = self.entries, other.entries
        out = []
        for i in (0, 3, 6):
            a0, a1, a2 = a[i], a[i + 1], a[i + 2]
            for j in (0, 1, 2):
                out.append(a0 * b[j] + a1 * b[j + 3] + a2 * b[j + 6])
        return Mat3._raw(tuple(out))

    def __rmul__(self, other):
        return Mat3._raw(tuple(other * x for x in self.entries))

    def __add__(self, other):
        return Mat3._raw(tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return Mat3._raw(tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self):
        return Mat3._raw(tuple(-x for x in self.entries))

    def det(self):
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self):
        e = self.entries
        return e[0] + e[4] + e[8]

    def adjugate(self) -> "Mat3":
        a, b, c, d, e, f, g, h, i = self.entries
        return Mat3._raw((
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        ))

    def inverse(self) -> "Mat3":
        d = self.det()
        if d.is_zero():
            raise ZeroDivisionError("singular matrix")
        adj = self.adjugate()
        if d == d.one():
            return adj
        dinv = d.inv()
        return adj.map(lambda x: x * dinv)

    def __pow__(self, n: int) -> "Mat3":
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat3.identity(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "Mat3":
        e = self.entries
        return Mat3._raw((e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]))

    def is_scalar(self) -> bool:
        e = self.entries
        return all(e[k].is_zero() for k in (1, 2, 3, 5, 6, 7)) and e[0] == e[4] == e[8]

    def is_identity(self) -> bool:
        return self.is_scalar() and self.entries[0] == _one_like(self.entries[0])

    def first_nonzero(self):
        for x in self.entries:
            if not x.is_zero():
                return x
        raise ZeroDivisionError("zero matrix has no projective class")

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self):
        return "Mat3([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows()) + "])"


def projective(m: Mat3) -> Mat3:
    """Canonical projective representative: first nonzero entry (row-major) equal to 1."""
    lead = m.first_nonzero()
    if lead == _one_like(lead):
        return m
    inv = lead.inv()
    return m.map(lambda x: x * inv)


def proj_equal(m: Mat3, n: Mat3) -> bool:
    return projective(m) == projective(n)


def gf3_matrix(values: Sequence) -> Mat3:
    """Matrix over F_3 from 9 ints or 3 rows of ints."""
    vals = list(values)
    if len(vals) == 3:
        vals = [x for r in vals for x in r]
    return Mat3([GF3(int(v)) for v in vals])


def gf3_key(m: Mat3) -> tuple[int, ...]:
    return tuple(x.value for x in m.entries)


def gf3_from_key(k: Sequence[int]) -> Mat3:
    return Mat3._raw(tuple(GF3(v) for v in k))


def lift_ints(values: Sequence, field) -> Mat3:
    vals = list(values)
    if len(vals) == 3:
        vals = [x for r in vals for x in r]
    return Mat3([field(v) if not isinstance(v, field) else v for v in vals])
