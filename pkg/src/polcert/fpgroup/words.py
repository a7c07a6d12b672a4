"""Freely reduced words in a free group.

A word is a tuple of nonzero ints: ``k`` stands for the k-th generator
(1-based) and ``-k`` for its inverse.  :class:`Word` is a tuple subclass
that is always freely reduced, so ``Word`` values compare and hash like
plain tuples.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

DEFAULT_NAMES = "abcdefghijklmnopqrstuvwxyz"


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word(tuple):
    """A freely reduced word; construction reduces its input."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, free_reduce(letters))

    def __mul__(self, other):
        if isinstance(other, int):
            return power(self, other)
        return Word(tuple(self) + tuple(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return power(self, other)
        return Word(tuple(other) + tuple(self))

    def __pow__(self, n: int):
        return power(self, n)

    def __invert__(self):
        return inverse(self)

    def inverse(self) -> "Word":
        return inverse(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def __str__(self):
        return format_word(self)


IDENTITY = Word()


def inverse(w: Sequence[int]) -> Word:
    return Word(-x for x in reversed(w))


def mul(*ws: Sequence[int]) -> Word:
    out: list[int] = []
    for w in ws:
        out.extend(w)
    return Word(out)


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return Word(tuple(w) * n)


def conjugate(w: Sequence[int], g: Sequence[int]) -> Word:
    """g w g^-1."""
    return mul(g, w, inverse(g))


def commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    """[x, y] = x y x^-1 y^-1."""
    return mul(x, y, inverse(x), inverse(y))


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = list(Word(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return Word(w)


def cyclic_rotations(w: Sequence[int]) -> list[Word]:
    w = tuple(cyclic_reduce(w))
    return [Word(w[i:] + w[:i]) for i in range(len(w))] or [IDENTITY]


def is_cyclic_conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when u and v are conjugate in the free group."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = tuple(cv) + tuple(cv)
    n = len(cu)
    return any(doubled[i:i + n] == tuple(cu) for i in range(n))


def word_op(w1: Sequence[int], w2: Sequence[int] = (), op: str = "mul") -> Word:
    if op == "mul":
        return mul(w1, w2)
    if op == "inv":
        return inverse(w1)
    if op == "conjugate":
        return conjugate(w1, w2)
    if op == "commutator":
        return commutator(w1, w2)
    if op == "cyclic_reduce":
        return cyclic_reduce(w1)
    raise ValueError(f"unknown word operation {op!r}")


def letter_key(x: int) -> tuple[int, int]:
    """Ordering a < a^-1 < b < b^-1 < ..."""
    return (abs(x), 0 if x > 0 else 1)


def shortlex_key(w: Sequence[int]) -> tuple:
    return (len(w), tuple(letter_key(x) for x in w))


def letters_in_order(generator_count: int) -> list[int]:
    out = []
    for i in range(1, generator_count + 1):
        out.extend((i, -i))
    return out


def exponent_sum(w: Sequence[int], generator: int) -> int:
    return sum(1 if x == generator else -1 if x == -generator else 0 for x in w)


def substitute(w: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Replace generator k by ``images[k-1]`` (inverse letters by inverse images)."""
    out: list[int] = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return Word(out)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_word(w: Sequence[int], names: Sequence[str] = DEFAULT_NAMES) -> str:
    """Syllable notation, e.g. ``b*a^-1*b^3``; the empty word prints as ``1``."""
    if not w:
        return "1"
    parts = []
    i = 0
    w = tuple(w)
    while i < len(w):
        x = w[i]
        j = i
        while j < len(w) and w[j] == x:
            j += 1
        e = (j - i) * (1 if x > 0 else -1)
        name = names[abs(x) - 1]
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return "*".join(parts)


_TOKEN = re.compile(r"\s*(?:(\^)\s*(-?\d+)|(⁻¹)|([A-Za-z_]\w*)|(.))")


class WordSyntaxError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.index = {n: i + 1 for i, n in enumerate(names)}
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            pos = m.end()
            if m.group(1):
                self.tokens.append(("pow", int(m.group(2))))
            elif m.group(3):
                self.tokens.append(("pow", -1))
            elif m.group(4):
                self.tokens.append(("name", m.group(4)))
            elif m.group(5).strip():
                self.tokens.append(("sym", m.group(5)))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise WordSyntaxError(f"unexpected {tok[1]!r} in {self.text!r}")
        self.pos += 1
        return tok

    def product(self) -> Word:
        parts = [self.factor()]
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "*.":
                self.take()
                parts.append(self.factor())
            elif kind == "name" or (kind == "sym" and val in "(["):
                parts.append(self.factor())  # juxtaposition
            else:
                break
        return mul(*parts)

    def factor(self) -> Word:
        kind, val = self.peek()
        if kind == "name":
            self.take()
            if val in self.index:
                base = Word((self.index[val],))
            else:
                raise WordSyntaxError(f"unknown generator {val!r}")
        elif kind == "sym" and val == "1":
            self.take()
            base = IDENTITY
        elif kind == "sym" and val == "(":
            self.take()
            base = self.product()
            self.take("sym", ")")
        elif kind == "sym" and val == "[":
            self.take()
            x = self.product()
            self.take("sym", ",")
            y = self.product()
            self.take("sym", "]")
            base = commutator(x, y)
        else:
            raise WordSyntaxError(f"unexpected {val!r} in {self.text!r}")
        while self.peek()[0] == "pow":
            base = power(base, self.take()[1])
        return base


def parse_word(text: str, names: Sequence[str] = DEFAULT_NAMES) -> Word:
    """Parse ``(b*a)^3``, ``a b^-1 a``, ``[b*a, a*b⁻¹*a]`` and the like."""
    p = _Parser(text, names)
    if not p.tokens:
        return IDENTITY
    w = p.product()
    if p.pos != len(p.tokens):
        raise WordSyntaxError(f"trailing input in {text!r}")
    return w


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside brackets and parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]
