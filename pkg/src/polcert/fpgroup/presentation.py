"""Finite presentations and the fixed presentations used throughout."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .words import (
    DEFAULT_NAMES,
    Word,
    cyclic_reduce,
    format_word,
    parse_word,
    split_top_level,
)


class PresentationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rels = tuple(cyclic_reduce(r) for r in self.relators)
        object.__setattr__(self, "relators", tuple(r for r in rels if r))
        if not self.names:
            object.__setattr__(self, "names", tuple(DEFAULT_NAMES[: self.generator_count]))
        for r in self.relators:
            for x in r:
                if not 1 <= abs(x) <= self.generator_count:
                    raise ValueError(f"letter {x} outside {self.generator_count} generators")

    def with_relators(self, relators: Sequence[Word]) -> "Presentation":
        return Presentation(self.generator_count, tuple(relators), self.names)

    def to_text(self) -> str:
        rels = ", ".join(format_word(r, self.names) for r in self.relators)
        return f"gens: {' '.join(self.names)}\nrels: {rels}"

    def __str__(self):
        rels = ", ".join(format_word(r, self.names) for r in self.relators)
        return f"< {', '.join(self.names)} | {rels} >"


def parse_presentation(text: str) -> Presentation:
    """Parse the two-line format::

        gens: a b
        rels: (b*a)^3, (a*b^-1*a)^3, [b*a, a*b^-1*a]
    """
    gens = None
    rels_text = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            if gens is not None and rels_text:
                rels_text.append(line)  # continuation of the relator list
                continue
            raise PresentationSyntaxError(f"line {lineno}: expected 'gens:' or 'rels:'")
        if key == "gens":
            gens = rest.replace(",", " ").split()
        elif key == "rels":
            rels_text.append(rest)
        else:
            raise PresentationSyntaxError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise PresentationSyntaxError("missing 'gens:' line")
    relators = []
    for chunk in split_top_level(" ".join(rels_text).replace(";", ",")):
        lhs, eq, rhs = chunk.partition("=")
        w = parse_word(lhs, gens)
        if eq:
            w = w * parse_word(rhs, gens).inverse()
        relators.append(w)
    return Presentation(len(gens), tuple(relators), tuple(gens))


GAMMA_TEXT = "gens: a b\nrels: (b*a)^3, (a*b^-1*a)^3, [b*a, a*b^-1*a]"
POL2_TEXT = "gens: a b\nrels: a^9, b^9, b*a*b^-1*a^-4, a*b*a^-1*b^-4"


def gamma() -> Presentation:
    """< a, b | (ba)^3, (ab^-1a)^3, [ba, ab^-1a] >, the universal group of cubic maps from C_3."""
    return parse_presentation(GAMMA_TEXT)


def pol2() -> Presentation:
    """< a, b | a^9, b^9, bab^-1 = a^4, aba^-1 = b^4 >, the quadratic analogue."""
    return parse_presentation(POL2_TEXT)


def cyclic(n: int) -> Presentation:
    return Presentation(1, (Word((1,) * n),))


def free(rank: int) -> Presentation:
    return Presentation(rank, ())
