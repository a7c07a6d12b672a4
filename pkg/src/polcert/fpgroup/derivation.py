"""Mechanically checked equational derivations in finitely presented groups.

A :class:`DerivationScript` is data: named abbreviations (extra letters
standing for words in the generators) and a list of steps, each claiming an
equality ``lhs = rhs`` together with the rule that justifies it.  The
checker replays every step; nothing is searched for.

Rules (``Step.rule``):

``relator``     lhs*rhs^-1 expands to a conjugate of a relator or its inverse.
``definition``  ``name = word`` for a declared abbreviation (either way round).
``free``        without refs: both sides are the same reduced word; with one
                ref: the sides coincide with those of the referenced fact.
``substitute``  like ``free`` but after expanding every abbreviation; with a
                ref, lhs*rhs^-1 and the ref's lhs*rhs^-1 expand to conjugate
                words (or inverse-conjugate).
``rewrite``     refs (target, eq): one occurrence of a side of ``eq`` (or of
                its inverse) inside one side of ``target`` is replaced by the
                other side.
``exponent``    refs (target, order): ``order`` states x^n = 1; one syllable
                x^k of target is replaced by x^k' with k' = k mod n.
``conjugate``   g*lhs*g^-1 = g*rhs*g^-1 with g = ``arg``.
``multiply``    arg*lhs = arg*rhs (``side='left'``) or lhs*arg = rhs*arg.
``invert``      lhs^-1 = rhs^-1.
``power``       lhs^k = rhs^k, k = ``exponent``.
``symmetric``   rhs = lhs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .words import (
    IDENTITY,
    Word,
    format_word,
    inverse,
    is_cyclic_conjugate,
    mul,
    power,
    substitute,
)

RULES = (
    "relator",
    "definition",
    "free",
    "substitute",
    "rewrite",
    "exponent",
    "conjugate",
    "multiply",
    "invert",
    "power",
    "symmetric",
)


@dataclass(frozen=True)
class Step:
    label: str
    lhs: Word
    rhs: Word
    rule: str
    refs: tuple[str, ...] = ()
    arg: Word | None = None
    side: str = "left"
    exponent: int = 1
    note: str = ""


@dataclass
class DerivationScript:
    generator_count: int
    names: tuple[str, ...]  # display names of all letters, generators first
    definitions: dict[int, Word]  # abbreviation letter -> word in any earlier letters
    steps: list[Step] = field(default_factory=list)
    conclusions: list[str] = field(default_factory=list)

    def expand(self, w: Sequence[int]) -> Word:
        out: list[int] = []
        for x in w:
            if abs(x) <= self.generator_count:
                out.append(x)
            else:
                body = self.expand(self.definitions[abs(x)])
                out.extend(body if x > 0 else inverse(body))
        return Word(out)

    def fmt(self, w: Sequence[int]) -> str:
        return format_word(w, self.names)


@dataclass
class DerivationVerdict:
    valid: bool
    facts: dict[str, tuple[Word, Word]]
    failed_step: int | None = None
    reason: str = ""
    conclusions: list[str] = field(default_factory=list)

    def proves(self, lhs: Sequence[int], rhs: Sequence[int] = ()) -> bool:
        lhs, rhs = Word(lhs), Word(rhs)
        return self.valid and any(f == (lhs, rhs) for f in self.facts.values())


class _Reject(Exception):
    pass


def _syllables(w: Word) -> list[tuple[int, int]]:
    out, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append((i, j))
        i = j
    return out


def _single_syllable(w: Word) -> tuple[int, int] | None:
    """(letter, signed exponent) if w = x^k for a positive letter x, else None."""
    if not w or any(abs(x) != abs(w[0]) for x in w) or len(set(w)) != 1:
        return None
    x = abs(w[0])
    return x, len(w) * (1 if w[0] > 0 else -1)


def _rewrites(side: Word, pattern: Word, replacement: Word):
    n = len(pattern)
    if n == 0:
        return
    for i in range(len(side) - n + 1):
        if tuple(side[i:i + n]) == tuple(pattern):
            yield Word(tuple(side[:i]) + tuple(replacement) + tuple(side[i + n:]))


def _check_step(step: Step, facts: Mapping[str, tuple[Word, Word]], relators: Mapping[str, Word],
                script: DerivationScript) -> None:
    lhs, rhs = Word(step.lhs), Word(step.rhs)

    def ref(i: int) -> tuple[Word, Word]:
        try:
            name = step.refs[i]
        except IndexError:
            raise _Reject(f"rule {step.rule!r} needs {i + 1} reference(s)") from None
        if name not in facts:
            raise _Reject(f"unknown or not yet proven fact {name!r}")
        return facts[name]

    rule = step.rule
    if rule not in RULES:
        raise _Reject(f"unknown rule {rule!r}")

    if rule == "relator":
        if not step.refs or step.refs[0] not in relators:
            raise _Reject("relator rule must cite a given relator")
        r = relators[step.refs[0]]
        claim = script.expand(mul(lhs, inverse(rhs)))
        if not (is_cyclic_conjugate(claim, r) or is_cyclic_conjugate(claim, inverse(r))):
            raise _Reject("equality is not an instance of the cited relator")
        return

    if rule == "definition":
        for a, b in ((lhs, rhs), (rhs, lhs)):
            if len(a) == 1 and a[0] > 0 and a[0] in script.definitions and Word(script.definitions[a[0]]) == b:
                return
        raise _Reject("not a declared definition")

    if rule == "free":
        if not step.refs:
            if lhs != rhs:
                raise _Reject("sides are different reduced words")
            return
        a, b = ref(0)
        if (a, b) != (lhs, rhs):
            raise _Reject("sides differ from the cited fact after free reduction")
        return

    if rule == "substitute":
        claim = script.expand(mul(lhs, inverse(rhs)))
        if not step.refs:
            if claim:
                raise _Reject("sides differ after expanding abbreviations")
            return
        a, b = ref(0)
        old = script.expand(mul(a, inverse(b)))
        if not (is_cyclic_conjugate(claim, old) or is_cyclic_conjugate(claim, inverse(old))):
            raise _Reject("expanded equality does not match the cited fact")
        return

    if rule == "rewrite":
        tl, tr = ref(0)
        p, q = ref(1)
        for pat, rep in ((p, q), (q, p), (inverse(p), inverse(q)), (inverse(q), inverse(p))):
            if tr == rhs and any(new == lhs for new in _rewrites(tl, pat, rep)):
                return
            if tl == lhs and any(new == rhs for new in _rewrites(tr, pat, rep)):
                return
        raise _Reject("no single rewrite with the cited equality yields this step")

    if rule == "exponent":
        tl, tr = ref(0)
        ol, orr = ref(1)
        syl = _single_syllable(mul(ol, inverse(orr)))
        if syl is None:
            raise _Reject("second reference is not of the form x^n = 1")
        x, n = syl[0], abs(syl[1])
        for old, new, other_old, other_new in ((tl, lhs, tr, rhs), (tr, rhs, tl, lhs)):
            if other_old != other_new:
                continue
            for i, j in _syllables(old):
                if abs(old[i]) != x:
                    continue
                k = (j - i) * (1 if old[i] > 0 else -1)
                middle = mul(inverse(old[:i]), new, inverse(old[j:]))
                if not middle:
                    k2 = 0
                else:
                    s = _single_syllable(middle)
                    if s is None or s[0] != x:
                        continue
                    k2 = s[1]
                if (k - k2) % n == 0:
                    return
        raise _Reject(f"no syllable exponent changes by a multiple of {n}")

    if rule in ("conjugate", "multiply", "invert", "power", "symmetric"):
        a, b = ref(0)
        if rule == "conjugate":
            g = Word(step.arg or ())
            want = (mul(g, a, inverse(g)), mul(g, b, inverse(g)))
        elif rule == "multiply":
            g = Word(step.arg or ())
            want = (mul(g, a), mul(g, b)) if step.side == "left" else (mul(a, g), mul(b, g))
        elif rule == "invert":
            want = (inverse(a), inverse(b))
        elif rule == "power":
            want = (power(a, step.exponent), power(b, step.exponent))
        else:
            want = (b, a)
        if want != (lhs, rhs):
            raise _Reject(f"{rule} of the cited fact gives {script.fmt(want[0])} = {script.fmt(want[1])}")
        return


def check_derivation(relators: Mapping[str, Sequence[int]] | Sequence[Sequence[int]],
                     script: DerivationScript) -> DerivationVerdict:
    """Replay every step; reject at the first unjustified one."""
    if not isinstance(relators, Mapping):
        relators = {f"r{i + 1}": r for i, r in enumerate(relators)}
    rels = {k: Word(v) for k, v in relators.items()}
    for k, r in rels.items():
        if any(abs(x) > script.generator_count for x in r):
            raise ValueError(f"relator {k} uses letters outside the generators")
    facts: dict[str, tuple[Word, Word]] = {}
    for idx, step in enumerate(script.steps):
        if step.label in facts:
            return DerivationVerdict(False, facts, idx, f"duplicate label {step.label!r}")
        try:
            _check_step(step, facts, rels, script)
        except _Reject as exc:
            return DerivationVerdict(False, facts, idx, f"step {idx} ({step.label}): {exc}")
        facts[step.label] = (Word(step.lhs), Word(step.rhs))
    missing = [c for c in script.conclusions if c not in facts]
    if missing:
        return DerivationVerdict(False, facts, None, f"conclusions never proven: {missing}")
    return DerivationVerdict(True, facts, None, "", list(script.conclusions))


# ---------------------------------------------------------------------------
# The derivation of the cubic relators from the quadratic ones.
# ---------------------------------------------------------------------------

A, B, Z, W, V = 1, 2, 3, 4, 5


def _w(*letters: int) -> Word:
    return Word(letters)


def quadratic_pairs() -> tuple[tuple[Word, Word], tuple[Word, Word]]:
    """Words for the unitalized differences of a cubic map on C_3.

    With a, b the images of sigma and tau: (beta_sigma(sigma), beta_sigma(tau))
    = (a^-1 b a^-1, a^-1 b^-1) and (beta_tau(sigma), beta_tau(tau)) =
    (b^-1 a^-1, b^-1 a b^-1).
    """
    return (_w(-A, B, -A), _w(-A, -B)), (_w(-B, -A), _w(-B, A, -B))


def quadratic_relators() -> dict[str, Word]:
    """The eight relators obtained by pushing the quadratic presentation through both pairs."""
    from .presentation import pol2

    out = {}
    k = 1
    for pair in quadratic_pairs():
        for r in pol2().relators:
            out[f"quad{k}"] = substitute(r, pair)
            k += 1
    return out


def exponent_mod_check(base: int, exp: int, modulus: int) -> int:
    return pow(base, exp, modulus)


def cubic_derivation_script() -> DerivationScript:
    """Derive z^3 = w^3 = v^3 = 1 and the three cubic relators from the eight quadratic relators.

    Abbreviations: z = a^-1 b^-1, w = a^-1 b a^-1, v = a^-1 (b^-1 a b^-1) a.
    """
    names = ("a", "b", "z", "w", "v")
    defs = {Z: _w(-A, -B), W: _w(-A, B, -A), V: _w(-A, -B, A, -B, A)}
    s = DerivationScript(2, names, defs)
    steps = s.steps
    z, w, v = _w(Z), _w(W), _w(V)
    e = IDENTITY

    def add(label, lhs, rhs, rule, refs=(), **kw):
        steps.append(Step(label, Word(lhs), Word(rhs), rule, tuple(refs), **kw))

    add("def_z", z, defs[Z], "definition")
    add("def_w", w, defs[W], "definition")
    add("def_v", v, defs[V], "definition")
    add("v=zw^-1", v, mul(z, inverse(w)), "substitute")

    add("w^9", power(w, 9), e, "relator", ["quad1"])
    add("z^9", power(z, 9), e, "relator", ["quad2"])
    add("zwz^-1", mul(z, w, inverse(z)), power(w, 4), "relator", ["quad3"])
    add("wzw^-1", mul(w, z, inverse(w)), power(z, 4), "relator", ["quad4"])
    # (b^-1 a^-1)^9 = 1 is the conjugate of z^9 = 1 by a
    add("(b^-1a^-1)^9 raw", mul(_w(A), power(z, 9), _w(-A)), e, "conjugate", ["z^9"], arg=_w(A))
    add("(b^-1a^-1)^9", power(_w(-B, -A), 9), e, "substitute", ["(b^-1a^-1)^9 raw"])
    add("(b^-1a^-1)^9 given", power(_w(-B, -A), 9), e, "relator", ["quad5"])
    add("v^9", power(v, 9), e, "relator", ["quad6"])
    # the last two relators, conjugated by a^-1, speak about v and z
    add("vzv^-1", mul(v, z, inverse(v)), power(z, 4), "relator", ["quad7"])
    add("zvz^-1", mul(z, v, inverse(z)), power(v, 4), "relator", ["quad8"])

    # w^k z w^-k = z^(4^k mod 9) for k = 1..8
    prev, m = "wzw^-1", 4
    for k in range(2, 9):
        lab = f"w^{k} z w^-{k}"
        add(lab + " conj", mul(power(w, k), z, power(w, -k)), mul(w, power(z, m), inverse(w)),
            "conjugate", [prev], arg=w)
        add(lab + " power", mul(w, power(z, m), inverse(w)), power(z, 4 * m), "power", ["wzw^-1"], exponent=m)
        add(lab + " raw", mul(power(w, k), z, power(w, -k)), power(z, 4 * m), "rewrite",
            [lab + " conj", lab + " power"])
        m = 4 * m % 9
        add(lab, mul(power(w, k), z, power(w, -k)), power(z, m), "exponent", [lab + " raw", "z^9"])
        prev = lab
    assert m == exponent_mod_check(4, 8, 9) == 7
    add("w^-1 z w^-8", mul(power(w, -1), z, power(w, -8)), power(z, 7), "exponent", ["w^8 z w^-8", "w^9"])
    add("w^-1zw", mul(inverse(w), z, w), power(z, 7), "exponent", ["w^-1 z w^-8", "w^9"])

    add("z^4=vzv^-1", power(z, 4), mul(v, z, inverse(v)), "symmetric", ["vzv^-1"])
    add("z^4=zw^-1zv^-1", power(z, 4), mul(z, inverse(w), z, inverse(v)), "rewrite", ["z^4=vzv^-1", "v=zw^-1"])
    add("z^4=zw^-1zwz^-1", power(z, 4), mul(z, inverse(w), z, w, inverse(z)), "rewrite",
        ["z^4=zw^-1zv^-1", "v=zw^-1"])
    add("z^4=z^7", power(z, 4), power(z, 7), "rewrite", ["z^4=zw^-1zwz^-1", "w^-1zw"])
    add("1=z^3", e, power(z, 3), "multiply", ["z^4=z^7"], arg=power(z, -4), side="left")
    add("z^3", power(z, 3), e, "symmetric", ["1=z^3"])

    # z commutes with w and v
    add("wzw^-1=z", mul(w, z, inverse(w)), z, "exponent", ["wzw^-1", "z^3"])
    add("wz=zw", mul(w, z), mul(z, w), "multiply", ["wzw^-1=z"], arg=w, side="right")
    add("vzv^-1=z", mul(v, z, inverse(v)), z, "exponent", ["vzv^-1", "z^3"])
    add("vz=zv", mul(v, z), mul(z, v), "multiply", ["vzv^-1=z"], arg=v, side="right")

    # hence w^3 = v^3 = 1
    add("w=w^4", w, power(w, 4), "rewrite", ["zwz^-1", "wz=zw"])
    add("1=w^3", e, power(w, 3), "multiply", ["w=w^4"], arg=inverse(w), side="left")
    add("w^3", power(w, 3), e, "symmetric", ["1=w^3"])
    add("v=v^4", v, power(v, 4), "rewrite", ["zvz^-1", "vz=zv"])
    add("1=v^3", e, power(v, 3), "multiply", ["v=v^4"], arg=inverse(v), side="left")
    add("v^3", power(v, 3), e, "symmetric", ["1=v^3"])

    # back to a and b
    add("z^-3", power(z, -3), e, "invert", ["z^3"])
    add("(ba)^3", power(_w(B, A), 3), e, "substitute", ["z^-3"])
    add("w^-3", power(w, -3), e, "invert", ["w^3"])
    add("(ab^-1a)^3", power(_w(A, -B, A), 3), e, "substitute", ["w^-3"])
    add("z^-1w^-1=w^-1z^-1", mul(inverse(z), inverse(w)), mul(inverse(w), inverse(z)), "invert", ["wz=zw"])
    comm = mul(inverse(z), inverse(w), z, w)
    add("[z^-1,w^-1] taut", comm, comm, "free")
    add("[z^-1,w^-1]", comm, e, "rewrite", ["[z^-1,w^-1] taut", "z^-1w^-1=w^-1z^-1"])
    add("[ba,ab^-1a]", mul(_w(B, A), _w(A, -B, A), _w(-A, -B), _w(-A, B, -A)), e, "substitute",
        ["[z^-1,w^-1]"])

    s.conclusions = ["z^3", "w^3", "v^3", "wz=zw", "vz=zv", "(ba)^3", "(ab^-1a)^3", "[ba,ab^-1a]"]
    return s
