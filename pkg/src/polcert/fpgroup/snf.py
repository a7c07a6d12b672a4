"""Smith normal form over the integers and abelian invariants."""

from __future__ import annotations

from typing import Sequence

from .presentation import Presentation
from .words import exponent_sum


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Diagonal Smith form D of an integer matrix (D[i][i] divides D[i+1][i+1]).

    Pivot choice: the entry of least nonzero absolute value in the
    remaining block.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    t = 0
    while t < min(m, n):
        # pivot with minimal |entry| in the block a[t:, t:]
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        dirty = False
        piv = a[t][t]
        for i in range(t + 1, m):
            q = a[i][t] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, n):
            q = a[t][j] // piv
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue  # a smaller remainder now exists; re-pivot
        # pivot must divide the rest of the block
        bad = next(
            ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv),
            None,
        )
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
            continue
        if piv < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    return a


def invariant_factors(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nontrivial invariant factors of Z^ncols / rowspace(matrix); 0 marks a free factor."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [0] * ncols
    d = smith_normal_form(matrix)
    diag = [abs(d[i][i]) for i in range(min(len(d), ncols))]
    diag += [0] * (ncols - len(diag))
    return [x for x in diag if x != 1]


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [[exponent_sum(r, g) for g in range(1, p.generator_count + 1)] for r in p.relators]


def abelianization(p: Presentation) -> list[int]:
    """Invariant factors of the abelianized group, e.g. [3, 9] for C_3 x C_9."""
    return invariant_factors(relation_matrix(p), p.generator_count)
