"""
Finding elementary matrices inside rho(Gamma°)
==============================================

Direct searches for E_ij(u) (u = t^3), Steinberg commutators to climb to
u^2 and u^3, and direct searches for whatever is left.  Every word is
re-evaluated exactly before it is kept.
"""

import time

from polcert.fpgroup import format_word
from polcert.matrep import steinberg_closure
from polcert.matrep.pipeline import elementary_campaign

t0 = time.perf_counter()
camp = elementary_campaign()
print(f"campaign: {time.perf_counter() - t0:.2f} s")
print("ruled out by the level-1 span:", camp.excluded)
for (i, j, n), w in sorted(camp.words.items()):
    how = "commutator" if (i, j, n) in camp.derived else "search"
    print(f"E{i}{j}(u^{n}) [{how:10s}] length {len(w):3d}  {format_word(w)[:60]}")

v = steinberg_closure(camp.words.keys())
print(v.verdict)
print("assumed:", v.assumption)
