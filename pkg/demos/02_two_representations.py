"""
Two 3x3 representations of Gamma
=================================

pi lands in PGL3 over a cubic extension of Q(omega); rho lands in SL3(F3(t)).
Both kill the three relators.  On the index-3 subgroup Gamma° (kernel of
a -> 1, b -> 2 mod 3) the images become integral, and reducing modulo the
prime gives a group of order 27.
"""

from polcert.fpgroup import format_word, gamma
from polcert.matrep import (
    char0_data,
    char3_data,
    check_relators,
    find_conjugator,
    infinite_order_certificate,
    pi_generators,
    rho_generators,
    standard_unitriangular,
)
from polcert.matrep.reps import word

pi, rho = pi_generators(), rho_generators()
for name, ev in (("pi", pi), ("rho", rho)):
    v = check_relators(ev, gamma())
    print(name, "relators:", [(r["relator"], r.get("scalar", r.get("det"))) for r in v.results])

# a non-relator for contrast
print("(ab^-1)^3 trivial under pi?", check_relators(pi, [word("(a*b^-1)^3")]).ok)

# infinite order from a non-constant trace
for s in ("a", "b", "b*a"):
    c = infinite_order_certificate(rho, word(s))
    print(f"{s:4s} {c.verdict:13s} traces {c.traces}")

d0, d3 = char0_data(), char3_data()
print("Schreier generators of Gamma°:", [format_word(w) for w in d0.schreier_words])

# level 0: finite images in SL3(F3)
print("char 0 image == U+ :", d0.image == standard_unitriangular(), len(d0.image))
print("char 3 image == U+ :", d3.image == standard_unitriangular(), len(d3.image))
print("char 3 image conjugated onto U+ by", find_conjugator(d3.image))

# level 1: span of logs of the 82 kernel generators
print("level-1 dims (char 0 mod scalars, char 3):", d0.span.dim, d3.span.dim)
print("index in the congruence group:", d0.index, d3.index)
