"""
Universal groups of polynomial maps out of C3
=============================================

Quadratic maps from C3 factor through a group of order 27, cubic ones
through Gamma = < a, b | (ba)^3, (ab^-1a)^3, [ba, ab^-1a] >.  We count maps
directly with finite differences and compare with homomorphism counts.
"""

from polcert.fpgroup import abelianization, count_homs, gamma, pol2, todd_coxeter
from polcert.polymap import battery, build_pol2_model, c3, classify_unital_polynomial_maps, structure_claims

# the quadratic group: coset enumeration over the trivial subgroup
table = todd_coxeter(pol2())
print("Pol2(C3) order:", table.index)

# an explicit model of it, with its own internal identity checks
model = build_pol2_model()
print("model exponent:", model.group.exponent())
for k, v in structure_claims(model).items():
    print(f"  {k}: {v}")

# Gamma is infinite, but its abelianization is small
print("Gamma^ab invariant factors:", abelianization(gamma()))

# maps of degree <= 2 and <= 3 from C3 into a few small groups
print(f"{'H':8s} {'deg<=2':>7s} {'Hom(Pol2,H)':>12s} {'deg<=3':>7s} {'Hom(Gamma,H)':>13s}")
for name, H in battery().items():
    q = len(classify_unital_polynomial_maps(c3(), H, 2))
    c = len(classify_unital_polynomial_maps(c3(), H, 3))
    print(f"{name:8s} {q:7d} {count_homs(pol2(), H):12d} {c:7d} {count_homs(gamma(), H):13d}")
