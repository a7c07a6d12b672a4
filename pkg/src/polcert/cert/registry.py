"""Built-in claim registry.  Every certificate record must cite one of these."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Claim:
    id: str
    target: str  # verify target that runs it ("search"/"classify" for the other commands)
    reference: str  # what is being claimed, in words


_CLAIMS = [
    Claim("pol2.cosets", "pol2", "universal quadratic group of C3: the four-relator presentation has order 27"),
    Claim("pol2.model", "pol2", "universal quadratic group of C3: explicit 27-element model satisfies the presentation"),
    Claim("pol2.exponent", "pol2", "universal quadratic group of C3: exponent 9"),
    Claim("pol2.structure", "pol2", "universal quadratic group of C3: isomorphic to the semidirect product of C9 by C3 (action by 4), not to Heisenberg mod 3"),
    Claim("gamma.derivation", "presentation", "universal cubic group of C3: z^3 = w^3 = v^3 = 1 follow from the relations"),
    Claim("gamma.abelianization", "presentation", "universal cubic group of C3: abelianization C9 x C3"),
    Claim("gamma.battery", "presentation", "universal property: unital maps of degree <= k from C3 match homomorphisms from Pol_k(C3)"),
    Claim("char0.relators", "char0", "representation pi: relators of Gamma hold in PGL3 of the cubic tower"),
    Claim("char0.det", "char0", "representation pi: generator images have determinant 1"),
    Claim("char0.false_relator", "char0", "representation pi: the non-relator (a b^-1)^3 evaluates to a non-scalar"),
    Claim("char0.schreier", "char0", "representation pi: images of Gamma° lie in PSL3(Z[omega])"),
    Claim("char0.level0", "char0", "representation pi: Gamma° modulo (1 - omega) is the upper unitriangular group"),
    Claim("char0.level1", "char0", "representation pi: level-1 quotient is the displayed 6-parameter subspace modulo scalars"),
    Claim("char0.index", "char0", "representation pi: image of Gamma° has index 624 = 2^4 * 3 * 13 in PSL3(Z[omega])"),
    Claim("char0.free_evidence", "char0", "free subgroup: no relation of bounded length between two elements (evidence only)"),
    Claim("char3.relators", "char3", "representation rho: relators of Gamma hold exactly in SL3(F3(t))"),
    Claim("char3.det", "char3", "representation rho: generator images have determinant 1"),
    Claim("char3.schreier", "char3", "representation rho: images of Gamma° lie in SL3(F3[u]), u = t^3"),
    Claim("char3.level0", "char3", "representation rho: Gamma° modulo u is isomorphic to the unitriangular group"),
    Claim("char3.level1", "char3", "representation rho: level-1 quotient is a 7-dimensional subspace of sl3(F3)"),
    Claim("char3.index", "char3", "representation rho: index 624 in SL3(F3[u]) given level-2 containment"),
    Claim("char3.infinite_order", "char3", "a and b have infinite order"),
    Claim("char3.elementary", "char3", "representation rho: image contains E_ij(u^2) and E_ij(u^3) for all i != j"),
    Claim("char3.euclidean_lemma", "char3", "elementary matrices over an ideal of a Euclidean ring generate its congruence subgroup"),
    Claim("remark.no_intertwiner", "remark", "the level-0 reductions of pi and rho are not related by an automorphism"),
    Claim("nilpotency.depth", "nilpotency", "level-1 nested commutators of depth n - 1 survive modulo u^n (evidence for unbounded nilpotency class of finite quotients)"),
    Claim("search.elementary", "search", "bounded search for a word evaluating to an elementary matrix"),
    Claim("classify.maps", "classify", "unital polynomial maps of bounded degree from a cyclic group"),
    Claim("classify.cross_oracle", "classify", "universal property: map count equals homomorphism count from the universal group"),
]

REGISTRY: dict[str, Claim] = {c.id: c for c in _CLAIMS}
ORDER: dict[str, int] = {c.id: i for i, c in enumerate(_CLAIMS)}

VERIFY_TARGETS = ("pol2", "presentation", "char0", "char3", "remark", "nilpotency")


def claims_for(target: str) -> list[Claim]:
    if target == "all":
        return [c for c in _CLAIMS if c.target in VERIFY_TARGETS]
    return [c for c in _CLAIMS if c.target == target]


def reference(claim_id: str) -> str:
    return REGISTRY[claim_id].reference
