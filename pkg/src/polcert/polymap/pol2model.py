"""The explicit order-27 model of the universal group of quadratic maps on C_3.

Elements are pairs (xi, g) with xi in V = (Z/3)^2 (basis e1, e2) and g in
C_3 (exponent of sigma).  V is the augmentation ideal of Z[C_3] tensored
with C_3; with alpha = sigma - 1 and beta = tau - 1 the basis is
e1 = alpha (x) sigma-bar, e2 = beta (x) sigma-bar.  Multiplication:

    (xi, g)(eta, h) = (xi + g.eta + psi(g, h), gh),   psi(g, h) = c(g) (x) h-bar,

where c(g) = g - 1 and C_3 acts on the augmentation ideal by left
multiplication: sigma.alpha = beta - alpha, sigma.beta = -alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup, from_elements, heisenberg_3, semidirect_c9_c3
from .isomorphism import is_isomorphic_small

Vec = tuple[int, int]
Elem = tuple[int, int, int]  # (xi1, xi2, g)

E1: Vec = (1, 0)
E2: Vec = (0, 1)


class ModelConstructionError(RuntimeError):
    pass


def _add(x: Vec, y: Vec) -> Vec:
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def _scale(k: int, x: Vec) -> Vec:
    return ((k * x[0]) % 3, (k * x[1]) % 3)


def act(g: int, x: Vec) -> Vec:
    """Action of sigma^g on V."""
    for _ in range(g % 3):
        # e1 -> -e1 + e2, e2 -> -e1
        x = ((-x[0] - x[1]) % 3, x[0] % 3)
    return x


def c(g: int) -> Vec:
    """c(sigma^g) = sigma^g - 1 in the basis alpha, beta, tensored with sigma-bar."""
    return {0: (0, 0), 1: E1, 2: E2}[g % 3]


def psi(g: int, h: int) -> Vec:
    """psi(g, h) = c(g) (x) h-bar, where h-bar = h (mod 3) times sigma-bar."""
    return _scale(h, c(g))


def mul(p: Elem, q: Elem) -> Elem:
    xi, g = (p[0], p[1]), p[2]
    eta, h = (q[0], q[1]), q[2]
    v = _add(_add(xi, act(g, eta)), psi(g, h))
    return (v[0], v[1], (g + h) % 3)


IDENTITY: Elem = (0, 0, 0)


def power(x: Elem, k: int) -> Elem:
    """x^k for k >= 0."""
    out = IDENTITY
    for _ in range(k):
        out = mul(out, x)
    return out


@dataclass
class Pol2Model:
    group: FiniteGroup
    a: int  # index of (0, sigma)
    b: int  # index of (0, tau)
    checks: dict[str, bool]

    def elem(self, i: int) -> Elem:
        return self.group.labels[i]

    def index(self, e: Elem) -> int:
        return self.group.index_of(e)


def build_pol2_model() -> Pol2Model:
    """Build the 27-element model and run its internal checks.

    Raises ModelConstructionError if any identity fails.
    """
    elems = [(x, y, g) for g in range(3) for x in range(3) for y in range(3)]
    G = from_elements(elems, mul, name="Pol2(C3)", identity=IDENTITY)
    a_e, b_e = (0, 0, 1), (0, 0, 2)
    a, b = G.index_of(a_e), G.index_of(b_e)
    ai, bi = G.inv(a), G.inv(b)
    pw = lambda x, k: G.power(x, k)
    lab = G.index_of
    checks = {
        "psi(sigma,sigma)=e1": psi(1, 1) == E1,
        "psi(tau,sigma)=e2": psi(2, 1) == E2,
        "psi(sigma,tau)=2e1": psi(1, 2) == _scale(2, E1),
        "psi(tau,tau)=2e2": psi(2, 2) == _scale(2, E2),
        "a^2=(e1,tau)": pw(a, 2) == lab((1, 0, 2)),
        "a^3=(e1+e2,1)": pw(a, 3) == lab((1, 1, 0)),
        "b^2=(2e2,sigma)": pw(b, 2) == lab((0, 2, 1)),
        "b^3=(2e1+2e2,1)": pw(b, 3) == lab((2, 2, 0)),
        "b^-1=(e1,sigma)": bi == lab((1, 0, 1)),
        "a^-1=(2e2,tau)": ai == lab((0, 2, 2)),
        "a^9=1": pw(a, 9) == G.identity,
        "b^9=1": pw(b, 9) == G.identity,
        "bab^-1=a^4": G.product([b, a, bi]) == pw(a, 4),
        "aba^-1=b^4": G.product([a, b, ai]) == pw(b, 4),
        "order=27": G.order == 27,
        "generated by a,b": len(G.generated_by([a, b])) == 27,
        "exponent=9": G.exponent() == 9,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise ModelConstructionError(f"model checks failed: {failed}")
    return Pol2Model(G, a, b, checks)


def structure_claims(model: Pol2Model | None = None) -> dict[str, bool]:
    """Isomorphism type: C_9 x| C_3 (action by 4) and not the Heisenberg group."""
    model = model or build_pol2_model()
    heis = heisenberg_3()
    return {
        "isomorphic to C9:C3 (x4)": is_isomorphic_small(model.group, semidirect_c9_c3(4)),
        "not isomorphic to Heisenberg mod 3": not is_isomorphic_small(model.group, heis),
        "Heisenberg mod 3 has exponent 3": heis.exponent() == 3,
    }
