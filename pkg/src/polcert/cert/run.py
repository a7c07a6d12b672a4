"""Run groups of claims, possibly concurrently, and assemble a certificate."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .certificate import FALSIFIED, INCONCLUSIVE, VERIFIED, Certificate, ClaimRecord, digest
from .claims import MATH_ERRORS, RESOURCE_ERRORS, Context, run_claim
from .config import RunConfig, thread_count
from .registry import VERIFY_TARGETS, claims_for


def verify(target: str, config: RunConfig | None = None, threads: int | None = None) -> Certificate:
    """Run every claim of ``target`` (one of the verify targets or "all")."""
    if target != "all" and target not in VERIFY_TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(VERIFY_TARGETS + ('all',))}")
    config = config or RunConfig()
    threads = threads or thread_count()
    ctx = Context(config)
    ids = [c.id for c in claims_for(target)]
    if threads == 1:
        records = [run_claim(i, ctx) for i in ids]
    else:
        # claims sharing cached data wait on a per-key lock; order is restored by the certificate
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda i: run_claim(i, ctx), ids))
    return Certificate(f"verify {target}", records, config.as_dict(), threads)


def classify(H, degree: int, domain: str = "c3", config: RunConfig | None = None) -> Certificate:
    """All unital maps of degree <= ``degree`` from C_3 (or C_2) into H, with the universal-group cross-check."""
    import time

    from ..fpgroup import count_homs, gamma, pol2
    from ..fpgroup.presentation import Presentation, cyclic
    from ..polymap import c2, c3, classify_unital_polynomial_maps

    config = config or RunConfig()
    if degree < 0:
        raise ValueError("degree must be non-negative")
    G = c3() if domain == "c3" else c2() if domain == "c2" else None
    if G is None:
        raise ValueError("domain must be c2 or c3")
    inputs = {"group": H.name, "order": H.order, "table_digest": digest(H.table.tolist()), "degree": degree, "domain": domain}
    start = time.perf_counter()
    try:
        maps = classify_unital_polynomial_maps(G, H, degree, config.map_guard)
        listed = [list(m.images) for m in maps]
        rec1 = ClaimRecord("classify.maps", VERIFIED, {"count": len(maps), "maps": listed}, inputs,
                           (time.perf_counter() - start) * 1000)
    except RESOURCE_ERRORS as exc:
        rec1 = ClaimRecord("classify.maps", INCONCLUSIVE, {"error": str(exc), "resource_limit": True}, inputs)
        return Certificate(f"classify {domain} degree {degree}", [rec1], config.as_dict())

    start = time.perf_counter()
    if degree == 0:
        universal, label = Presentation(1, ((1,),)), "trivial group"
    elif domain == "c2":
        universal, label = cyclic(2 ** degree), f"C{2 ** degree}"
    else:
        universal, label = {1: (cyclic(3), "C3"), 2: (pol2(), "Pol2(C3)"), 3: (gamma(), "Gamma")}.get(degree, (None, None))
    if universal is None:
        rec2 = ClaimRecord("classify.cross_oracle", INCONCLUSIVE,
                           {"reason": f"no universal presentation known for degree {degree} from C3"}, inputs)
    else:
        try:
            homs = count_homs(universal, H, config.hom_guard)
            wit = {"maps": len(maps), "homomorphisms": homs, "universal_group": label}
            rec2 = ClaimRecord("classify.cross_oracle", VERIFIED if homs == len(maps) else FALSIFIED, wit, inputs,
                               (time.perf_counter() - start) * 1000)
        except RESOURCE_ERRORS as exc:
            rec2 = ClaimRecord("classify.cross_oracle", INCONCLUSIVE, {"error": str(exc), "resource_limit": True}, inputs)
    return Certificate(f"classify {domain} degree {degree}", [rec1, rec2], config.as_dict())


def search(char: int, target_spec: str, config: RunConfig | None = None, check_word: str | None = None) -> Certificate:
    """Bounded elementary-matrix word search over the index-3 subgroup, or verification of a given word."""
    import time

    from ..fpgroup import parse_word
    from ..matrep import elementary_word_search, gamma0_schreier, parse_target, pi_generators, rho_generators
    from ..matrep.mat3 import projective
    from ..matrep.search import _integral_image

    config = config or RunConfig()
    if char not in (0, 3):
        raise ValueError("characteristic must be 0 or 3")
    tgt = parse_target(target_spec, char)
    ev = rho_generators() if char == 3 else pi_generators()
    bounds = {"max_len": config.search_max_len, "max_degree": config.search_max_degree,
              "budget_ms": config.search_budget_ms, "max_nodes": config.search_max_nodes,
              "meet_in_middle": config.search_meet_in_middle}
    inputs = {"char": char, "target": tgt.label(), "bounds": bounds, "check_word": check_word}
    start = time.perf_counter()
    if check_word is not None:
        w = parse_word(check_word, "ab")
        try:
            m = _integral_image(ev, w, char)
            t = tgt.matrix()
            ok = m == t if char == 3 else projective(m) == projective(t)
        except MATH_ERRORS as exc:
            ok, m = False, str(exc)
        wit = {"mode": "check-word", "word": check_word, "matches_target": ok}
        return Certificate(f"search check {tgt.label()}", [ClaimRecord(
            "search.elementary", VERIFIED if ok else FALSIFIED, wit, inputs, (time.perf_counter() - start) * 1000)],
            config.as_dict())
    r = elementary_word_search(ev, gamma0_schreier().schreier_generators, tgt, config.search_max_len,
                               config.search_max_degree, config.search_budget_ms, config.search_max_nodes,
                               config.search_meet_in_middle)
    wit = {"mode": "search", "found": r.found, "word": format_ab(r.word), "verified": r.verified,
           "reason": r.reason, "nodes": r.nodes, "depth_reached": r.depth_reached}
    if not r.found and "budget exhausted" in r.reason:
        wit["resource_limit"] = True
    if r.found and r.verified:
        verdict = VERIFIED
    elif r.found:
        verdict = FALSIFIED
    else:
        verdict = INCONCLUSIVE
    return Certificate(f"search {tgt.label()}", [ClaimRecord("search.elementary", verdict, wit, inputs, r.elapsed_ms)],
                       config.as_dict())


def format_ab(w) -> str | None:
    from ..fpgroup import format_word

    if w is None:
        return None
    return format_word(w, "ab") if len(w) else "1"
