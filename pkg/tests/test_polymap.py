import pytest

from polcert.fpgroup import count_homs, gamma, pol2
from polcert.fpgroup.presentation import cyclic
from polcert.polymap import (
    GroupFormatError,
    GuardExceeded,
    MapTable,
    battery,
    build_pol2_model,
    c2,
    c3,
    classify_unital_polynomial_maps,
    cyclic_group,
    degree,
    delta,
    heisenberg_3,
    is_isomorphic_small,
    parse_group,
    semidirect_c9_c3,
    structure_claims,
    symmetric_group_3,
    trivial_group,
    unital_maps,
)
from polcert.polymap.pol2model import IDENTITY, mul, power


def test_group_constructors():
    assert symmetric_group_3().order == 6
    assert heisenberg_3().exponent() == 3
    assert semidirect_c9_c3().exponent() == 9
    assert not is_isomorphic_small(semidirect_c9_c3(), heisenberg_3())


def test_parse_group_formats():
    s3 = parse_group("perm 3\n(1 2 3)\n(1 2)\n")
    assert s3.order == 6 and is_isomorphic_small(s3, symmetric_group_3())
    c2_ = parse_group("order 2\n0 1\n1 0\n")
    assert c2_.order == 2
    assert parse_group("order 1\n0\n").order == 1


@pytest.mark.parametrize("text, line", [
    ("perm 3\n(1 2 4)\n", 2),
    ("order 2\n0 1\n1 1\n", None),
    ("order 2\n0 1\n", 1),
    ("group 2\n", 1),
    ("order 2\n0 x\n1 0\n", 2),
])
def test_parse_group_errors(text, line):
    with pytest.raises(GroupFormatError) as exc:
        parse_group(text)
    if line is not None:
        assert f"line {line}" in str(exc.value)


def test_degree_basics():
    G, H = c3(), cyclic_group(3)
    triv = MapTable(G, H, (0, 0, 0))
    hom = MapTable(G, H, (0, 1, 2))
    assert degree(triv) == -1 and degree(hom) == 1
    assert delta(hom, 1).images == (1, 1, 1)


def test_abelian_oracle():
    # every function F_3 -> F_3 is a polynomial of degree <= 2; degree <= 1 unital ones are the homomorphisms
    G, H = c3(), cyclic_group(3)
    assert len(classify_unital_polynomial_maps(G, H, 2)) == 9
    assert len(classify_unital_polynomial_maps(G, H, 1)) == 3


def test_battery_cross_oracle():
    for name, H in battery().items():
        assert len(classify_unital_polynomial_maps(c3(), H, 3)) == count_homs(gamma(), H), name
        assert len(classify_unital_polynomial_maps(c3(), H, 2)) == count_homs(pol2(), H), name
        assert len(classify_unital_polynomial_maps(c3(), H, 1)) == count_homs(cyclic(3), H), name


def test_c2_cyclic_universal_groups():
    for k in (1, 2, 3):
        H = cyclic_group(8)
        assert len(classify_unital_polynomial_maps(c2(), H, k)) == count_homs(cyclic(2 ** k), H)
    assert len(classify_unital_polynomial_maps(c2(), cyclic_group(8), 3)) == 8


def test_trivial_target():
    assert len(classify_unital_polynomial_maps(c3(), trivial_group(), 5)) == 1


def test_guard():
    with pytest.raises(GuardExceeded):
        list(unital_maps(cyclic_group(9), cyclic_group(27), guard=1000))


def test_pol2_model():
    m = build_pol2_model()
    assert all(m.checks.values()) and m.group.order == 27 and m.group.exponent() == 9
    assert all(structure_claims(m).values())
    a = (0, 0, 1)
    assert power(a, 9) == IDENTITY and power(a, 3) != IDENTITY
    assert mul(a, IDENTITY) == a
