"""Finite-difference calculus of maps into finite groups."""

from .groups import (
    FiniteGroup,
    GroupFormatError,
    GroupValidationError,
    battery,
    c9_x_c3,
    cyclic_group,
    direct_product,
    from_elements,
    heisenberg_3,
    load_group,
    parse_group,
    permutation_group,
    semidirect_c9_c3,
    symmetric_group_3,
    trivial_group,
)
from .isomorphism import automorphisms, find_isomorphism, is_isomorphic_small
from .maps import (
    SIGMA,
    TAU,
    GuardExceeded,
    MapTable,
    beta,
    c2,
    c3,
    classify_unital_polynomial_maps,
    degree,
    degree_at_most,
    delta,
    image_pairs,
    map_from_c3,
    unital_maps,
)
from .pol2model import Pol2Model, build_pol2_model, structure_claims
