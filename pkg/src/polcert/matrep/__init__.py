"""3x3 matrix groups: the representations pi and rho and their congruence analysis."""

from .certify import (
    CERTIFIED,
    INCONCLUSIVE,
    NilpotencyWitness,
    OrderVerdict,
    RelationVerdict,
    bounded_no_relation,
    infinite_order_certificate,
    nested_commutator_word,
    nilpotency_witness,
)
from .congruence import (
    CHAR0,
    CHAR3,
    SL3,
    SL3_MOD_SCALARS,
    CongruenceLevel,
    LevelError,
    NotInGammaZeroError,
    NotInPSL3Error,
    SubspaceGF3,
    canonical_sl_key,
    congruence_level,
    descend_and_normalize,
    displayed_level1_set,
    finite_image_subgroup,
    index_reconstruction,
    level1_log,
    level1_span,
    reduce_mod_level,
    residue_matrix,
    sl3_order,
    standard_unitriangular,
)
from .intertwine import IntertwinerVerdict, automorphism_intertwiner_search, find_conjugator
from .mat3 import Mat3, gf3_key, gf3_matrix, proj_equal, projective
from .pipeline import CongruenceData, char0_data, char0_matches_display, char3_data, gamma0_schreier
from .reps import (
    RelatorVerdict,
    TranscriptionError,
    WordEvaluator,
    check_relators,
    corrupted,
    eval_word,
    mu,
    pi_generators,
    pi_images,
    rho_generators,
    rho_images,
    weight,
)
from .search import ElementaryTarget, SearchResult, all_elementary_targets, elementary_word_search, parse_target
from .steinberg import FULL, PARTIAL, SteinbergVerdict, elem, steinberg_closure, steinberg_identity_holds
