"""Words, presentations, coset enumeration and related machinery."""

from .coset import CosetTable, group_order, todd_coxeter
from .derivation import (
    DerivationScript,
    DerivationVerdict,
    Step,
    check_derivation,
    cubic_derivation_script,
    quadratic_relators,
)
from .homs import SizeGuardError, count_homs, hom_tuples
from .presentation import Presentation, gamma, parse_presentation, pol2
from .schreier import NotGeneratingError, SubgroupData, reidemeister_schreier
from .snf import abelianization, invariant_factors, smith_normal_form
from .words import (
    IDENTITY,
    Word,
    commutator,
    conjugate,
    cyclic_reduce,
    format_word,
    inverse,
    mul,
    parse_word,
    power,
    substitute,
    word_op,
)
