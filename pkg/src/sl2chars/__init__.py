"""Exact linear characters of SL2 over finite commutative rings and
rings of integers of number fields.

Character values are exact roots of unity (rational exponents), group
facts are double-checked against brute-force enumeration, and the
number-field layer computes maximal orders and prime splitting with
integer arithmetic only.
"""

from .characters import (
    ROOT_MINUS_ONE,
    ROOT_ONE,
    CharacterSpec,
    UnityRoot,
    char_eval,
    character_spec,
    characters_equal,
    eps4prime,
    eps_n,
    invariant_I,
    sigma,
    zmod_character_group,
)
from .groups import (
    FiniteGroup,
    GroupError,
    abelianization,
    all_linear_characters,
    closure,
    commutator_subgroup,
    element_order,
    kernel_of_reduction,
    sl2_group,
    verify_semidirect,
)
from .matrices import (
    Mat2,
    QuadForm,
    elementary_decomposition,
    enumerate_sl2,
    gen_E,
    gen_S,
    gen_T,
    identity,
    mat2,
    quadratic_form,
    sl2_order_formula,
    word_product,
)
from .numberfield import (
    CharGroupDescriptor,
    IntPoly,
    NumberFieldError,
    OrderBasis,
    PrimeSplit,
    UnitIdealReport,
    character_group,
    dedekind_is_pmaximal,
    factor_mod_p,
    is_irreducible,
    poly_discriminant,
    prime_splitting,
    round2_pmaximal_order,
    unit_square_ideal,
)
from .rings import (
    ALPHA,
    DUAL_F2,
    RingElement,
    RingError,
    RingHom,
    UnitSquareCase,
    Zmod,
    classify_unit_square,
    crt_decompose,
    dual_element,
    element,
    enumerate_ring,
    hom_reduce,
    one,
    units,
    zero,
)
from .suites import CheckResult, run_suite

__version__ = "1.0.0"

__all__ = [
    "ALPHA", "DUAL_F2", "ROOT_MINUS_ONE", "ROOT_ONE",
    "CharGroupDescriptor", "CharacterSpec", "CheckResult", "FiniteGroup",
    "GroupError", "IntPoly", "Mat2", "NumberFieldError", "OrderBasis",
    "PrimeSplit", "QuadForm", "RingElement", "RingError", "RingHom",
    "UnitIdealReport", "UnitSquareCase", "UnityRoot", "Zmod",
    "abelianization", "all_linear_characters", "char_eval",
    "character_group", "character_spec", "characters_equal",
    "classify_unit_square", "closure", "commutator_subgroup",
    "crt_decompose", "dedekind_is_pmaximal", "dual_element",
    "element", "element_order", "elementary_decomposition",
    "enumerate_ring", "enumerate_sl2", "eps4prime", "eps_n",
    "factor_mod_p", "gen_E", "gen_S", "gen_T", "hom_reduce",
    "identity", "invariant_I", "is_irreducible", "kernel_of_reduction",
    "mat2", "one", "poly_discriminant", "prime_splitting",
    "quadratic_form", "round2_pmaximal_order", "run_suite", "sigma",
    "sl2_group", "sl2_order_formula", "unit_square_ideal", "units",
    "verify_semidirect", "word_product", "zero",
    "zmod_character_group",
]
