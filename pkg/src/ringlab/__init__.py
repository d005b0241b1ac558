"""Finite associative rings: radicals, ideal lattices, ring-class predicates,
extensions, and replay of J-reflexivity results over a corpus."""

from .errors import *  # noqa: F401,F403
from .ring import (
    FiniteRing,
    RingElement,
    ValidationReport,
    elem_add,
    elem_mul,
    elem_neg,
    enumerate_elements,
    is_unit,
    parse_element,
    parse_elements,
    parse_ring,
    serialize_ring,
    validate_ring,
)
from .ideals import (
    ElementSet,
    annihilator,
    central_idempotents,
    generated,
    idempotents,
    is_nilpotent_ideal,
    jacobson_radical,
    maximal_right_ideals,
    nil_elements,
    right_ideals,
    sandwich,
    set_product_in,
    set_product_is_zero,
    two_sided_ideals,
    units,
)
from .predicates import (
    PREDICATES,
    PredicateProfile,
    Verdict,
    evaluate,
    ideal_is_reflexive,
    ideal_is_semiprime,
    is_abelian,
    is_baer,
    is_boolean,
    is_commutative,
    is_j_reflexive,
    is_j_reversible,
    is_quasi_duo,
    is_reduced,
    is_reflexive,
    is_reversible,
    is_symmetric,
    is_uniquely_clean,
    profile,
    six_conditions_profile,
)
from .constructions import (
    Endomorphism,
    NonUnitalRing,
    central_regular_localization,
    corner_ring,
    cyclic_ring,
    direct_product,
    dorroh_extension,
    frobenius,
    identity_endomorphism,
    matrix_ring,
    quotient_ring,
    scalar_plus_strict_upper,
    subdirect_check,
    trivial_extension,
    truncated_skew_power_series,
    upper_triangular_ring,
)
from .suite import CHECK_IDS, SuiteConfig, TheoremCheck, TheoremReport, run_suite, run_theorem

__version__ = "0.1.0"
