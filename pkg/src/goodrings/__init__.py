"""Exact arithmetic for good rings: witness search for good points, the
inductive unit-valued homogeneous-polynomial constructor with replayable
traces, the A + A*th algebra with its unit law, and the bridge between
witnesses and bivariate homogeneous polynomials."""

from .core import (
    BezoutCertificate,
    GoodRingsError,
    InfiniteRingError,
    NotPrimitiveError,
    ParseError,
    PreconditionError,
    PrimitivePoint,
    Ring,
    UnsupportedRingError,
    bezout,
    is_primitive,
    require_primitive,
    verify_certificate,
)
from .homog import (
    ConstructionTrace,
    ExtensionStep,
    HomogeneousPolynomial,
    SectionIdeal,
    WitnessSearchExhausted,
    construct_unit_valued,
    extend_unit_valued,
    ideal_slice_dimension,
    linear_form_for_point,
    monomial_exponents,
    replay_trace,
    section_ideal_generators,
)
from .rings import (
    Integers,
    IntegersMod,
    LocalizedRationalPoly,
    PolyOverPrimeField,
    PrimeField,
    ProductRing,
    RationalPoly,
    parse_ring,
)
from .sab import (
    SabAlgebra,
    SabElement,
    polynomial_to_witness,
    sab_add,
    sab_is_unit,
    sab_mul,
    witness_to_polynomial,
)
from .witness import (
    CycleWithoutUnit,
    Exhausted,
    GoodPointWitness,
    GoodRingReport,
    RatioCriterion,
    RationalEvaluation,
    Refuted,
    SearchOutcome,
    UnitQuotientReport,
    Witness,
    check_good_ring_exhaustive,
    decide_good_point_rational_split,
    find_good_witness,
    refute_integer_poly_point,
    unit_quotient_group,
    verify_witness,
)

__all__ = [
    "BezoutCertificate",
    "ConstructionTrace",
    "CycleWithoutUnit",
    "Exhausted",
    "ExtensionStep",
    "GoodPointWitness",
    "GoodRingReport",
    "GoodRingsError",
    "HomogeneousPolynomial",
    "InfiniteRingError",
    "Integers",
    "IntegersMod",
    "LocalizedRationalPoly",
    "NotPrimitiveError",
    "ParseError",
    "PolyOverPrimeField",
    "PreconditionError",
    "PrimeField",
    "PrimitivePoint",
    "ProductRing",
    "RationalEvaluation",
    "RationalPoly",
    "RatioCriterion",
    "Refuted",
    "Ring",
    "SabAlgebra",
    "SabElement",
    "SearchOutcome",
    "SectionIdeal",
    "UnitQuotientReport",
    "UnsupportedRingError",
    "Witness",
    "WitnessSearchExhausted",
    "bezout",
    "check_good_ring_exhaustive",
    "construct_unit_valued",
    "decide_good_point_rational_split",
    "extend_unit_valued",
    "find_good_witness",
    "ideal_slice_dimension",
    "is_primitive",
    "linear_form_for_point",
    "monomial_exponents",
    "parse_ring",
    "polynomial_to_witness",
    "replay_trace",
    "require_primitive",
    "sab_add",
    "sab_is_unit",
    "sab_mul",
    "section_ideal_generators",
    "unit_quotient_group",
    "verify_certificate",
    "verify_witness",
    "witness_to_polynomial",
]

__version__ = "0.1.0"
