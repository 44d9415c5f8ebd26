"""Exact constructive commutative algebra: maximal ideals without choice.

The central object is a recursively built maximal ideal over a countable
strongly discrete ring, exposed as a decidable membership predicate with
explicit linear-combination witnesses.  On top of it sit geometric quotient
fields, splitting-field towers, localization-based prime ideals and a set of
theorem verifiers with brute-force oracles.
"""

from ._kernels import BACKEND
from .chain import Dichotomy, MaximalIdeal, new_maximal_ideal, witness_json
from .enumeration import Enumeration, canonical, explicit_prefix, shifted
from .errors import (
    BoundExceeded,
    DivisionByZeroPoly,
    KrullkitError,
    PreconditionViolated,
    RingUsageError,
    SpecParseError,
    UndefinedIndex,
    UnsupportedRing,
    WitnessError,
)
from .quotient import (
    ExtensionField,
    FieldTower,
    GeometricField,
    adjoin_root,
    splitting_field,
)
from .rings import (
    Fraction,
    IntegerRing,
    Localization,
    ModularRing,
    PolynomialRing,
    PrimeField,
    Ring,
    integers,
    saturation_divides,
)
from .spectrum import (
    PrimeIdeal,
    is_apart_from_jacobson,
    jacobson_escape,
    krull_witness,
    x_prime_ideal,
)
from .theorems import (
    BruteForceOracle,
    matrix_not_surjective,
    poly_inverse,
    poly_nilpotency,
    verify_invertible_coefficients,
    verify_nilpotent_coefficients,
)
from .witness import AUDIT, MembershipWitness, make_witness

__version__ = "0.1.0"

__all__ = [
    "AUDIT",
    "BACKEND",
    "BoundExceeded",
    "BruteForceOracle",
    "Dichotomy",
    "DivisionByZeroPoly",
    "Enumeration",
    "ExtensionField",
    "FieldTower",
    "Fraction",
    "GeometricField",
    "IntegerRing",
    "KrullkitError",
    "Localization",
    "MaximalIdeal",
    "MembershipWitness",
    "ModularRing",
    "PolynomialRing",
    "PreconditionViolated",
    "PrimeField",
    "PrimeIdeal",
    "Ring",
    "RingUsageError",
    "SpecParseError",
    "UndefinedIndex",
    "UnsupportedRing",
    "WitnessError",
    "adjoin_root",
    "canonical",
    "explicit_prefix",
    "integers",
    "is_apart_from_jacobson",
    "jacobson_escape",
    "krull_witness",
    "make_witness",
    "matrix_not_surjective",
    "new_maximal_ideal",
    "poly_inverse",
    "poly_nilpotency",
    "saturation_divides",
    "shifted",
    "splitting_field",
    "verify_invertible_coefficients",
    "verify_nilpotent_coefficients",
    "witness_json",
    "x_prime_ideal",
]
