"""Exact verifier for identities in right Hom-alternative algebras."""

from .scalars import Poly, Rational, Scalar, scalar_str
from .homalgebra import (
    CheckReport,
    Element,
    HomAlgebra,
    Witness,
    basis_left_zero_divisors,
    element_str,
    generic_element,
    is_hom_nilpotent,
    is_left_hom_alternative,
    is_morphism,
    is_multiplicative,
    is_right_hom_alternative,
    is_weak_morphism,
    substitute_params,
    yau_twist,
)
from .operators import RightOp, alpha_op, apply, compose, op_sub, op_sup, right_mul_op, zero_op
from .catalog import (
    FamilyParams,
    family_nonisomorphism_condition,
    mikheev_algebra,
    mikheev_family,
    mikheev_morphism,
    spectrum_certificate,
)
from .proof_replay import (
    BatchResult,
    IdentityInstance,
    PreconditionError,
    registry,
    smallest_alpha_exponent,
    verify,
    verify_all,
)
from .algfile import (
    AlgebraFormatError,
    parse_algebra,
    parse_document,
    parse_element_expr,
    parse_morphism,
    serialize_algebra,
    serialize_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFormatError",
    "BatchResult",
    "CheckReport",
    "Element",
    "FamilyParams",
    "HomAlgebra",
    "IdentityInstance",
    "Poly",
    "PreconditionError",
    "Rational",
    "RightOp",
    "Scalar",
    "Witness",
    "alpha_op",
    "apply",
    "basis_left_zero_divisors",
    "compose",
    "element_str",
    "family_nonisomorphism_condition",
    "generic_element",
    "is_hom_nilpotent",
    "is_left_hom_alternative",
    "is_morphism",
    "is_multiplicative",
    "is_right_hom_alternative",
    "is_weak_morphism",
    "mikheev_algebra",
    "mikheev_family",
    "mikheev_morphism",
    "op_sub",
    "op_sup",
    "parse_algebra",
    "parse_document",
    "parse_element_expr",
    "parse_morphism",
    "registry",
    "right_mul_op",
    "scalar_str",
    "serialize_algebra",
    "serialize_morphism",
    "smallest_alpha_exponent",
    "spectrum_certificate",
    "substitute_params",
    "verify",
    "verify_all",
    "yau_twist",
    "zero_op",
    "__version__",
]
