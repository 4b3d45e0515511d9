"""Exact constructive Galois descent for affine varieties over number fields."""

from .errors import (
    CocycleViolation,
    ConjugationNotClosed,
    InputError,
    MissingInverse,
    MorphismIncompatible,
    NotIntoConjugate,
    NotKRational,
    PolyParseError,
    ResourceLimit,
    SingularBasis,
    UnknownVariable,
    VerificationError,
    WeilDescentError,
    ZeroDenominator,
)
from .numberfield import (
    BasisMatrix,
    GaloisGroup,
    NumberField,
    NumberFieldElement,
    basis_matrix,
    power_basis,
    solve_trace_coefficients,
)
from .multipoly import (
    MonomialOrder,
    MultiPoly,
    PolyRing,
    RationalMap,
    compose_map,
    identity_map,
    poly_sigma,
    poly_trace,
)
from .parsing import parse_poly
from .groebner import (
    GroebnerBasis,
    Ideal,
    default_budget,
    eliminate,
    groebner,
    ideals_equal,
    image_ideal,
    normal_form,
    saturate,
)
from .invariants import (
    BlockPermutationAction,
    generate_invariants,
    minimize_generators,
    reynolds,
)
from .descent import (
    AffineVariety,
    DescentDatum,
    DescentResult,
    build_phi,
    compare_models,
    descend,
    descend_morphism,
    disjointify,
    maps_equal_mod_ideal,
    recover_inverse,
    transport_automorphisms,
    verify_datum,
)
from .kernel import IMPL as kernel_implementation

__version__ = "1.0.0"

__all__ = [
    "AffineVariety",
    "BasisMatrix",
    "BlockPermutationAction",
    "CocycleViolation",
    "ConjugationNotClosed",
    "DescentDatum",
    "DescentResult",
    "GaloisGroup",
    "GroebnerBasis",
    "Ideal",
    "InputError",
    "MissingInverse",
    "MonomialOrder",
    "MorphismIncompatible",
    "MultiPoly",
    "NotIntoConjugate",
    "NotKRational",
    "NumberField",
    "NumberFieldElement",
    "PolyParseError",
    "PolyRing",
    "RationalMap",
    "ResourceLimit",
    "SingularBasis",
    "UnknownVariable",
    "VerificationError",
    "WeilDescentError",
    "ZeroDenominator",
    "basis_matrix",
    "build_phi",
    "compare_models",
    "compose_map",
    "default_budget",
    "descend",
    "descend_morphism",
    "disjointify",
    "eliminate",
    "generate_invariants",
    "groebner",
    "ideals_equal",
    "identity_map",
    "image_ideal",
    "kernel_implementation",
    "maps_equal_mod_ideal",
    "minimize_generators",
    "normal_form",
    "parse_poly",
    "poly_sigma",
    "poly_trace",
    "power_basis",
    "recover_inverse",
    "reynolds",
    "saturate",
    "solve_trace_coefficients",
    "transport_automorphisms",
    "verify_datum",
]
