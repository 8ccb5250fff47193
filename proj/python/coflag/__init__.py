"""Exact symbolic computation in cohomology presentations of flag manifolds.

The heavy lifting happens in the compiled extension ``coflag._core``:
rational-coefficient polynomials, reduced Groebner bases, finite-dimensional
quotient rings, the built-in space presentations, and the structural
verifier. This package re-exports its public surface.
"""

from ._core import (
    MonomialOrder,
    Polynomial,
    QuotientRing,
    SpacePresentation,
    cartan_model_poincare,
    cartan_type_check,
    expected_basis,
    fibration_factorization_check,
    flag_presentation,
    g2_flag_presentation,
    groebner_basis,
    is_groebner_basis,
    is_in_ideal,
    load_presentation,
    normal_form,
    poincare_from_invariant_degrees,
    presentation_from_json,
    relation_family,
    relation_family_all,
    verify_model,
    verify_space,
    weyl_order,
)

__all__ = [
    "MonomialOrder",
    "Polynomial",
    "QuotientRing",
    "SpacePresentation",
    "cartan_model_poincare",
    "cartan_type_check",
    "expected_basis",
    "fibration_factorization_check",
    "flag_presentation",
    "g2_flag_presentation",
    "groebner_basis",
    "is_groebner_basis",
    "is_in_ideal",
    "load_presentation",
    "normal_form",
    "poincare_from_invariant_degrees",
    "presentation_from_json",
    "relation_family",
    "relation_family_all",
    "verify_model",
    "verify_space",
    "weyl_order",
]

__version__ = "1.0.0"
