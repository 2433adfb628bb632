"""Exact arithmetic in the modified Ariki-Koike algebra H_{n,r}.

Elements live in the normal-form basis {b_k g_w}; every scalar is a
:class:`fractions.Fraction`.
"""

from .algebra import Algebra, Element, algebra_for, element_from_dict
from .bases import (
    BASES,
    CoordinateVector,
    ParameterChange,
    basis_labels,
    change_of_basis_rank,
    from_coordinates,
    parameter_change_map,
    to_coordinates,
)
from .errors import AlgebraError, ExpressionSyntaxError, IdentityFailure
from .expr import format_element, parse_element
from .fixed import fixed_basis, fixed_basis_labels, generation_check, is_fixed, orbit_idempotent
from .scalars import ParameterSet, validate_parameters
from .trace import GramReport, dual_basis_element, gram_check, tau, trace_property_check
from .verify import (
    VerificationReport,
    multi_parameter_fuzz,
    verify_b_presentation,
    verify_definition_presentation,
    verify_lemma_suite,
    verify_yokonuma_presentation,
)

__all__ = [
    "Algebra",
    "AlgebraError",
    "BASES",
    "CoordinateVector",
    "Element",
    "ExpressionSyntaxError",
    "GramReport",
    "IdentityFailure",
    "ParameterChange",
    "ParameterSet",
    "VerificationReport",
    "algebra_for",
    "basis_labels",
    "change_of_basis_rank",
    "dual_basis_element",
    "element_from_dict",
    "fixed_basis",
    "fixed_basis_labels",
    "format_element",
    "from_coordinates",
    "generation_check",
    "gram_check",
    "is_fixed",
    "multi_parameter_fuzz",
    "orbit_idempotent",
    "parameter_change_map",
    "parse_element",
    "tau",
    "to_coordinates",
    "trace_property_check",
    "validate_parameters",
    "verify_b_presentation",
    "verify_definition_presentation",
    "verify_lemma_suite",
    "verify_yokonuma_presentation",
]
