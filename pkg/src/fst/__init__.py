"""Monomial bases of Feigin-Stoyanovsky type subspaces for the affine algebra C_l^(1)."""

from .basis import QSeries, enumerate_basis, graded_series, iter_basis
from .conditions import (
    DcReport,
    LeadingShape,
    enumerate_leading_shapes,
    satisfies_dc,
    satisfies_dc_ic,
    satisfies_dc_oracle,
    satisfies_ic,
    with_imaginary_part,
)
from .core import (
    Color,
    Monomial,
    Variable,
    Weight,
    compare_colors,
    compare_monomials,
    compare_variables,
    format_monomial,
    parse_monomial,
    parse_weight,
    precedes,
)
from .decompose import Factorization, chain_cover, factorize, verify_factorization_theorem
from .model import build_level1_model, normal_form, tensor_apply, verify_independence
from .relations import expand_graded, generate_relation_family, leading_term, lower, verify_leading_terms

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "enumerate_basis",
    "graded_series",
    "iter_basis",
    "DcReport",
    "LeadingShape",
    "enumerate_leading_shapes",
    "satisfies_dc",
    "satisfies_dc_ic",
    "satisfies_dc_oracle",
    "satisfies_ic",
    "with_imaginary_part",
    "Color",
    "Monomial",
    "Variable",
    "Weight",
    "compare_colors",
    "compare_monomials",
    "compare_variables",
    "format_monomial",
    "parse_monomial",
    "parse_weight",
    "precedes",
    "Factorization",
    "chain_cover",
    "factorize",
    "verify_factorization_theorem",
    "build_level1_model",
    "normal_form",
    "tensor_apply",
    "verify_independence",
    "expand_graded",
    "generate_relation_family",
    "leading_term",
    "lower",
    "verify_leading_terms",
]
