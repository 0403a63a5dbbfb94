"""Exact arithmetic substrate: scalar fields, univariate and sparse
multivariate polynomials."""

from .multipoly import (
    MultiPoly,
    NotDivisible,
    UnknownVariable,
    difference_factors,
    mpoly_exact_div,
    mpoly_letter_substitute,
    strip_difference_content,
)
from .scalars import Fraction, GaussianRational, I, as_exact, is_zero
from .univariate import UniPoly, UniRatFunc, uniratfunc_is_zero

__all__ = [
    "Fraction",
    "GaussianRational",
    "I",
    "MultiPoly",
    "NotDivisible",
    "UniPoly",
    "UniRatFunc",
    "UnknownVariable",
    "as_exact",
    "difference_factors",
    "is_zero",
    "mpoly_exact_div",
    "mpoly_letter_substitute",
    "strip_difference_content",
    "uniratfunc_is_zero",
]
