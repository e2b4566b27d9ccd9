"""Exact sign classification of the top Ricci eigenvalue of finite trees."""

from .algebra import Polynomial, RationalMatrix, SingularBlockError, char_poly, fraction_free_det, schur_complement
from .classify import (
    ClassificationResult,
    SignClass,
    classify_by_theorem,
    classify_caterpillar,
    classify_exact,
    einstein_metric,
)
from .ricci import lly_curvature, rayleigh_form, ricci_matrix
from .trees import CaterpillarParam, Tree, build_caterpillar, build_named

__version__ = "0.1.0"
