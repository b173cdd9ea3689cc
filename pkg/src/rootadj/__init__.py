"""Homotopy-ring level calculator for root adjunction in graded ring spectra."""

from .algebra import (
    Bidegree,
    Element,
    GeneratorSpec,
    PresentedAlgebra,
    RootRelation,
    make_algebra,
    multiply,
)
from .basis import BasisTable, enumerate_basis, poincare_per_weight, table_diff
from .coefficients import CoefficientRing, Fp, ZpLocal
from .maps import AlgebraMap, apply_map

__all__ = [
    "AlgebraMap",
    "BasisTable",
    "Bidegree",
    "CoefficientRing",
    "Element",
    "Fp",
    "GeneratorSpec",
    "PresentedAlgebra",
    "RootRelation",
    "ZpLocal",
    "apply_map",
    "enumerate_basis",
    "make_algebra",
    "multiply",
    "poincare_per_weight",
    "table_diff",
]
