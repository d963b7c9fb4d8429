"""Varieties of quadratic Groebner bases over path algebras of quivers."""

from .algebra import complete_reduce, Element, normal_form, RewriteSystem, simple_reduce, tip
from .coefficients import CoeffVar, evaluate, normalize, Poly, symbols
from .constructions import (enveloping_scheme, opposite_point, opposite_scheme, tensor_scheme,
                            TensorProduct)
from .invariants import (betti, betti_table, cartan_determinant, cartan_matrix, enumerate_nontips,
                         global_dimension, has_finite_global_dimension, InfiniteDimensionError,
                         injective_dimension, is_finite_dimensional, projective_dimension,
                         resolution_tips)
from .order import LengthLeftLex, PathOrder
from .quiver import Arrow, Path, Quiver
from .schemefile import load_fixture, parse, render, SchemeFile, SchemeFileError
from .variety import (buchberger_check, build_scheme, is_member, overlaps, QuadraticScheme,
                      specialize, variety_ideal)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "Path", "Quiver", "PathOrder", "LengthLeftLex",
    "CoeffVar", "Poly", "symbols", "normalize", "evaluate",
    "Element", "RewriteSystem", "tip", "simple_reduce", "complete_reduce", "normal_form",
    "QuadraticScheme", "build_scheme", "overlaps", "variety_ideal", "is_member",
    "buchberger_check", "specialize",
    "enumerate_nontips", "is_finite_dimensional", "cartan_matrix", "cartan_determinant",
    "resolution_tips", "betti", "betti_table", "projective_dimension", "injective_dimension",
    "global_dimension", "has_finite_global_dimension", "InfiniteDimensionError",
    "opposite_scheme", "opposite_point", "tensor_scheme", "enveloping_scheme", "TensorProduct",
    "SchemeFile", "SchemeFileError", "parse", "render", "load_fixture",
]
