"""Compactly generated co-t-structures in the homotopy category of bounded
complexes of projectives over a path algebra of an acyclic quiver."""
from __future__ import annotations

from cotstruct._kernels import BACKEND
from cotstruct.algebra import AlgebraError, PathAlgebra, Quiver, parse_element
from cotstruct.complexes import (
    ChainMap,
    Complex,
    ComplexError,
    algebra_stalk,
    cone,
    hom_space,
    suspend,
)
from cotstruct.cotstructure import (
    GeneratorSet,
    NonTerminating,
    b_approximation,
    decompose,
    in_A_bar,
    in_B,
    r_approximation,
)
from cotstruct.linalg import make_field

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgebraError",
    "ChainMap",
    "Complex",
    "ComplexError",
    "GeneratorSet",
    "NonTerminating",
    "PathAlgebra",
    "Quiver",
    "algebra_stalk",
    "b_approximation",
    "cone",
    "decompose",
    "hom_space",
    "in_A_bar",
    "in_B",
    "make_field",
    "parse_element",
    "r_approximation",
    "suspend",
]
