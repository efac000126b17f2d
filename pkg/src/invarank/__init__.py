"""Exact computation of square-zero Lie algebra bases, induced
representations, and generic-rank bounds on invariant functions."""

from ._gfkernels import BACKEND
from .fields import GF, QQ, field_from_spec
from .matrix import Matrix
from .poly import Poly

__version__ = "0.1.0"

__all__ = ["BACKEND", "GF", "QQ", "Matrix", "Poly", "field_from_spec",
           "__version__"]
