"""Exact computations for semi-symmetric curvature on 4-dimensional pseudo-Euclidean spaces."""

from .exact import Matrix, Scalar, parse_scalar, symbols
from .space import PseudoSpace

__all__ = ["Matrix", "PseudoSpace", "Scalar", "parse_scalar", "symbols"]
