"""Exact Legendre-symbol determinants, Hankel determinants, and a claim verifier."""

from .arith import OddPrime, legendre_symbol, ord_p, prime_range
from .kernel import BACKEND
from .matrix import (
    DetResult,
    Matrix,
    cauchy_det,
    char_poly_at,
    det_exact,
    det_mod,
    det_multimodular,
    determinant,
    poly_node_det,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DetResult",
    "Matrix",
    "OddPrime",
    "cauchy_det",
    "char_poly_at",
    "det_exact",
    "det_mod",
    "det_multimodular",
    "determinant",
    "legendre_symbol",
    "ord_p",
    "poly_node_det",
    "prime_range",
]
