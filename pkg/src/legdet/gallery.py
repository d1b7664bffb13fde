"""Constructors for the concrete Legendre-symbol matrix families.

Index ranges are part of each constructor's identity: half the subtlety in
these determinants is whether the range starts at 0 or 1, so every Matrix
records its index_base.  For p = 3 the half-range families are 1x1 (range
{1}) or 2x2 (range {0, 1}); the definitions handle that without special
cases.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import OddPrime, half_factorial_mod, symbol_table
from .matrix import Matrix


def _p(p) -> int:
    return int(OddPrime(p))


def _sym(p: int, fn, lo: int, hi: int) -> Matrix:
    chi = symbol_table(p)
    return Matrix.build(lo, hi, lambda i, j: chi[fn(i, j) % p])


def linear_matrix(p, d: int = 1, c: int = 0, lo: int = 0, hi: int | None = None) -> Matrix:
    """((i + d*j + c) / p) over [lo, hi]^2; the generic linear-argument family."""
    p = _p(p)
    if hi is None:
        hi = (p - 1) // 2
    return _sym(p, lambda i, j: i + d * j + c, lo, hi)


def circulant_full(p) -> Matrix:
    """((j - i) / p), 0 <= i, j <= p-1."""
    p = _p(p)
    return _sym(p, lambda i, j: j - i, 0, p - 1)


def carlitz(p) -> Matrix:
    """((i - j) / p), 1 <= i, j <= p-1."""
    p = _p(p)
    return _sym(p, lambda i, j: i - j, 1, p - 1)


def shifted_full(p, d: int, include_zero: bool = False) -> Matrix:
    """((i + d*j) / p) over 1..p-1, or 0..p-1 with include_zero."""
    p = _p(p)
    if d % p == 0:
        raise ValueError("d must not be divisible by p")
    return _sym(p, lambda i, j: i + d * j, 0 if include_zero else 1, p - 1)


def evil(p) -> Matrix:
    """((j - i) / p), 0 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: j - i, 0, (p - 1) // 2)


def chapman_half(p) -> Matrix:
    """((j - i) / p), 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: j - i, 1, (p - 1) // 2)


def r_matrix(p, d: int, c: int = 0) -> Matrix:
    """((i + d*j + c) / p), 0 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: i + d * j + c, 0, (p - 1) // 2)


def s_matrix(p, d: int) -> Matrix:
    """((i^2 + d*j^2) / p), 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: i * i + d * j * j, 1, (p - 1) // 2)


def t_matrix(p, d: int, c: int = 0) -> Matrix:
    """((i^2 + d*j^2 + c) / p), 0 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: i * i + d * j * j + c, 0, (p - 1) // 2)


def sc_matrix(p, d: int, c: int) -> Matrix:
    """((i^2 + d*j^2 + c) / p), 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    return _sym(p, lambda i, j: i * i + d * j * j + c, 1, (p - 1) // 2)


def quadform_full(p, c: int, d: int, include_zero: bool = False) -> Matrix:
    """((i^2 + c*i*j + d*j^2) / p) over 1..p-1, or 0..p-1 with include_zero."""
    p = _p(p)
    return _sym(p, lambda i, j: i * i + c * i * j + d * j * j,
                0 if include_zero else 1, p - 1)


def weighted_linear(p, sign: str) -> Matrix:
    """(i+j)((i+j)/p) for sign '+', (j-i)((j-i)/p) for sign '-', 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    chi = symbol_table(p)
    if sign == "+":
        fn = lambda i, j: (i + j) * chi[(i + j) % p]
    elif sign == "-":
        fn = lambda i, j: (j - i) * chi[(j - i) % p]
    else:
        raise ValueError("sign must be '+' or '-'")
    return Matrix.build(1, (p - 1) // 2, fn)


def weighted_quadratic(p) -> Matrix:
    """(i^2 + j^2)((i^2 + j^2)/p), 0 <= i, j <= (p-1)/2."""
    p = _p(p)
    chi = symbol_table(p)
    return Matrix.build(0, (p - 1) // 2,
                        lambda i, j: (i * i + j * j) * chi[(i * i + j * j) % p])


def recip_linear(p) -> Matrix:
    """((i+j)/p) / (i+j) as exact rationals, 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    chi = symbol_table(p)
    return Matrix.build(1, (p - 1) // 2,
                        lambda i, j: Fraction(chi[(i + j) % p], i + j), rational=True)


def recip_squares(p) -> Matrix:
    """1 / (i^2 + j^2) as exact rationals, 1 <= i, j <= (p-1)/2."""
    p = _p(p)
    return Matrix.build(1, (p - 1) // 2,
                        lambda i, j: Fraction(1, i * i + j * j), rational=True)


def recip_hexform(p, upper: int | None = None) -> Matrix:
    """1 / (i^2 - i*j + j^2), 1 <= i, j <= upper, for upper in {(p-1)/2, p-1}.

    Requires p = 5 (mod 6), which keeps every i^2 - i*j + j^2 invertible mod p
    for the congruence checks downstream.
    """
    p = _p(p)
    if p % 6 != 5:
        raise ValueError("requires p = 5 (mod 6)")
    if upper is None:
        upper = (p - 1) // 2
    if upper not in ((p - 1) // 2, p - 1):
        raise ValueError("upper must be (p-1)/2 or p-1")
    return Matrix.build(1, upper,
                        lambda i, j: Fraction(1, i * i - i * j + j * j), rational=True)


def halffact_matrix(p) -> Matrix:
    """((i^2 - w*j) / p), 1 <= i, j <= (p-1)/2, with w = ((p-1)/2)! mod p."""
    p = _p(p)
    w = half_factorial_mod(p, p)
    return _sym(p, lambda i, j: i * i - w * j, 1, (p - 1) // 2)


# CLI name -> (builder taking (p, d, c), required params, optional params)
FAMILIES = {
    "circulant": (lambda p, d, c: circulant_full(p), (), ()),
    "carlitz": (lambda p, d, c: carlitz(p), (), ()),
    "shifted": (lambda p, d, c: shifted_full(p, d), ("d",), ()),
    "shifted0": (lambda p, d, c: shifted_full(p, d, include_zero=True), ("d",), ()),
    "evil": (lambda p, d, c: evil(p), (), ()),
    "chapman": (lambda p, d, c: chapman_half(p), (), ()),
    "r": (lambda p, d, c: r_matrix(p, d, c or 0), ("d",), ("c",)),
    "s": (lambda p, d, c: s_matrix(p, d), ("d",), ()),
    "t": (lambda p, d, c: t_matrix(p, d, c or 0), ("d",), ("c",)),
    "sc": (lambda p, d, c: sc_matrix(p, d, c), ("d", "c"), ()),
    "quadform": (lambda p, d, c: quadform_full(p, c, d), ("d", "c"), ()),
    "quadform0": (lambda p, d, c: quadform_full(p, c, d, include_zero=True), ("d", "c"), ()),
    "dplus": (lambda p, d, c: weighted_linear(p, "+"), (), ()),
    "dminus": (lambda p, d, c: weighted_linear(p, "-"), (), ()),
    "wquad": (lambda p, d, c: weighted_quadratic(p), (), ()),
    "recip-linear": (lambda p, d, c: recip_linear(p), (), ()),
    "recip-squares": (lambda p, d, c: recip_squares(p), (), ()),
    "recip-hex": (lambda p, d, c: recip_hexform(p), (), ()),
    "recip-hex-full": (lambda p, d, c: recip_hexform(p, p - 1), (), ()),
    "halffact": (lambda p, d, c: halffact_matrix(p), (), ()),
}
