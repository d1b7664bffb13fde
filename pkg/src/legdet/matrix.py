"""Exact determinants of integer and rational matrices.

Three routes, cross-checked in the tests:
  - fraction-free (Bareiss) elimination, the reference algorithm;
  - a multi-modular CRT path certified by the Hadamard bound (the fast path);
  - direct elimination mod a prime for congruence work.

Rational matrices are cleared to integers row by row (LCM of denominators),
so one integer elimination kernel serves everything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

from . import kernel
from .arith import is_prime, inv_mod

FRACTION_FREE = "fraction-free"
MULTI_MODULAR = "multi-modular"
MODULAR_REDUCTION = "modular-reduction"


@dataclass(frozen=True)
class Matrix:
    """Dense square-or-rectangular matrix of exact ints or Fractions.

    index_base records the index origin the entries were defined with (0 or 1),
    purely so reports can print coordinates matching the defining formula.
    """

    rows: int
    cols: int
    entries: tuple
    rational: bool = False
    index_base: int = 0

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def build(cls, lo: int, hi: int, fn: Callable[[int, int], object], *,
              rational: bool = False) -> "Matrix":
        """Square matrix with entry (i, j) = fn(i, j) for lo <= i, j <= hi."""
        n = hi - lo + 1
        if n < 0:
            raise ValueError("empty index range")
        if rational:
            ent = tuple(Fraction(fn(i, j)) for i in range(lo, hi + 1) for j in range(lo, hi + 1))
        else:
            ent = tuple(fn(i, j) for i in range(lo, hi + 1) for j in range(lo, hi + 1))
        return cls(n, n, ent, rational=rational, index_base=lo)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], *, rational: bool = False,
                  index_base: int = 0) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        ent = tuple(Fraction(x) if rational else x for row in rows for x in row)
        return cls(r, c, ent, rational=rational, index_base=index_base)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int):
        """Entry at 0-based storage position (i, j)."""
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        ent = tuple(self.entries[j * self.cols + i]
                    for i in range(self.cols) for j in range(self.rows))
        return Matrix(self.cols, self.rows, ent, rational=self.rational,
                      index_base=self.index_base)


@dataclass(frozen=True)
class DetResult:
    value: object  # int or Fraction
    method: str


def _require_square(m: Matrix):
    if not m.is_square:
        raise ValueError("determinant needs a square matrix")


def _require_integer(m: Matrix):
    if m.rational:
        raise TypeError("integer matrix required")


def _det_bareiss(a: list[list[int]]) -> int:
    """Fraction-free elimination; all intermediate values are exact minors."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pkk * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * a[-1][-1]


def _rows_cleared(m: Matrix) -> tuple[list[list[int]], int]:
    """Integer rows and the product of the per-row denominator LCMs."""
    rows = []
    scale = 1
    for i in range(m.rows):
        row = m.row_list(i)
        l = math.lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * l) for x in row])
        scale *= l
    return rows, scale


def det_exact(m: Matrix):
    """Exact determinant by fraction-free elimination; Fraction for rational input."""
    _require_square(m)
    if m.rational:
        rows, scale = _rows_cleared(m)
        return Fraction(_det_bareiss(rows), scale)
    return _det_bareiss(m.to_rows())

# ---------------------------------------------------------------------------
# Multi-modular path

# Word-size CRT moduli, sieved downward from 2**31 so residue products fit in
# int64.  The list is deterministic; it only ever grows.
_CRT_PRIMES: list[int] = []
_next_candidate = (1 << 31) - 1


def _crt_prime(i: int) -> int:
    global _next_candidate
    while len(_CRT_PRIMES) <= i:
        while not is_prime(_next_candidate):
            _next_candidate -= 2
        _CRT_PRIMES.append(_next_candidate)
        _next_candidate -= 2
    return _CRT_PRIMES[i]


def _crt_balanced(residues: list[int], primes: list[int]) -> int:
    """Combine residues into the balanced representative of (-M/2, M/2]."""
    x = 0
    mod = 1
    for r, q in zip(residues, primes):
        t = (r - x) % q * inv_mod(mod % q, q) % q
        x += mod * t
        mod *= q
    if 2 * x > mod:
        x -= mod
    return x


def hadamard_bound(m: Matrix) -> int:
    """Row-norm Hadamard bound on |det|; 0 means a zero row (so det = 0)."""
    bound = 1
    for i in range(m.rows):
        s = sum(x * x for x in m.row_list(i))
        if s == 0:
            return 0
        bound *= isqrt(s) + 1
    return bound


def det_multimodular(m: Matrix) -> int:
    """Exact integer determinant via determinants mod word-size primes + CRT.

    Moduli are accumulated until their product exceeds twice the Hadamard
    bound, then the combined residue is lifted to a signed integer.
    """
    _require_square(m)
    _require_integer(m)
    if m.rows == 0:
        return 1
    bound = hadamard_bound(m)
    if bound == 0:
        return 0
    target = 2 * bound
    residues: list[int] = []
    primes: list[int] = []
    prod = 1
    i = 0
    ent = m.entries
    n = m.rows
    while prod <= target:
        q = _crt_prime(i)
        residues.append(kernel.det_mod_prime([e % q for e in ent], n, q))
        primes.append(q)
        prod *= q
        i += 1
    return _crt_balanced(residues, primes)


def det_int_entries(entries, n: int, entry_bound: int) -> int:
    """Exact determinant for small-entry int64 buffers (no per-prime reduction).

    entry_bound is an upper bound on |entry|; the worst-case Hadamard bound
    (n * entry_bound**2)**(n/2) certifies the CRT reconstruction.
    """
    if n == 0:
        return 1
    target = 2 * (isqrt((n * entry_bound * entry_bound) ** n) + 1)
    residues: list[int] = []
    primes: list[int] = []
    prod = 1
    i = 0
    while prod <= target:
        q = _crt_prime(i)
        residues.append(kernel.det_mod_prime(entries, n, q))
        primes.append(q)
        prod *= q
        i += 1
    return _crt_balanced(residues, primes)


def det_rational(m: Matrix) -> Fraction:
    """Exact determinant of a rational matrix via row clearing + the CRT path."""
    _require_square(m)
    rows, scale = _rows_cleared(m) if m.rational else (m.to_rows(), 1)
    flat = Matrix(m.rows, m.cols, tuple(x for row in rows for x in row))
    return Fraction(det_multimodular(flat), scale)


def det_mod(m: Matrix, modulus: int) -> int:
    """det(m) reduced into [0, modulus).

    Word-size prime modulus: direct in-place elimination with pivot search.
    Composite modulus (p**2 in the congruence checks): elimination can pivot
    on a non-unit, so the determinant is computed exactly and reduced; the
    same exact route serves primes beyond the elimination kernel's word size.
    """
    _require_square(m)
    _require_integer(m)
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if modulus < 1 << 31 and is_prime(modulus):
        return kernel.det_mod_prime([e % modulus for e in m.entries], m.rows, modulus)
    return det_multimodular(m) % modulus


def char_poly_at(m: Matrix, x: int) -> int:
    """det(x*I - m), exact."""
    _require_square(m)
    _require_integer(m)
    n = m.rows
    ent = tuple((x if i == j else 0) - m.entries[i * n + j]
                for i in range(n) for j in range(n))
    return det_multimodular(Matrix(n, n, ent))


def determinant(m: Matrix, method: str = "auto", modulus: int | None = None) -> DetResult:
    """Determinant with an explicit method tag (the CLI-facing wrapper)."""
    if modulus is not None:
        return DetResult(det_mod(m, modulus), MODULAR_REDUCTION)
    if method == FRACTION_FREE:
        return DetResult(det_exact(m), FRACTION_FREE)
    if method in (MULTI_MODULAR, "auto"):
        if m.rational:
            return DetResult(det_rational(m), MULTI_MODULAR)
        return DetResult(det_multimodular(m), MULTI_MODULAR)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Closed-form determinant oracles

def poly_node_det(coeffs: Sequence, xs: Sequence, ys: Sequence) -> Fraction:
    """Closed form for det P(x_i + y_j) with deg P = n - 1 over n nodes:

        a_{n-1}^n * prod_k C(n-1, k) * prod_{i<j} (x_i - x_j)(y_j - y_i)
    """
    n = len(coeffs)
    if not (len(xs) == len(ys) == n):
        raise ValueError("need as many nodes as coefficients")
    if n == 0:
        return Fraction(1)
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    val = Fraction(coeffs[n - 1]) ** n
    for k in range(n):
        val *= math.comb(n - 1, k)
    for i in range(n):
        for j in range(i + 1, n):
            val *= (xs[i] - xs[j]) * (ys[j] - ys[i])
    return val


def cauchy_det(xs: Sequence, ys: Sequence) -> Fraction:
    """Closed form for det 1/(x_i + y_j):

        prod_{i<j} (x_j - x_i)(y_j - y_i) / prod_{i,j} (x_i + y_j)
    """
    n = len(xs)
    if len(ys) != n:
        raise ValueError("node lists must have equal length")
    if all(isinstance(v, int) for v in xs) and all(isinstance(v, int) for v in ys):
        xs, ys = list(xs), list(ys)  # integer nodes: defer the single division
    else:
        xs = [Fraction(x) for x in xs]
        ys = [Fraction(y) for y in ys]
    num = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= (xs[j] - xs[i]) * (ys[j] - ys[i])
    den = 1
    for x in xs:
        for y in ys:
            s = x + y
            if s == 0:
                raise ValueError("x_i + y_j vanishes; the matrix is undefined")
            den *= s
    return Fraction(num) / Fraction(den)
