"""Exact term generators for the Hankel-determinant sequences, plus the builder.

Terms are memoized per sequence; generation is pure, so a term is identical
no matter which batch produced it.  Worker processes fork with (or rebuild)
their own caches.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .matrix import Matrix

TAGS = frozenset({
    "harmonic",      # H^(m)_k, exact rationals (parameter m >= 1)
    "franel",        # sum C(n,k)^3
    "franel_r",      # sum C(n,k)^r (parameter r >= 2)
    "apery_b",       # sum C(n,k)^2 C(n+k,k)
    "apery_A",       # sum C(n,k)^2 C(n+k,k)^2
    "alt4_c",        # sum (-1)^k C(n,k)^4
    "alt_d",         # sum (-1)^k C(n,k)^2 C(2k,k) C(2(n-k),n-k)
    "clf_P",         # 2^n sum C(n,2k) C(2k,k)^2 4^(n-2k)
    "domb_D",        # sum C(n,k)^2 C(2k,k) C(2(n-k),n-k)
    "catalansum_s",  # sum C(n,k)^2 C_k
    "w_seq",         # sum (-1)^k 3^(n-3k) C(n,3k) C(2k,k) C(3k,k)
    "bernoulli",     # B_n, exact rationals
    "euler",         # E_n (secant numbers, odd-index terms vanish)
    "bernoulli_sq",  # B_n^2
    "euler_sq",      # E_n^2
})

RATIONAL_TAGS = frozenset({"harmonic", "bernoulli", "bernoulli_sq"})

_cache: dict[tuple, list] = {}


def catalan(n: int) -> int:
    """Catalan number C(2n,n)/(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def _harmonic_next(prev: list[Fraction], n: int, m: int) -> Fraction:
    if n == 0:
        return Fraction(0)
    return prev[n - 1] + Fraction(1, n ** m)


def _bernoulli_next(prev: list[Fraction], n: int) -> Fraction:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, B_0 = 1
    if n == 0:
        return Fraction(1)
    s = sum(comb(n + 1, k) * prev[k] for k in range(n))
    return -s / (n + 1)


def _euler_next(prev: list[int], n: int) -> int:
    # secant-number recurrence: sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0, odd terms 0
    if n == 0:
        return 1
    if n % 2:
        return 0
    return -sum(comb(n, 2 * k) * prev[2 * k] for k in range(n // 2))


def _term_at(key: tuple, n: int, prev: list):
    tag = key[0]
    if tag == "harmonic":
        return _harmonic_next(prev, n, key[1])
    if tag == "franel":
        return sum(comb(n, k) ** 3 for k in range(n + 1))
    if tag == "franel_r":
        r = key[1]
        return sum(comb(n, k) ** r for k in range(n + 1))
    if tag == "apery_b":
        return sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1))
    if tag == "apery_A":
        return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))
    if tag == "alt4_c":
        return sum((-1) ** k * comb(n, k) ** 4 for k in range(n + 1))
    if tag == "alt_d":
        return sum((-1) ** k * comb(n, k) ** 2 * comb(2 * k, k) * comb(2 * (n - k), n - k)
                   for k in range(n + 1))
    if tag == "clf_P":
        return 2 ** n * sum(comb(n, 2 * k) * comb(2 * k, k) ** 2 * 4 ** (n - 2 * k)
                            for k in range(n // 2 + 1))
    if tag == "domb_D":
        return sum(comb(n, k) ** 2 * comb(2 * k, k) * comb(2 * (n - k), n - k)
                   for k in range(n + 1))
    if tag == "catalansum_s":
        return sum(comb(n, k) ** 2 * catalan(k) for k in range(n + 1))
    if tag == "w_seq":
        return sum((-1) ** k * 3 ** (n - 3 * k) * comb(n, 3 * k) * comb(2 * k, k) * comb(3 * k, k)
                   for k in range(n // 3 + 1))
    if tag == "bernoulli":
        return _bernoulli_next(prev, n)
    if tag == "euler":
        return _euler_next(prev, n)
    raise ValueError(f"unknown sequence tag {tag!r}")


def _seq_key(tag: str, m: int, r: int) -> tuple:
    if tag not in TAGS:
        raise ValueError(f"unknown sequence tag {tag!r}")
    if tag == "harmonic":
        if m < 1:
            raise ValueError("harmonic order m must be >= 1")
        return (tag, m)
    if tag == "franel_r":
        if r < 2:
            raise ValueError("franel order r must be >= 2")
        return (tag, r)
    return (tag,)


def term(tag: str, n: int, *, m: int = 1, r: int = 2):
    """Exact n-th term (n >= 0) of the named sequence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if tag == "bernoulli_sq":
        return term("bernoulli", n) ** 2
    if tag == "euler_sq":
        return term("euler", n) ** 2
    key = _seq_key(tag, m, r)
    lst = _cache.setdefault(key, [])
    while len(lst) <= n:
        lst.append(_term_at(key, len(lst), lst))
    return lst[n]


def terms(tag: str, count: int, *, m: int = 1, r: int = 2) -> list:
    """The first `count` terms, index 0 upward."""
    return [term(tag, n, m=m, r=r) for n in range(count)]


def hankel(tag: str, n: int, transform: str = "id", *, m: int = 1, r: int = 2) -> Matrix:
    """(n+1) x (n+1) matrix with entry (i, j) = a_{i+j}, optionally squared."""
    if transform not in ("id", "square"):
        raise ValueError("transform must be 'id' or 'square'")
    ts = terms(tag, 2 * n + 1, m=m, r=r)
    if transform == "square":
        ts = [t * t for t in ts]
    rational = tag in RATIONAL_TAGS
    return Matrix.build(0, n, lambda i, j: ts[i + j], rational=rational)
