"""Modular and Legendre-symbol arithmetic consumed by every other module.

Everything here is a pure function of its arguments; there is no shared
mutable state, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24 (covers 64-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic primality check for inputs up to 64 bits."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    if n < _TRIAL_LIMIT:
        f = 17
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class OddPrime(int):
    """An int validated to be an odd prime (>= 3) at construction."""

    def __new__(cls, value):
        v = int(value)
        if v < 3 or v % 2 == 0 or not is_prime(v):
            raise ValueError(f"{value!r} is not an odd prime")
        return super().__new__(cls, v)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via the binary Jacobi algorithm."""
    a %= p
    if a == 0:
        return 0
    result = 1
    n = p
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def symbol_table(p: int) -> list[int]:
    """chi[r] = (r/p) for r in 0..p-1, built by marking the nonzero squares."""
    chi = [-1] * p
    chi[0] = 0
    for x in range(1, (p - 1) // 2 + 1):
        chi[x * x % p] = 1
    return chi


def least_residue(m: int, p: int) -> int:
    """Least nonnegative residue of m modulo p."""
    return m % p


def _perm_sign(perm: list[int]) -> int:
    """Sign of a permutation given as 0-based images; computed by cycle counting."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def zolotarev_sign(a: int, p: int) -> int:
    """Sign of j -> aj mod p on {1,...,p-1}; equals (a/p)."""
    if a % p == 0:
        raise ValueError("a must not be divisible by p")
    perm = [(a * j) % p - 1 for j in range(1, p)]
    return _perm_sign(perm)


def pan_sign(c: int, p: int) -> int:
    """Sign of the folded multiplication map on {1,...,(p-1)/2}.

    sigma_c(j) is the unique r in 1..(p-1)/2 with cj == r or -r (mod p);
    its sign equals (c/p)^((p+1)/2).
    """
    if c % p == 0:
        raise ValueError("c must not be divisible by p")
    half = (p - 1) // 2
    perm = []
    for j in range(1, half + 1):
        r = (c * j) % p
        if r > half:
            r = p - r
        perm.append(r - 1)
    return _perm_sign(perm)


def half_factorial_mod(p: int, modulus: int) -> int:
    """((p-1)/2)! reduced modulo p or p**2."""
    if modulus not in (p, p * p):
        raise ValueError("modulus must be p or p**2")
    out = 1
    for k in range(2, (p - 1) // 2 + 1):
        out = out * k % modulus
    return out


def ord_p(x, p: int):
    """p-adic order of an integer or Fraction; math.inf for x == 0."""
    if x == 0:
        return math.inf
    if isinstance(x, Fraction):
        num, den = x.numerator, x.denominator
    else:
        num, den = int(x), 1
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v

def prime_range(lo: int, hi: int) -> list[OddPrime]:
    """All odd primes in [lo, hi], ascending."""
    if not 3 <= lo <= hi:
        raise ValueError("need 3 <= lo <= hi")
    out = []
    n = lo | 1  # skip even starting points
    while n <= hi:
        if is_prime(n):
            out.append(OddPrime(n))
        n += 2
    return out


def inv_mod(a: int, m: int) -> int:
    """Inverse of a modulo m; raises ValueError when gcd(a, m) != 1."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def rat_mod(x, m: int) -> int:
    """Reduce an integer or Fraction into [0, m); the denominator must be a unit mod m."""
    if isinstance(x, Fraction):
        return x.numerator % m * inv_mod(x.denominator % m, m) % m
    return int(x) % m
