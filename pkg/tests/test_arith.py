import math
from fractions import Fraction

import pytest

from legdet.arith import (
    OddPrime,
    half_factorial_mod,
    inv_mod,
    is_prime,
    least_residue,
    legendre_symbol,
    ord_p,
    pan_sign,
    prime_range,
    rat_mod,
    symbol_table,
    zolotarev_sign,
)


def euler_symbol(a, p):
    """Independent oracle: Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def test_is_prime_basics():
    primes = {2, 3, 5, 7, 11, 13, 97, 65537, 2147483647}
    for n in primes:
        assert is_prime(n)
    for n in (0, 1, 4, 9, 91, 561, 65536, 2147483647 * 3):
        assert not is_prime(n)
    # strong-pseudoprime territory
    assert not is_prime(3215031751)
    assert is_prime(1000000000000066600000000000001)  # Belphegor's prime (fits the bases)


def test_odd_prime_validation():
    assert OddPrime(97) == 97
    for bad in (2, 1, 9, -7, 15):
        with pytest.raises(ValueError):
            OddPrime(bad)


def test_legendre_examples():
    assert legendre_symbol(0, 5) == 0
    assert legendre_symbol(2, 5) == -1
    assert legendre_symbol(-1, 13) == 1


def test_legendre_against_euler_criterion():
    for p in prime_range(3, 200):
        chi = symbol_table(p)
        for a in range(p):
            s = legendre_symbol(a, p)
            assert s == euler_symbol(a, p)
            assert s == chi[a]


def test_legendre_multiplicative_and_period():
    for p in prime_range(3, 200):
        chi = symbol_table(p)
        for a in range(p):
            for b in range(p):
                assert chi[a * b % p] == chi[a] * chi[b]
        assert sum(chi) == 0  # sum over a full period vanishes
    assert legendre_symbol(3 + 7 * 11, 7) == legendre_symbol(3, 7)


def test_least_residue():
    assert least_residue(8, 5) == 3
    assert least_residue(-1, 7) == 6
    assert least_residue(14, 7) == 0


def test_zolotarev_examples_and_theorem():
    assert zolotarev_sign(2, 5) == -1
    assert zolotarev_sign(1, 7) == 1
    assert zolotarev_sign(4, 5) == 1
    for p in prime_range(3, 100):
        for a in range(1, p):
            assert zolotarev_sign(a, p) == legendre_symbol(a, p)
    with pytest.raises(ValueError):
        zolotarev_sign(10, 5)


def test_pan_sign_examples_and_identity():
    assert pan_sign(2, 5) == -1
    assert pan_sign(1, 11) == 1
    # (c/p)^((p+1)/2) with (p+1)/2 even makes every sign +1 for p = 3 (mod 4)
    assert pan_sign(3, 7) == 1
    for p in prime_range(3, 100):
        for c in range(1, p):
            assert pan_sign(c, p) == legendre_symbol(c, p) ** ((p + 1) // 2)
    with pytest.raises(ValueError):
        pan_sign(7, 7)


def test_half_factorial():
    assert half_factorial_mod(5, 5) == 2
    assert half_factorial_mod(13, 13) == 5
    assert half_factorial_mod(7, 7) == 6
    assert half_factorial_mod(7, 49) == 6
    with pytest.raises(ValueError):
        half_factorial_mod(7, 14)


def test_wilson_square_sign():
    # (((p-1)/2)!)^2 = -1 (p = 1 mod 4) or +1 (p = 3 mod 4), through p <= 500
    for p in prime_range(3, 500):
        hf = half_factorial_mod(p, p)
        want = (-1 if p % 4 == 1 else 1) % p
        assert hf * hf % p == want


def test_half_factorial_symbol_is_symbol_of_two():
    for p in prime_range(5, 500):
        if p % 4 == 1:
            assert legendre_symbol(half_factorial_mod(p, p), p) == legendre_symbol(2, p)


def test_nonresidue_product_congruence():
    # prod_{x=1}^{(p-1)/2} (x^2 - d) = (-1)^((p+1)/2) * 2 (mod p) for (d/p) = -1
    for p in prime_range(3, 200):
        chi = symbol_table(p)
        want = (-1) ** ((p + 1) // 2) * 2 % p
        for d in range(1, p):
            if chi[d] != -1:
                continue
            prod = 1
            for x in range(1, (p - 1) // 2 + 1):
                prod = prod * (x * x - d) % p
            assert prod == want


def test_nonresidue_reciprocal_sums():
    # sum 1/(x^2-d) = 1/(4d) and sum 1/(x^2-d)^2 = -5/(16 d^2) (mod p)
    for p in prime_range(3, 200):
        chi = symbol_table(p)
        for d in range(1, p):
            if chi[d] != -1:
                continue
            s1 = s2 = 0
            for x in range(1, (p - 1) // 2 + 1):
                v = inv_mod(x * x - d, p)
                s1 = (s1 + v) % p
                s2 = (s2 + v * v) % p
            assert s1 == inv_mod(4 * d, p)
            assert s2 == -5 * inv_mod(16 * d * d % p, p) % p


def test_ord_p():
    assert ord_p(50, 5) == 2
    assert ord_p(Fraction(3, 25), 5) == -2
    assert ord_p(0, 7) == math.inf
    assert ord_p(Fraction(7, 3), 7) == 1
    assert ord_p(Fraction(-98, 5), 7) == 2


def test_prime_range():
    assert prime_range(3, 12) == [3, 5, 7, 11]
    assert prime_range(14, 16) == []
    assert prime_range(97, 101) == [97, 101]
    with pytest.raises(ValueError):
        prime_range(2, 10)


def test_inv_and_rat_mod():
    assert inv_mod(3, 7) == 5
    with pytest.raises(ValueError):
        inv_mod(14, 7)
    assert rat_mod(Fraction(3, 2), 13) == 8
    assert rat_mod(-5, 13) == 8
    with pytest.raises(ValueError):
        rat_mod(Fraction(1, 7), 49)
