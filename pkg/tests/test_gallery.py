from fractions import Fraction
from math import isqrt

import pytest

from legdet import gallery
from legdet.arith import legendre_symbol, prime_range, symbol_table
from legdet.matrix import det_exact, det_multimodular

S_1_11 = [[-1, 1, -1, -1, 1],
          [1, -1, -1, 1, -1],
          [-1, -1, -1, 1, 1],
          [-1, 1, 1, -1, -1],
          [1, -1, 1, -1, -1]]

S_2_13 = [[1, 1, -1, -1, 1, -1],
          [-1, 1, 1, 1, -1, -1],
          [-1, 1, 1, -1, -1, 1],
          [-1, -1, -1, 1, 1, 1],
          [1, -1, 1, -1, 1, -1],
          [1, -1, -1, 1, -1, 1]]


def test_printed_golden_matrices():
    assert gallery.s_matrix(11, 1).to_rows() == S_1_11
    assert gallery.s_matrix(13, 2).to_rows() == S_2_13
    assert det_multimodular(gallery.s_matrix(11, 1)) == -16
    assert det_multimodular(gallery.s_matrix(13, 2)) == 0


def test_shapes_and_index_bases():
    p = 13
    assert gallery.circulant_full(p).rows == p
    assert gallery.circulant_full(p).index_base == 0
    assert gallery.carlitz(p).rows == p - 1
    assert gallery.carlitz(p).index_base == 1
    assert gallery.evil(p).rows == (p + 1) // 2
    assert gallery.chapman_half(p).rows == (p - 1) // 2
    assert gallery.r_matrix(p, 1).index_base == 0
    assert gallery.s_matrix(p, 1).index_base == 1
    assert gallery.quadform_full(p, 1, 1).rows == p - 1
    assert gallery.quadform_full(p, 1, 1, include_zero=True).rows == p
    # p = 3 half-ranges collapse to 1x1 / 2x2
    assert gallery.s_matrix(3, 1).rows == 1
    assert gallery.evil(3).rows == 2


def test_entry_formulas_spot():
    p = 17
    chi = symbol_table(p)
    m = gallery.sc_matrix(p, 3, 5)
    for i in range(1, (p - 1) // 2 + 1):
        for j in range(1, (p - 1) // 2 + 1):
            assert m.entry(i - 1, j - 1) == chi[(i * i + 3 * j * j + 5) % p]
    w = gallery.weighted_linear(p, "-")
    for i in range(1, (p - 1) // 2 + 1):
        for j in range(1, (p - 1) // 2 + 1):
            assert w.entry(i - 1, j - 1) == (j - i) * chi[(j - i) % p]
    h = gallery.recip_hexform(p, p - 1)
    assert h.entry(0, 0) == Fraction(1, 1)
    assert h.entry(2, 4) == Fraction(1, 9 - 15 + 25)


def test_parameter_rejection():
    with pytest.raises(ValueError):
        gallery.shifted_full(7, 14)
    with pytest.raises(ValueError):
        gallery.recip_hexform(13)  # 13 = 1 (mod 6)
    with pytest.raises(ValueError):
        gallery.s_matrix(9, 1)
    with pytest.raises(ValueError):
        gallery.weighted_linear(7, "x")
    with pytest.raises(ValueError):
        gallery.recip_hexform(11, 7)


def test_full_range_dets():
    # ((i+dj)/p) over 0..p-1 vanishes; over 1..p-1 it is (-d/p) p^((p-3)/2)
    for p in prime_range(3, 23):
        assert det_multimodular(gallery.circulant_full(p)) == 0
        for d in range(1, p):
            assert det_multimodular(gallery.shifted_full(p, d, include_zero=True)) == 0
            want = legendre_symbol(-d, p) * p ** ((p - 3) // 2)
            assert det_multimodular(gallery.shifted_full(p, d)) == want
    assert det_exact(gallery.carlitz(5)) == 5
    assert det_exact(gallery.carlitz(7)) == 49


def test_r_matrix_small_value():
    assert det_exact(gallery.r_matrix(5, 1, 0)) == 2


def test_reflection_identities():
    # shifting the half-range (i+j-1) window reflects onto the (i+j) windows
    for p in prime_range(3, 60):
        half = (p - 1) // 2
        lhs1 = det_multimodular(gallery.linear_matrix(p, 1, -1, 1, half))
        rhs1 = legendre_symbol(-1, p) * det_multimodular(gallery.linear_matrix(p, 1, 0, 1, half))
        assert lhs1 == rhs1
        lhs2 = det_multimodular(gallery.linear_matrix(p, 1, -1, 1, half + 1))
        assert lhs2 == det_multimodular(gallery.r_matrix(p, 1, 0))


def test_skew_symmetric_even_order_square():
    # the (j-i)((j-i)/p) matrix is skew-symmetric of even order for p = 1 (mod 4)
    for p in prime_range(5, 61):
        if p % 4 != 1:
            continue
        m = gallery.weighted_linear(p, "-")
        assert all(m.entry(i, j) == -m.entry(j, i) for i in range(m.rows)
                   for j in range(m.rows))
        d = det_multimodular(m)
        assert d >= 0 and isqrt(d) ** 2 == d


def test_halffact_matrix_uses_reduced_factorial():
    p = 11
    chi = symbol_table(p)
    m = gallery.halffact_matrix(p)
    from legdet.arith import half_factorial_mod

    w = half_factorial_mod(p, p)
    for i in range(1, 6):
        for j in range(1, 6):
            assert m.entry(i - 1, j - 1) == chi[(i * i - w * j) % p]


def test_family_table_covers_cli_names():
    # p = 11 satisfies every family's precondition (11 = 5 mod 6 for recip-hex)
    for name, (builder, _required, _optional) in gallery.FAMILIES.items():
        m = builder(11, 2, 1)
        assert m.rows >= 1, name
