"""Real and imaginary quadratic-field invariants: fundamental units, class
numbers, unit-power coordinates, and prime representations by quadratic forms.

Everything is exact integer/rational combinatorics: continued fractions with
integer state triples, reduced-form enumeration for class numbers, bounded
search for form representations.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .arith import OddPrime, legendre_symbol


class FormClassCount(NamedTuple):
    """A class number together with the form discriminant it counts."""

    discriminant: int
    h: int


@dataclass(frozen=True)
class QuadNumber:
    """Element a + b*sqrt(d) of Q(sqrt(d)) with exact rational coordinates."""

    a: Fraction
    b: Fraction
    d: int

    def _wrap(self, other) -> "QuadNumber":
        if isinstance(other, QuadNumber):
            if other.d != self.d:
                raise ValueError("mixed field elements")
            return other
        return QuadNumber(Fraction(other), Fraction(0), self.d)

    def is_integral(self) -> bool:
        """Membership in the ring of integers of Q(sqrt(d)) (d squarefree)."""
        two_a, two_b = 2 * self.a, 2 * self.b
        if two_a.denominator != 1 or two_b.denominator != 1:
            return False
        u, v = int(two_a), int(two_b)
        if self.d % 4 == 1:
            return (u - v) % 2 == 0
        return u % 2 == 0 and v % 2 == 0

    def __add__(self, other):
        o = self._wrap(other)
        return QuadNumber(self.a + o.a, self.b + o.b, self.d)

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __mul__(self, other):
        o = self._wrap(other)
        out = QuadNumber(self.a * o.a + self.d * self.b * o.b,
                         self.a * o.b + self.b * o.a, self.d)
        # products of ring integers must stay ring integers
        if self.d % 4 == 1 and self.is_integral() and o.is_integral():
            assert out.is_integral(), f"integrality lost multiplying {self} by {o}"
        return out

    def __pow__(self, e: int) -> "QuadNumber":
        if e < 0:
            raise ValueError("exponent must be >= 0")
        out = QuadNumber(Fraction(1), Fraction(0), self.d)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def compare(self, q) -> int:
        """Sign of (a + b*sqrt(d)) - q for rational q, decided exactly."""
        s = self.a - Fraction(q)
        b = self.b
        if b == 0:
            return (s > 0) - (s < 0)
        if b > 0:
            if s >= 0:
                return 1
            return (self.d * b * b > s * s) - (self.d * b * b < s * s)
        if s <= 0:
            return -1
        return (s * s > self.d * b * b) - (s * s < self.d * b * b)

    def __str__(self):
        def fr(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return f"{fr(self.a)} + {fr(self.b)}*sqrt({self.d})"


def pell_fundamental(n: int) -> tuple[int, int]:
    """Smallest (x, y), x, y >= 1, with x^2 - n*y^2 = +-1, for nonsquare n >= 2.

    Continued fraction of sqrt(n) with exact integer state (m, d, a); the
    period-end convergent is the fundamental solution.
    """
    a0 = isqrt(n)
    if a0 * a0 == n:
        raise ValueError("n must not be a square")
    m, d, a = 0, 1, a0
    h_prev, k_prev = 1, 0
    h, k = a0, 1
    seen = {}
    step = 0
    while True:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        state = (m, d)
        if state in seen:
            break
        seen[state] = step
        step += 1
        if a == 2 * a0:
            break
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    return h, k


def fundamental_unit(p: int) -> QuadNumber:
    """Smallest unit > 1 of the ring of integers of Q(sqrt(p)), p prime.

    The continued fraction of sqrt(p) gives the least (x, y) with
    x^2 - p*y^2 = +-1.  For p = 1 (mod 4) the ring contains half-integers, so
    the smaller candidates (u + v*sqrt(p))/2 with u^2 - p*v^2 = +-4 and u, v
    odd are checked first; if one exists, its cube is the (x, y) unit, which
    bounds the search for v at the cube-root scale.
    """
    if p != 2:
        p = int(OddPrime(p))
    x1, y1 = pell_fundamental(p)
    if p % 4 == 1:
        vb = 1
        while p * vb ** 3 < 8 * y1:
            vb += 1
        for v in range(1, vb + 2, 2):
            for s in (-4, 4):
                t = p * v * v + s
                if t <= 0:
                    continue
                u = isqrt(t)
                if u * u == t and u % 2 == 1:
                    return QuadNumber(Fraction(u, 2), Fraction(v, 2), p)
    return QuadNumber(Fraction(x1), Fraction(y1), p)


def _divisors(n: int) -> list[int]:
    out = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            if f != n // f:
                out.append(n // f)
        f += 1
    return out


def _reduced_indefinite_forms(disc: int) -> set[tuple[int, int, int]]:
    """All reduced forms (a, b, c) of positive nonsquare discriminant disc:
    b > 0 and sqrt(disc) - b < 2|a| < sqrt(disc) + b."""
    forms = set()
    s = isqrt(disc)
    for b in range(1, s + 1):
        if (disc - b * b) % 4:
            continue
        n4 = (disc - b * b) // 4  # = -a*c > 0
        for a in _divisors(n4):
            for aa in (a, -a):
                if disc >= (2 * a + b) ** 2:
                    continue
                if 2 * a > b and (2 * a - b) ** 2 >= disc:
                    continue
                forms.add((aa, b, -n4 // aa))
    return forms


def _rho(form: tuple[int, int, int], disc: int, s: int) -> tuple[int, int, int]:
    """Reduction/neighbor step on reduced indefinite forms."""
    _, b, c = form
    w = 2 * abs(c)
    lo = s - w + 1
    r = lo + ((-b) - lo) % w
    return (c, r, (r * r - disc) // (4 * c))


def narrow_class_number(disc: int) -> int:
    """Number of cycles of reduced indefinite forms = narrow class number."""
    forms = _reduced_indefinite_forms(disc)
    s = isqrt(disc)
    seen: set[tuple[int, int, int]] = set()
    cycles = 0
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        for _ in range(len(forms) + 1):
            g = _rho(g, disc, s)
            if g == f:
                break
            seen.add(g)
        else:
            raise RuntimeError(f"reduction cycle did not close for {f}")
        seen.add(f)
    return cycles


def real_form_class_count(p: int) -> FormClassCount:
    """h(p) for the real quadratic field Q(sqrt(p)), by form-cycle counting.

    Cycle counting gives the narrow class number; it equals h(p) when the
    fundamental unit has norm -1 and 2*h(p) when it has norm +1.
    """
    if p != 2:
        p = int(OddPrime(p))
    disc = p if p % 4 == 1 else 4 * p
    hplus = narrow_class_number(disc)
    if fundamental_unit(p).norm() == -1:
        return FormClassCount(disc, hplus)
    assert hplus % 2 == 0
    return FormClassCount(disc, hplus // 2)


def class_number_real(p: int) -> int:
    return real_form_class_count(p).h


def imag_form_class_count(p: int) -> FormClassCount:
    """h(-p) for Q(sqrt(-p)), p = 3 (mod 4): count of reduced positive forms.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    p = int(OddPrime(p))
    if p % 4 != 3:
        raise ValueError("requires p = 3 (mod 4)")
    count = 0
    a = 1
    while 3 * a * a <= p:  # |b| <= a <= c forces 3a^2 <= p
        for b in range(-a + 1, a + 1):
            if b % 2 == 0:  # need b odd: b^2 + p = 0 (mod 4) with p = 3 (mod 4)
                continue
            num = b * b + p
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c or a == abs(b)):
                continue
            count += 1
        a += 1
    return FormClassCount(-p, count)


def class_number_imag(p: int) -> int:
    return imag_form_class_count(p).h


def unit_power_coeffs(p: int, exponent: int) -> QuadNumber:
    """fundamental_unit(p) ** exponent, by exact binary powering."""
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    return fundamental_unit(p) ** exponent


def ap_bp(p: int) -> tuple[Fraction, Fraction]:
    """Coordinates (a_p, b_p) of the h(p)-th power of the fundamental unit."""
    u = unit_power_coeffs(p, class_number_real(p))
    return u.a, u.b


def rp_sp(p: int) -> tuple[int, int]:
    """Integer coordinates (r_p, s_p) of the (2 - (2/p)) h(p)-th unit power."""
    e = (2 - legendre_symbol(2, p)) * class_number_real(p)
    u = unit_power_coeffs(p, e)
    if u.a.denominator != 1 or u.b.denominator != 1:
        raise ArithmeticError(f"expected integer coordinates, got {u}")
    return int(u.a), int(u.b)


FORM_X2_3Y2 = "x2_3y2"
FORM_4P_X2_27Y2 = "4p_x2_27y2"
NORM_POSITIVE = "positive"
NORM_X_MOD_3 = "x_mod_3"


def represent(p: int, form: str, normalization: str = NORM_POSITIVE):
    """Representation of p (or 4p) by the requested quadratic form, or None.

    For p = 1 (mod 3) both forms represent; for p = 2 (mod 3) neither does
    and None is returned.  normalization selects the sign convention on x:
    NORM_POSITIVE takes x > 0, NORM_X_MOD_3 flips the sign so x = 1 (mod 3).
    y is always reported positive (only x enters the congruences downstream).
    """
    p = int(OddPrime(p))
    if normalization not in (NORM_POSITIVE, NORM_X_MOD_3):
        raise ValueError(f"unknown normalization {normalization!r}")
    if form == FORM_X2_3Y2:
        target, coeff = p, 3
    elif form == FORM_4P_X2_27Y2:
        target, coeff = 4 * p, 27
    else:
        raise ValueError(f"unknown form {form!r}")
    if p % 3 == 2 or (p == 3 and form == FORM_4P_X2_27Y2):
        return None
    for y in range(1, isqrt(target // coeff) + 1):
        t = target - coeff * y * y
        if t < 0:
            break
        x = isqrt(t)
        if x * x == t:
            if normalization == NORM_X_MOD_3 and x % 3 == 2:
                x = -x
            return (x, y)
    return None
