# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: in-place Gaussian elimination mod a word-size prime and
symbol-matrix builders.  legdet._pure carries the reference implementations;
both are cross-checked in the test suite.
"""

from cpython cimport array
import array

KIND_LINEAR = 0
KIND_QUAD = 1
KIND_QUADFORM = 2

# Moduli must stay below 2**31 so products of two residues fit in int64.
DEF MAX_Q = 2147483648


cdef inline long long _mulmod(long long a, long long b, long long q, double qinv) nogil:
    # Floating-point Barrett reduction: the double product has absolute error
    # below 2**9 for q < 2**31, so the quotient estimate is off by at most one.
    cdef long long t = a * b - <long long> (<double> a * <double> b * qinv) * q
    while t < 0:
        t += q
    while t >= q:
        t -= q
    return t


cdef inline long long _invmod(long long a, long long q) nogil:
    # Extended Euclid; q prime and a != 0 mod q.
    cdef long long old_r = a, r = q
    cdef long long old_s = 1, s = 0
    cdef long long quo, tmp
    while r != 0:
        quo = old_r / r
        tmp = old_r - quo * r; old_r = r; r = tmp
        tmp = old_s - quo * s; old_s = s; s = tmp
    old_s %= q
    if old_s < 0:
        old_s += q
    return old_s


def det_mod_prime(entries, Py_ssize_t n, long long q):
    """Determinant mod a prime q of an n x n row-major matrix of int64 entries."""
    if q < 2 or q >= MAX_Q:
        raise ValueError("modulus must satisfy 2 <= q < 2**31")
    if n == 0:
        return 1 % q
    cdef array.array buf
    if isinstance(entries, array.array) and (<array.array> entries).ob_descr.typecode == b'q':
        buf = array.copy(<array.array> entries)
    else:
        buf = array.array('q', entries)
    if len(buf) != n * n:
        raise ValueError("entry count does not match the matrix shape")
    cdef long long[::1] a = buf
    cdef double qinv = 1.0 / <double> q
    cdef Py_ssize_t i, j, k, kn, base, piv
    cdef long long det = 1, pkk, pinv, f, v, t
    with nogil:
        for k in range(n * n):
            v = a[k] % q
            if v < 0:
                v += q
            a[k] = v
        for k in range(n):
            kn = k * n
            piv = -1
            for i in range(k, n):
                if a[i * n + k] != 0:
                    piv = i
                    break
            if piv < 0:
                det = 0
                break
            if piv != k:
                base = piv * n
                for j in range(k, n):
                    t = a[kn + j]; a[kn + j] = a[base + j]; a[base + j] = t
                det = q - det
            pkk = a[kn + k]
            det = _mulmod(det, pkk, q, qinv)
            pinv = _invmod(pkk, q)
            for i in range(k + 1, n):
                base = i * n
                f = a[base + k]
                if f == 0:
                    continue
                f = _mulmod(f, pinv, q, qinv)
                for j in range(k + 1, n):
                    v = a[base + j] - _mulmod(f, a[kn + j], q, qinv)
                    if v < 0:
                        v += q
                    a[base + j] = v
    return det


def build_symbol_entries(int kind, chi_seq, long long p, long long c, long long d,
                         long long lo, long long hi):
    """Row-major symbol matrix over [lo, hi]^2 for one of the three entry shapes."""
    if p >= (1 << 20):
        raise ValueError("p too large for the compiled builder")
    cdef array.array chi_arr
    if isinstance(chi_seq, array.array) and (<array.array> chi_seq).ob_descr.typecode == b'q':
        chi_arr = <array.array> chi_seq
    else:
        chi_arr = array.array('q', chi_seq)
    cdef long long[::1] chi = chi_arr
    if len(chi_arr) != p:
        raise ValueError("chi table must have length p")
    cdef Py_ssize_t n = hi - lo + 1
    cdef array.array out = array.array('q', bytes(8 * n * n))
    cdef long long[::1] o = out
    cdef long long i, j, ii, v, cm = c % p, dm = d % p
    cdef Py_ssize_t pos = 0
    if cm < 0:
        cm += p
    if dm < 0:
        dm += p
    with nogil:
        for i in range(lo, hi + 1):
            ii = i * i
            for j in range(lo, hi + 1):
                if kind == 0:
                    v = (i + dm * j + cm) % p
                elif kind == 1:
                    v = (ii + dm * j * j + cm) % p
                else:
                    v = (ii + cm * i * j + dm * j * j) % p
                o[pos] = chi[v]
                pos += 1
    return out
