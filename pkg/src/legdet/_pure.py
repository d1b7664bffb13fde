"""Pure-Python kernels, API-identical to the compiled module in _native.pyx.

Selected by legdet.kernel when the extension is unavailable or LEGDET_PURE=1.
"""

from __future__ import annotations

from array import array

KIND_LINEAR = 0  # chi[(i + d*j + c) mod p]
KIND_QUAD = 1  # chi[(i*i + d*j*j + c) mod p]
KIND_QUADFORM = 2  # chi[(i*i + c*i*j + d*j*j) mod p]


def det_mod_prime(entries, n: int, q: int) -> int:
    """Determinant mod a prime q of an n x n row-major integer matrix.

    Entries may be any Python ints; they are reduced into [0, q) first.
    """
    if n == 0:
        return 1 % q
    a = [e % q for e in entries]
    det = 1
    for k in range(n):
        kn = k * n
        pivot_row = -1
        for i in range(k, n):
            if a[i * n + k]:
                pivot_row = i
                break
        if pivot_row < 0:
            return 0
        if pivot_row != k:
            pn = pivot_row * n
            a[kn + k:kn + n], a[pn + k:pn + n] = a[pn + k:pn + n], a[kn + k:kn + n]
            det = q - det
        pkk = a[kn + k]
        det = det * pkk % q
        pinv = pow(pkk, -1, q)
        for i in range(k + 1, n):
            base = i * n
            f = a[base + k]
            if f:
                f = f * pinv % q
                for j in range(k + 1, n):
                    a[base + j] = (a[base + j] - f * a[kn + j]) % q
    return det


def build_symbol_entries(kind: int, chi, p: int, c: int, d: int, lo: int, hi: int):
    """Row-major symbol matrix over [lo, hi]^2 for one of the three entry shapes."""
    n = hi - lo + 1
    cm = c % p
    dm = d % p
    out = array("q", bytes(8 * n * n))
    pos = 0
    for i in range(lo, hi + 1):
        ii = i * i
        for j in range(lo, hi + 1):
            if kind == KIND_LINEAR:
                v = (i + dm * j + cm) % p
            elif kind == KIND_QUAD:
                v = (ii + dm * j * j + cm) % p
            else:
                v = (ii + cm * i * j + dm * j * j) % p
            out[pos] = chi[v]
            pos += 1
    return out
