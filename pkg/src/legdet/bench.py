"""Benchmark the compiled kernel against the pure-Python fallback.

Times one elimination mod a word-size prime per matrix size, plus an
end-to-end multi-modular determinant of a symbol matrix, on both backends.
"""

from __future__ import annotations

import random
import time
from array import array

from . import _pure, kernel
from .arith import symbol_table
from .matrix import det_int_entries

try:
    from . import _native
except ImportError:
    _native = None


def _time(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(sizes: str = "16,32,64,96", reps: int = 3) -> int:
    ns = [int(s) for s in sizes.split(",")]
    q = (1 << 31) - 1
    rng = random.Random(0xBE7C4)
    print(f"active backend: {kernel.BACKEND}"
          + ("" if _native else "  (compiled kernel unavailable)"))
    print(f"{'n':>4} {'pure (ms)':>12} {'native (ms)':>12} {'speedup':>8}")
    for n in ns:
        ent = array("q", [rng.randrange(q) for _ in range(n * n)])
        t_pure = _time(lambda: _pure.det_mod_prime(ent, n, q), reps)
        if _native is not None:
            t_nat = _time(lambda: _native.det_mod_prime(ent, n, q), reps)
            print(f"{n:>4} {t_pure * 1e3:>12.2f} {t_nat * 1e3:>12.2f} {t_pure / t_nat:>7.1f}x")
        else:
            print(f"{n:>4} {t_pure * 1e3:>12.2f} {'-':>12} {'-':>8}")

    # end-to-end: exact determinant of a quadratic-form symbol matrix
    p = 83
    chi = array("q", symbol_table(p))
    builders = [("pure", _pure)] + ([("native", _native)] if _native else [])
    print(f"\nexact det of the {p - 1}x{p - 1} quadratic-form symbol matrix (CRT path):")
    for name, impl in builders:
        orig_det, orig_build = kernel.det_mod_prime, kernel.build_symbol_entries
        kernel.det_mod_prime = impl.det_mod_prime
        kernel.build_symbol_entries = impl.build_symbol_entries
        try:
            ent = impl.build_symbol_entries(kernel.KIND_QUADFORM, chi, p, 1, 1, 1, p - 1)
            t = _time(lambda: det_int_entries(ent, p - 1, 1), reps)
            print(f"  {name:<7} {t * 1e3:>10.2f} ms")
        finally:
            kernel.det_mod_prime, kernel.build_symbol_entries = orig_det, orig_build
    return 0
