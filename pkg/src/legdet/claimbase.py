"""Claim/report plumbing shared by the check modules.

A Claim binds an id and grade to a check function; the function receives the
scan key (a prime or an index) plus a Context of per-task caches and returns
one Report per parameter point.  Grades: theorems and remark-confirmed
results must hold (a failure is a build break), conjecture failures are
counterexamples (reported prominently, but not an error).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Callable

from . import kernel
from .arith import half_factorial_mod, rat_mod, symbol_table
from .matrix import Matrix, det_int_entries

THEOREM = "theorem"
CONJECTURE = "conjecture"
REMARK_CONFIRMED = "remark-confirmed"

MUST_HOLD_GRADES = (THEOREM, REMARK_CONFIRMED)

PRIME_KIND = "prime"
INDEX_KIND = "index"
GOLDEN_KIND = "golden"


@dataclass
class Report:
    """Outcome of one (claim, parameter) check with an exact witness."""

    claim: str = ""
    grade: str = ""
    p: int | None = None
    n: int | None = None
    params: dict = field(default_factory=dict)
    status: str = "holds"
    lhs: str = ""
    rhs: str = ""

    def to_obj(self) -> dict:
        return {
            "claim": self.claim,
            "grade": self.grade,
            "p": self.p,
            "n": self.n,
            "params": self.params,
            "status": self.status,
            "witness": {"lhs": self.lhs, "rhs": self.rhs},
        }


def point(ok: bool, lhs, rhs, **params) -> Report:
    return Report(params=params, status="holds" if ok else "fails",
                  lhs=str(lhs), rhs=str(rhs))


def observe(lhs, rhs, **params) -> Report:
    return Report(params=params, status="observational", lhs=str(lhs), rhs=str(rhs))


def skip(reason: str, **params) -> Report:
    return Report(params=params, status=f"skipped({reason})")


@dataclass(frozen=True)
class Claim:
    id: str
    grade: str
    kind: str
    eqs: tuple[str, ...]
    doc: str
    fn: Callable

    def run(self, key, ctx: "Context") -> list[Report]:
        reports = self.fn(key, ctx)
        for r in reports:
            r.claim = self.id
            r.grade = self.grade
            if self.kind == PRIME_KIND and r.p is None:
                r.p = key
            elif self.kind == INDEX_KIND and r.n is None:
                r.n = key
        return reports


class Context:
    """Per-task cache store; all cached values are pure functions of the key."""

    def __init__(self):
        self._memo: dict = {}

    def memo(self, key, make):
        try:
            return self._memo[key]
        except KeyError:
            value = make()
            self._memo[key] = value
            return value

    # -- symbol tables ------------------------------------------------------

    def chi(self, p: int) -> list[int]:
        return self.memo(("chi", p), lambda: symbol_table(p))

    def chi_arr(self, p: int) -> array:
        return self.memo(("chi_arr", p), lambda: array("q", self.chi(p)))

    def hf(self, p: int) -> int:
        """((p-1)/2)! mod p."""
        return self.memo(("hf", p), lambda: half_factorial_mod(p, p))

    # -- symbol-family determinants -----------------------------------------

    def sym_det_mod(self, p: int, kind: int, c: int, d: int, lo: int, hi: int) -> int:
        ent = kernel.build_symbol_entries(kind, self.chi_arr(p), p, c, d, lo, hi)
        return kernel.det_mod_prime(ent, hi - lo + 1, p)

    def sym_det_exact(self, p: int, kind: int, c: int, d: int, lo: int, hi: int) -> int:
        ent = kernel.build_symbol_entries(kind, self.chi_arr(p), p, c, d, lo, hi)
        return det_int_entries(ent, hi - lo + 1, 1)

    def r_mod(self, p: int) -> list[int]:
        """R(d, p) mod p for d in 0..p-1 (half-range linear family)."""
        half = (p - 1) // 2
        return self.memo(("r_mod", p), lambda: [
            self.sym_det_mod(p, kernel.KIND_LINEAR, 0, d, 0, half) for d in range(p)])

    def t_mod(self, p: int) -> list[int]:
        """T(d, p) mod p for d in 0..p-1 (zero-based half quadratic family)."""
        half = (p - 1) // 2
        return self.memo(("t_mod", p), lambda: [
            self.sym_det_mod(p, kernel.KIND_QUAD, 0, d, 0, half) for d in range(p)])

    def s_mod(self, p: int) -> list[int]:
        """S(d, p) mod p for d in 0..p-1 (one-based half quadratic family)."""
        half = (p - 1) // 2
        return self.memo(("s_mod", p), lambda: [
            self.sym_det_mod(p, kernel.KIND_QUAD, 0, d, 1, half) for d in range(p)])

    def s_exact(self, p: int) -> list[int]:
        """Exact S(d, p) for d in 0..p-1."""
        half = (p - 1) // 2
        return self.memo(("s_exact", p), lambda: [
            self.sym_det_exact(p, kernel.KIND_QUAD, 0, d, 1, half) for d in range(p)])

    def t_exact(self, p: int) -> list[int]:
        half = (p - 1) // 2
        return self.memo(("t_exact", p), lambda: [
            self.sym_det_exact(p, kernel.KIND_QUAD, 0, d, 0, half) for d in range(p)])

    def sc_exact(self, p: int, c: int, d: int) -> int:
        """Exact S_c(d, p) (one-based half quadratic family with shift c)."""
        half = (p - 1) // 2
        return self.memo(("sc_exact", p, c % p, d % p), lambda:
                         self.sym_det_exact(p, kernel.KIND_QUAD, c, d, 1, half))

    def qf_mod(self, p: int, c: int, d: int, include_zero: bool) -> int:
        lo = 0 if include_zero else 1
        return self.memo(("qf_mod", p, c % p, d % p, lo), lambda:
                         self.sym_det_mod(p, kernel.KIND_QUADFORM, c, d, lo, p - 1))

    def qf_exact(self, p: int, c: int, d: int, include_zero: bool) -> int:
        lo = 0 if include_zero else 1
        return self.memo(("qf_exact", p, c % p, d % p, lo), lambda:
                         self.sym_det_exact(p, kernel.KIND_QUADFORM, c, d, lo, p - 1))


def det_mod_rational(m: Matrix, p: int) -> int:
    """det mod p of a rational matrix whose entry denominators are units mod p."""
    ent = [rat_mod(x, p) for x in m.entries]
    return kernel.det_mod_prime(ent, m.rows, p)
