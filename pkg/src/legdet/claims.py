"""The claim registry: every identity/congruence/sign statement in the catalog
bound to an executable check.

The registry is enumerable and complete: EXPECTED_EQS lists every numbered
equation that states a claim, and registry_coverage() maps each one to the
claims that exercise it (a self-test fails if any is unmapped).
"""

from __future__ import annotations

from fnmatch import fnmatch

from .checks_conjectures import CLAIMS as _CONJ_CLAIMS
from .checks_theorems import CLAIMS as _THM_CLAIMS
from .claimbase import Claim, Context, Report

REGISTRY: dict[str, Claim] = {}
for _c in (*_THM_CLAIMS, *_CONJ_CLAIMS):
    if _c.id in REGISTRY:
        raise RuntimeError(f"duplicate claim id {_c.id}")
    REGISTRY[_c.id] = _c

# Every numbered equation in the catalog that states an identity, congruence,
# or sign claim (definitional displays are covered by the claims that use them).
EXPECTED_EQS = (
    [f"1.{i}" for i in range(1, 22)]
    + [f"2.{i}" for i in range(1, 9)]
    + [f"3.{i}" for i in range(1, 29)]
)


def registry_coverage() -> dict[str, list[str]]:
    """Equation tag -> claim ids exercising it."""
    cov: dict[str, list[str]] = {eq: [] for eq in EXPECTED_EQS}
    for claim in REGISTRY.values():
        for eq in claim.eqs:
            cov.setdefault(eq, []).append(claim.id)
    return cov


def uncovered_equations() -> list[str]:
    return [eq for eq, ids in registry_coverage().items() if not ids]


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim id {claim_id!r}") from None


def select_claims(patterns) -> list[Claim]:
    """Claims matching any comma-separated glob/id pattern, in registry order."""
    if isinstance(patterns, str):
        patterns = [s.strip() for s in patterns.split(",") if s.strip()]
    chosen = []
    for claim in REGISTRY.values():
        if any(fnmatch(claim.id, pat) or claim.id == pat for pat in patterns):
            chosen.append(claim)
    unmatched = [pat for pat in patterns
                 if not any(fnmatch(cid, pat) or cid == pat for cid in REGISTRY)]
    if unmatched:
        raise KeyError(f"no claim matches {unmatched}")
    return chosen


def check(claim_id: str, key=None, params: dict | None = None,
          ctx: Context | None = None) -> list[Report]:
    """Run one claim at one key; optionally filter to a single parameter point.

    Replaying the (key, params) of any report reproduces its status.
    """
    claim = get_claim(claim_id)
    reports = claim.run(key, ctx or Context())
    if params is not None:
        reports = [r for r in reports if all(r.params.get(k) == v for k, v in params.items())]
    return reports
