import pytest

from legdet.claimbase import CONJECTURE, Context, MUST_HOLD_GRADES, REMARK_CONFIRMED, THEOREM
from legdet.claims import (
    EXPECTED_EQS,
    REGISTRY,
    check,
    get_claim,
    registry_coverage,
    select_claims,
    uncovered_equations,
)


def test_registry_covers_every_numbered_statement():
    # (1.1)-(1.21), (2.1)-(2.8), (3.1)-(3.28) must each map to >= 1 claim
    assert len(EXPECTED_EQS) == 21 + 8 + 28
    assert uncovered_equations() == []
    cov = registry_coverage()
    for eq in ("1.6", "2.4", "3.3", "3.23", "3.27"):
        assert cov[eq], eq


def test_every_claim_graded_and_kinded():
    for claim in REGISTRY.values():
        assert claim.grade in (THEOREM, CONJECTURE, REMARK_CONFIRMED)
        assert claim.kind in ("prime", "index", "golden")
        assert claim.doc
    assert set(MUST_HOLD_GRADES) == {THEOREM, REMARK_CONFIRMED}


def test_spec_named_claim_ids_exist():
    for cid in ("thm1.1/eq1.6", "conj3.2", "conj3.14/eq3.24", "mordell3.2",
                "vsemirnov1.3", "example1.1/S(1,11)", "remark3.16/W(3n+1)",
                "conj3.4/eq3.9"):
        assert cid in REGISTRY


def test_unknown_claim_rejected():
    with pytest.raises(KeyError):
        get_claim("conj9.9")
    with pytest.raises(KeyError):
        check("conj9.9", 5)
    with pytest.raises(KeyError):
        select_claims("nope*")


def test_select_claims_globs():
    assert [c.id for c in select_claims("thm1.1/*")] == [
        "thm1.1/eq1.6", "thm1.1/eq1.7", "thm1.1/eq1.8", "thm1.1/eq1.9", "thm1.1/eq2.2"]
    assert len(select_claims("*")) == len(REGISTRY)
    two = select_claims("mordell3.2,vsemirnov1.3")
    assert {c.id for c in two} == {"mordell3.2", "vsemirnov1.3"}


def test_check_examples_from_catalog():
    # det(halffact(13)) != 0 and 13 = 1 (mod 4)
    rs = check("conj3.1", 13)
    assert len(rs) == 1 and rs[0].status == "holds"
    # golden S(1,11) carries witness -16
    rs = check("example1.1/S(1,11)")
    assert rs[0].status == "holds" and rs[0].lhs == "-16" and rs[0].p == 11
    # W(3n+1) = 0 at n = 0
    rs = check("remark3.16/W(3n+1)", 0)
    assert rs[0].status == "holds" and rs[0].params["hankel_index"] == 1


def test_check_params_filter_replays_single_point():
    rs = check("thm1.1/eq1.6", 13, params={"d": 5})
    assert len(rs) == 1 and rs[0].params == {"d": 5} and rs[0].status == "holds"


def test_skip_reasons_are_machine_readable():
    rs = check("thm1.1/eq1.6", 7)
    assert len(rs) == 1 and rs[0].status.startswith("skipped(")
    rs = check("conj3.11/eq3.21", 3)
    assert rs[0].status.startswith("skipped(")
    rs = check("conj3.14/eq3.24", 3)
    assert rs[0].status == "skipped(p = 3 outside hypothesis)"


def test_observational_statuses_for_symbol_zero():
    # vanishing (c,d)_p determinants are recorded, not judged
    rs = check("conj3.4/valuation", 11)
    statuses = {r.status for r in rs}
    assert "observational" in statuses and "fails" not in statuses


def test_reports_carry_keys_and_grades():
    ctx = Context()
    for r in check("thm1.2/eq1.17", 11, ctx=ctx):
        assert r.claim == "thm1.2/eq1.17" and r.grade == THEOREM and r.p == 11
    for r in check("conj3.9/eq3.18", 4, ctx=ctx):
        assert r.n == 4 and r.grade == CONJECTURE
    obj = check("thm1.2/eq1.17", 11, ctx=ctx)[0].to_obj()
    assert set(obj) == {"claim", "grade", "p", "n", "params", "status", "witness"}
    assert set(obj["witness"]) == {"lhs", "rhs"}
