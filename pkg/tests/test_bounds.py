from fractions import Fraction
import json

from hypothesis import given, strategies as st
import pytest

from chevcount.bounds import (
    REMARK_VALUES, VerifyReport, check_exceptional_table, check_identities, check_inequalities,
    check_polynomiality, convergence_table, derangement_union_bound, limit_interval, limit_spec,
    limit_value, remark_status,
)


def test_limit_examples():
    assert abs(limit_value("GU", 2) - 8.25) < 0.01
    assert abs(limit_value("Sp odd", 3) - 10.7) < 0.05
    assert limit_value("GL", 5) == 1.0
    assert abs(limit_value("SL", 3) - 1.5) < 1e-12


def test_limit_values_frozen():
    # independent evaluation to 12 digits (direct partial products to depth 200)
    frozen = {("GU", 2): 8.255987935778, ("Sp", 3): 10.707752707495, ("Sp", 2): 15.178559876630,
              ("O", 3): 8.140215956808, ("SO", 3): 4.616851200672, ("SOOdd", 3): 7.042563038452,
              ("Omega", 3): 2.308425600336, ("O", 2): 12.763630022994, ("SO", 2): 7.471080243334}
    for (fam, q), v in frozen.items():
        assert abs(limit_value(fam, q) - v) < 1e-9


def test_limit_partial_products_agree():
    # the Sp odd product by a plain partial product
    q, p = 3, 1.0
    for i in range(1, 200):
        p *= (1 + q**-i) ** 4 / (1 - q**-i)
    assert abs(limit_value("Sp", 3) - p) < 1e-9


def test_limit_interval_contains_value():
    lo, hi = limit_interval("SO", 2, 1e-8)
    assert lo <= limit_value("SO", 2) <= hi and hi - lo < 1e-8


def test_limit_errors():
    with pytest.raises(ValueError):
        limit_value("E8", 2)
    with pytest.raises(ValueError):
        limit_value("Omega", 4)
    with pytest.raises(ValueError):
        limit_value("GL", 2, tol=1e-12)
    with pytest.raises(ValueError):
        limit_spec("GL", 6)


def test_remark_status_semantics():
    assert remark_status(8.2559, 8.25) == "pass"
    # agrees with the truncated digits but sits outside the symmetric window
    assert remark_status(15.1785, 15.1) == "inconclusive"
    assert remark_status(15.3, 15.1) == "fail"


def test_every_remark_value_agrees_in_shown_digits():
    for fam, q, stated in REMARK_VALUES:
        assert remark_status(limit_value(fam, q), stated) in ("pass", "inconclusive")


@pytest.mark.parametrize("fam,q,n_max", [("GL", 2, 40), ("GU", 2, 40), ("Sp", 3, 30)])
def test_convergence_examples(fam, q, n_max):
    rows = convergence_table(fam, q, range(1, n_max + 1))
    final, half = rows[-1], rows[n_max // 2 - 1]
    assert abs(final["delta"]) < (0.01 if fam == "GL" else 0.05)
    assert abs(final["delta"]) <= abs(half["delta"])


def test_gl_sweep_example():
    rep = check_inequalities(range(1, 41), (2, 3, 4, 5, 7, 9), suites=["GL"])
    assert rep.worst == "pass"


def test_sp_even_sweep_example():
    rep = check_inequalities(range(1, 31), (2, 4, 8), suites=["Sp_even.ratio"])
    assert rep.worst == "pass" and len(rep.entries) == 1


def test_sl_counterexample_is_reported():
    rep = check_inequalities(range(1, 6), (3,), suites=["SL.additive"])
    by_claim = {e["claim"]: e for e in rep.entries}
    fail = by_claim["SL.additive"]
    assert fail["status"] == "fail"
    assert fail["witness"]["failures"][0]["k"] == 7  # k(SL(2,3)) = 3 + 4
    assert by_claim["SL.additive_n>=3"]["status"] == "pass"


def test_exceptional_table():
    assert check_exceptional_table().worst == "pass"


def test_polynomiality():
    rep = check_polynomiality(12)
    assert rep.worst == "pass" and len(rep.entries) == 12
    with pytest.raises(ValueError):
        check_polynomiality(13)


def test_identities_report():
    rep = check_identities(30, (2, 3))
    assert rep.worst == "pass"


def test_union_bound():
    assert derangement_union_bound(10, 100, 1000) == (Fraction(1, 10), Fraction(9, 10))
    assert derangement_union_bound(5, 5, 120) == (1, 0)
    assert derangement_union_bound(7, 3, 10)[0] == 1
    with pytest.raises(ZeroDivisionError):
        derangement_union_bound(1, 0, 1)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_union_bound_properties(kM, mc):
    b, d = derangement_union_bound(kM, mc, 1)
    assert 0 <= b <= 1 and b + d == 1


def test_report_plumbing():
    rep = VerifyReport("x")
    rep.add("b", {"n": 2}, "pass", {"k": 10**30})
    rep.add("a", {"n": 1}, "inconclusive")
    assert rep.worst == "inconclusive"
    assert [e["claim"] for e in rep.sorted_entries()] == ["a", "b"]
    data = json.loads(rep.to_json())
    assert data["entries"][1]["witness"]["k"] == str(10**30)
    assert "1 inconclusive" in rep.to_table()
    with pytest.raises(ValueError):
        rep.add("c", {}, "maybe")
