from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from chevcount.centralizer import (
    PLAIN, ClassType, class_equation_check, class_type_centralizer, compare_to_bound,
    enumerate_class_types, f_monotone, f_monotone_unitary, group_order,
    min_centralizer_exact, min_centralizer_lower_bound, unipotent_count,
)
from chevcount.classcount import k_gl, k_gu
from chevcount.numth import iter_partitions


@pytest.mark.parametrize("n,q", [(n, q) for n in range(1, 6) for q in (2, 3, 4)])
def test_gl_class_equation(n, q):
    total, classes = class_equation_check("GL", n, q)
    assert total == 1
    assert classes == k_gl(n, q)


@pytest.mark.parametrize("n,q", [(n, q) for n in range(1, 5) for q in (2, 3)])
def test_gu_class_equation(n, q):
    total, classes = class_equation_check("GU", n, q)
    assert total == 1
    assert classes == k_gu(n, q)


def test_centralizer_of_single_class():
    # a regular unipotent in GL(3,2) has centralizer of order q^(n-1) (q-1) ... = 4
    ct = ClassType(((1, PLAIN, (3,)),))
    assert class_type_centralizer("GL", ct, 2) == 4
    # the identity
    assert class_type_centralizer("GL", ClassType(((1, PLAIN, (1, 1, 1)),)), 2) == group_order("GL", 3, 2)


def test_min_centralizers():
    assert min_centralizer_exact("GL", 2, 2) == 2
    assert min_centralizer_exact("GU", 2, 2) == 6
    assert min_centralizer_exact("GL", 1, 5) == 4


def test_group_orders():
    assert group_order("Sp", 4, 3) == 51840
    assert group_order("O", 4, 2, "-") == 240 // 2
    assert group_order("GL", 2, 3) == 48


def test_unipotent_counts():
    assert unipotent_count("Sp", 4, 3) == 6561
    assert unipotent_count("O", 4, 2, "+") == 40
    assert unipotent_count("O", 4, 2, "-") == 56


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 20).flatmap(lambda n: st.sampled_from(list(iter_partitions(n)))), st.integers(2, 9))
def test_partition_lower_bound(lam, q):
    floor = Fraction(q) ** sum(lam) * (1 - Fraction(1, q))
    assert f_monotone(lam, q) >= floor
    assert (f_monotone(lam, q) == floor) == (len(lam) == 1)


def test_partition_lower_bound_exhaustive():
    for n in range(1, 21):
        for lam in iter_partitions(n):
            for q in (2, 3, 4, 5):
                floor = Fraction(q) ** n * (1 - Fraction(1, q))
                f = f_monotone(lam, q)
                assert f >= floor and (f == floor) == (len(lam) == 1)


def test_unitary_f_is_positive():
    for lam in iter_partitions(8):
        assert f_monotone_unitary(lam, 2) > 0


def test_bound_comparison():
    b = min_centralizer_lower_bound("GL", 2, 2)
    assert b.formulaTag == "GLsmallcent"
    assert abs(b.value - 0.28463) < 1e-4
    assert compare_to_bound(2, b) == "pass"
    assert compare_to_bound(0, b) == "fail"


@pytest.mark.parametrize("family,n,q", [(f, n, q) for f in ("GL", "GU") for n in range(1, 5) for q in (2, 3)])
def test_small_grid_bounds(family, n, q):
    exact = min_centralizer_exact(family, n, q)
    assert compare_to_bound(exact, min_centralizer_lower_bound(family, n, q)) == "pass"


def test_class_type_multiplicities_sum():
    assert sum(m for _, m in enumerate_class_types("GL", 3, 3)) == 24
    total = sum(Fraction(m, class_type_centralizer("GU", ct, 2)) for ct, m in enumerate_class_types("GU", 3, 2))
    assert total == 1
