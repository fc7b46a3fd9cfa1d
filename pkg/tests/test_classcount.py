from hypothesis import given, strategies as st
import pytest

from chevcount._config import CapExceeded
from chevcount.classcount import (
    GroupSpec, class_number, k_between_sl_gl, k_exceptional_upper, k_gl, k_gu, k_o_even,
    k_o_odd, k_omega, k_so, k_sp, k_sym_alt, k_typeA, omega_star_type,
)
from chevcount.numth import partition_count
from chevcount.series import poly_eval

# class numbers frozen from brute-force enumeration of the explicit groups
ENUMERATED = {
    ("GL", 2, 2): 3, ("GL", 2, 3): 8, ("GL", 3, 2): 6, ("GL", 2, 4): 15, ("GL", 2, 5): 24,
    ("GL", 3, 3): 24, ("GL", 3, 4): 60, ("GL", 4, 2): 14, ("GL", 2, 9): 80,
    ("SL", 2, 3): 7, ("SL", 2, 5): 9, ("SL", 2, 9): 13, ("SL", 3, 4): 28, ("SL", 4, 2): 14,
    ("PGL", 2, 5): 7, ("PGL", 3, 4): 22, ("PSL", 2, 5): 5, ("PSL", 2, 7): 6, ("PSL", 3, 4): 10,
    ("GU", 2, 2): 9, ("GU", 2, 3): 16, ("GU", 3, 2): 24, ("GU", 3, 3): 56, ("GU", 4, 2): 60,
    ("SU", 3, 2): 16, ("SU", 3, 3): 14, ("SU", 4, 2): 20, ("PGU", 3, 2): 10, ("PSU", 3, 2): 6,
    ("PSU", 3, 4): 22, ("Sp", 4, 2): 11, ("Sp", 4, 3): 34, ("Sp", 4, 4): 27, ("Sp", 2, 7): 11,
    ("OPlus", 4, 2): 9, ("OMinus", 4, 2): 7, ("OPlus", 4, 3): 25, ("OMinus", 4, 3): 22,
    ("OPlus", 4, 5): 41, ("OMinus", 4, 7): 54, ("OPlus", 6, 2): 22, ("OMinus", 6, 2): 25,
    ("SOPlus", 4, 3): 20, ("SOMinus", 4, 3): 14, ("SOPlus", 4, 2): 9, ("SOMinus", 4, 2): 5,
    ("SOPlus", 6, 2): 14, ("SOMinus", 6, 2): 20, ("SOPlus", 4, 7): 68,
    ("OOdd", 3, 3): 10, ("SOOdd", 3, 3): 5, ("SOOdd", 5, 3): 25, ("OOdd", 5, 3): 50,
    ("OmegaPlus", 4, 3): 25, ("OmegaMinus", 4, 3): 7, ("OmegaPlus", 4, 5): 41,
    ("OmegaMinus", 4, 5): 15, ("OmegaOdd", 5, 3): 20,
}


@pytest.mark.parametrize("key,expected", sorted(ENUMERATED.items()))
def test_frozen_enumerated_values(key, expected):
    fam, n, q = key
    assert class_number(GroupSpec(fam, n, q)) == (expected, "exact")


def test_symbolic_gl_gu():
    assert k_gl(2) == (-1, 0, 1)
    assert poly_eval(k_gu(3), 5) == k_gu(3, 5)
    assert k_gu(3) == (2, 3, 2, 1)


@given(st.integers(1, 10), st.sampled_from((2, 3, 4, 5, 7)))
def test_symbolic_agrees_with_numeric(n, q):
    assert poly_eval(k_gl(n), q) == k_gl(n, q)


def test_larger_orthogonal_values():
    assert k_omega(6, 3, "+") == 29 and k_omega(6, 3, "-") == 39
    assert k_omega(7, 3) == 58
    assert omega_star_type(6, 3) == "-" and omega_star_type(8, 3) == "+"
    assert omega_star_type(6, 5) == "+"


@given(st.integers(2, 12), st.sampled_from((3, 5, 7, 9)))
def test_orthogonal_index_relations(n, q):
    # k(O) <= 2 k(SO) and k(SO) <= 2 k(Omega): index-two subgroups
    plus, minus = k_o_even(2 * n, q)
    for kind, ko in (("+", plus), ("-", minus)):
        kso = k_so(2 * n, q, kind)
        assert ko <= 2 * kso and kso <= 2 * k_omega(2 * n, q, kind)
    assert k_o_odd(2 * n + 1, q) == 2 * k_so(2 * n + 1, q)


def test_between_sl_gl():
    assert k_between_sl_gl(2, 5, 2) == 18
    assert k_between_sl_gl(3, 4, 1) == k_gl(3, 4)
    assert k_between_sl_gl(3, 4, 3) == k_typeA("SL", 3, 4)
    with pytest.raises(ValueError):
        k_between_sl_gl(2, 5, 3)


def test_sym_alt():
    assert k_sym_alt(5) == (7, 5)
    assert k_sym_alt(6) == (11, 7)
    assert k_sym_alt(50)[0] == partition_count(50)


def test_exceptional_upper_bounds():
    assert k_exceptional_upper("E8", 2) == 1302
    assert k_exceptional_upper("G2", 3) == 9 + 6 + 9
    assert class_number(GroupSpec("Exceptional", 8, 2, "E8")) == (1302, "upper_bound")
    with pytest.raises(ValueError):
        k_exceptional_upper("2B2", 4)


def test_refusals():
    with pytest.raises(ValueError):
        k_o_even(2, 3)
    with pytest.raises(ValueError):
        k_so(5, 4)
    with pytest.raises(ValueError):
        k_sp(3, 3)
    with pytest.raises(ValueError):
        GroupSpec("GL", 2, 6)
    with pytest.raises(ValueError):
        GroupSpec("Nope", 2, 3)
    with pytest.raises(CapExceeded):
        k_gl(500, 2)
