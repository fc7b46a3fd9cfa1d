from fractions import Fraction

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from chevcount import oracle as o
from chevcount._config import CapExceeded
from chevcount.centralizer import group_order


@settings(max_examples=25, deadline=None)
@given(st.sampled_from((2, 3, 4, 5, 7, 8, 9, 16, 25, 27)))
def test_field_tables_are_fields(q):
    F = o.field(q)
    F._verify()
    g = F.primitive_element()
    assert F.element_order(g) == q - 1
    assert len(set(F.frob.tolist())) == q


@settings(max_examples=30, deadline=None)
@given(st.sampled_from((3, 4, 9)), st.integers(0, 10**6))
def test_matmul_associative_and_inverse(q, seed):
    F = o.field(q)
    rng = np.random.default_rng(seed)
    A, B, C = (rng.integers(0, q, size=(1, 3, 3)) for _ in range(3))
    assert (o.matmul(F, o.matmul(F, A, B), C) == o.matmul(F, A, o.matmul(F, B, C))).all()
    if o.determinants(F, A)[0] != 0:
        Ai = o.inverse(F, A[0])
        assert (o.matmul(F, A, Ai) == o.identity(3)).all()


ORDERS = [("GL", 2, 3), ("SL", 2, 5), ("GU", 2, 3), ("Sp", 4, 2), ("OMinus", 4, 2), ("SOOdd", 3, 3), ("OmegaOdd", 5, 3)]


@pytest.mark.parametrize("family,n,q", ORDERS)
def test_orders_match_formulas(family, n, q):
    G = o.build_group(family, n, q)
    fam = {"OMinus": ("O", "-"), "SOOdd": ("SO", None), "OmegaOdd": ("Omega", None)}.get(family, (family, None))
    assert G.order == group_order(fam[0], n, q, fam[1])


@pytest.mark.parametrize("family,n,q", [("GL", 2, 2), ("SL", 2, 3), ("PSL", 2, 5), ("OMinus", 4, 2)])
def test_burnside_agrees(family, n, q):
    G = o.build_group(family, n, q)
    assert o.burnside_class_count(G) == o.conjugacy_data(G).k


def test_class_data_invariants():
    G = o.build_group("Sp", 4, 3)
    cd = o.conjugacy_data(G)
    assert cd.k == 34
    assert cd.sizes.sum() == G.order
    assert (cd.sizes * cd.centralizers == G.order).all()
    assert int(cd.p_prime.sum()) == 9
    assert int(cd.sizes[cd.p_power].sum()) == 6561


def test_unipotent_in_orthogonal_even():
    for fam, expected in (("OPlus", 40), ("OMinus", 56)):
        cd = o.conjugacy_data(o.build_group(fam, 4, 2))
        assert int(cd.sizes[cd.p_power].sum()) == expected


def test_omega_is_derived_subgroup():
    O = o.build_group("OPlus", 4, 3)
    W = o.build_group("OmegaPlus", 4, 3)
    assert O.order == 4 * W.order
    assert o.is_normal(O, W)


def test_uselem_block_condition():
    for fam_o, fam_so, n, q in (("OPlus", "SOPlus", 4, 3), ("OMinus", "SOMinus", 4, 3), ("OOdd", "SOOdd", 5, 3)):
        O = o.build_group(fam_o, n, q)
        S = o.determinant_kernel(O)
        assert all(odd == full for odd, full in o.uselem_check(O, S))


def test_coset_distribution_trivial():
    G = o.symmetric_group(4)
    res = o.coset_class_distribution(G, G)
    assert res["cosets"] == 1 and res["alpha"] == o.conjugacy_data(G).k


def test_coset_distribution_not_normal():
    G = o.symmetric_group(4)
    H = o.subgroup(G, (G.elements[:, 1:, 0] == 0).all(axis=1))
    with pytest.raises(ValueError):
        o.coset_class_distribution(G, H)


def test_derangements():
    S3 = o.symmetric_group(3)
    H = o.subgroup(S3, (S3.elements[:, 1:, 0] == 0).all(axis=1))
    assert o.derangement_proportion(S3, H) == Fraction(1, 3)
    assert o.derangement_proportion(S3, S3) == 0


def test_jordan_blocks():
    F = o.field(3)
    g = np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert o.jordan_block_sizes(F, g, 1) == (2, 1)


def test_cap():
    with pytest.raises(CapExceeded):
        o.build_group("GL", 4, 3)
    with pytest.raises(CapExceeded):
        o.build_group("GL", 3, 3, limit=100)
