from hypothesis import given, settings, strategies as st
import pytest

from chevcount._config import CapExceeded
from chevcount.series import (
    INTEGER, POLY_Q, Atom, TruncSeries, gauss_triangular_series, inv, jacobi_square_series,
    mul, pentagonal_series, poly_eval, product_factors,
)
from chevcount.numth import partition_count

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=12)


def _series(cs, n=11):
    return TruncSeries(cs, n)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    A, B, C = _series(a), _series(b), _series(c)
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C


@given(coeff_lists)
def test_inverse(a):
    A = _series([1] + a)
    assert mul(A, inv(A)) == TruncSeries.one(11)


def test_inverse_needs_unit():
    with pytest.raises(ValueError):
        inv(TruncSeries([2, 1], 3))


def test_euler_product_gives_partitions():
    P = product_factors((Atom(-1, 1, exponent=-1),), 60, q=1)
    assert [P[n] for n in range(61)] == [partition_count(n) for n in range(61)]


def test_classical_identities_to_order_60():
    N = 60
    assert product_factors((Atom(-1, 1),), N, q=1) == pentagonal_series(N)
    assert product_factors((Atom(-1, 2), Atom(-1, 2, -1, exponent=-1)), N, q=1) == gauss_triangular_series(N)
    assert product_factors((Atom(-1, 2), Atom(1, 2, -1, exponent=2)), N, q=1) == jacobi_square_series(N)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 9]))
def test_symbolic_matches_numeric(q):
    atoms = (Atom(-1, 1), Atom(-1, 1, q_pow=1, exponent=-1))
    sym = product_factors(atoms, 10, POLY_Q)
    num = product_factors(atoms, 10, INTEGER, q)
    assert sym.evaluate_q(q) == num


def test_poly_eval():
    assert poly_eval((-1, 0, 1), 3) == 8


def test_truncation_cap():
    with pytest.raises(CapExceeded):
        product_factors((Atom(-1, 1),), 10_000, q=1)


def test_immutable():
    s = TruncSeries([1, 2], 3)
    with pytest.raises(AttributeError):
        s.trunc = 5
