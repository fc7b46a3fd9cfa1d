from hypothesis import given, settings, strategies as st
import pytest

from chevcount._config import CapExceeded
from chevcount.numth import divisors
from chevcount.oracle import brute_force_star_counts, monic_irreducibles
from chevcount.polycount import (
    count_irreducible, count_nonselfconj_unitary, star_counts, tilde_pair_count,
    tilde_selfconj_polys, verify_polycount_identities,
)

QS = (2, 3, 4, 5, 7, 8, 9)


@given(st.sampled_from(QS), st.integers(1, 40))
def test_necklace_identity(q, r):
    assert sum(d * count_irreducible(q, d) for d in divisors(r)) == q**r - 1


def test_irreducible_counts_match_enumeration():
    for q in (2, 3, 4):
        for d in range(1, 5):
            assert len(monic_irreducibles(q, d)) == count_irreducible(q, d)


def test_star_counts_frozen():
    pc = star_counts(3, 4)
    assert pc.nstar2 == (0, 1, 2, 4, 10)
    assert pc.mstar == (0, 0, 1, 4, 8)
    assert star_counts(5, 1).mstar[1] == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_star_counts_match_brute_force(q):
    dmax = 6 if q <= 3 else 4
    pc = star_counts(q, dmax)
    brute = brute_force_star_counts(q, dmax)
    for d in range(1, dmax + 1):
        assert brute[d] == (pc.nstar(d), pc.mstar[d])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_identities_hold_to_60(q):
    assert verify_polycount_identities(q, 60)["passed"]


def test_star_cap():
    with pytest.raises(CapExceeded):
        star_counts(2, 61)


@settings(max_examples=30)
@given(st.sampled_from((2, 3, 4, 5)), st.integers(1, 12))
def test_unitary_split(q, d):
    # self-conjugate plus paired polynomials account for all of F_{q^2}[z]
    assert tilde_selfconj_polys(q, d) + 2 * tilde_pair_count(q, d) == count_irreducible(q * q, d)


def test_nonselfconj_unitary():
    # F_{q^2} has q+1 self-conjugate nonzero elements (norm-one group)
    assert count_nonselfconj_unitary(2, 1) == 3 - 3
    assert count_nonselfconj_unitary(3, 1) == 8 - 4
    with pytest.raises(ValueError):
        count_nonselfconj_unitary(3, 2)
