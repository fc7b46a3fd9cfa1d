from hypothesis import given, strategies as st
import pytest

from chevcount._config import CapExceeded, InexactDivision, exact_div
from chevcount.numth import (
    Partition, divisors, factorize, is_prime_power, mobius, partition_count,
    partition_stats, partitions, phi_r, prime_power,
)


def test_factorize_and_divisors():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(1, 5000))
def test_factorize_roundtrip(n):
    out = 1
    for p, e in factorize(n).items():
        out *= p**e
    assert out == n


@given(st.integers(1, 2000))
def test_mobius_sums_to_delta(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(1, 500))
def test_phi_sums(n):
    # sum of Euler phi over divisors is n; Jordan J_2 sums to n^2
    assert sum(phi_r(d, 1) for d in divisors(n)) == n
    assert sum(phi_r(d, 2) for d in divisors(n)) == n * n


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(64) == (2, 6)
    assert not is_prime_power(12)
    for bad in (0, 1, 6, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_partition_validation_and_dual():
    lam = Partition((4, 2, 2, 1))
    assert lam.dual() == (4, 3, 1, 1)
    assert lam.dual().dual() == lam
    dual, mults, colsq = partition_stats(lam)
    assert mults == {4: 1, 2: 2, 1: 1} and colsq == 16 + 9 + 1 + 1
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_counts_agree_with_enumeration():
    for n in range(0, 25):
        ps = partitions(n)
        assert len(ps) == partition_count(n)
        assert len(set(ps)) == len(ps)
        assert all(sum(p) == n for p in ps)
    assert partition_count(100) == 190569292


def test_partition_cap():
    with pytest.raises(CapExceeded):
        partitions(61)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InexactDivision):
        exact_div(7, 2)
