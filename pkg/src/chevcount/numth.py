"""Number-theoretic helpers and integer partitions."""

from functools import lru_cache

from ._config import CapExceeded, cap


def factorize(n):
    """Prime factorization of ``n`` as a dict ``{p: e}``."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n):
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def mobius(n):
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def phi_r(n, r):
    """Jordan's totient ``n^r * prod_{p | n} (1 - p^-r)``; ``phi_r(n, 1)`` is Euler's phi."""
    if n < 1 or r < 1:
        raise ValueError("phi_r needs n >= 1 and r >= 1")
    out = n**r
    for p in factorize(n):
        out = out // p**r * (p**r - 1)
    return out


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k``, or raise ``ValueError``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return p, k


def is_prime_power(q):
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Instances are plain tuples, so they hash, compare and sort like tuples.
    """

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if any(not isinstance(x, int) or x <= 0 for x in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def dual(self):
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def multiplicities(self):
        m = {}
        for x in self:
            m[x] = m.get(x, 0) + 1
        return m

    def __repr__(self):
        return f"Partition({tuple(self)})"


def partition_stats(lam):
    """Dual partition, part multiplicities and the sum of squared column lengths."""
    lam = Partition(lam)
    dual = lam.dual()
    return dual, lam.multiplicities(), sum(c * c for c in dual)


def partitions(n, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order."""
    return list(iter_partitions(n, max_part))


def iter_partitions(n, max_part=None):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap("partitions"):
        raise CapExceeded(f"partition enumeration capped at n={cap('partitions')}")
    m = n if max_part is None else min(n, max_part)
    if n == 0:
        yield Partition()
        return
    if m <= 0:
        return
    # standard successor rule on the reverse lexicographic order
    parts = [m] * (n // m)
    if n % m:
        parts.append(n % m)
    while True:
        yield Partition(parts)
        rem = 0
        while parts and parts[-1] == 1:
            parts.pop()
            rem += 1
        if not parts:
            return
        parts[-1] -= 1
        rem += 1
        k = parts[-1]
        while rem > k:
            parts.append(k)
            rem -= k
        parts.append(rem)


@lru_cache(maxsize=None)
def partition_count(n):
    """p(n) by the pentagonal recurrence (no enumeration, no cap)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total
