"""Counts of monic irreducible polynomials over F_q.

Three flavours are kept apart on purpose:

* plain counts N(q;d), excluding the polynomial z;
* star counts N*(q;d), M*(q;d) for the involution phi -> phi* over F_q
  (z +- 1 are left out and handled by callers);
* tilde counts for the unitary involution over F_{q^2}.
"""

from dataclasses import dataclass
from math import comb

from ._config import CapExceeded, exact_div
from .numth import divisors, mobius, prime_power

MAX_STAR_DEGREE = 60


def count_irreducible(q, d):
    """N(q;d): monic irreducibles of degree d over F_q other than z."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return exact_div(sum(mobius(d // e) * (q**e - 1) for e in divisors(d)), d)


def special_linear_count(q):
    """How many of z-1, z+1 are distinct (1 in characteristic 2)."""
    return 1 if q % 2 == 0 else 2


# --- tilde (unitary) path: base field F_{q^2}, conjugation alpha -> alpha^-q ---

def tilde_selfconj_elements(q, i):
    """Self-conjugate elements of exact degree i over F_{q^2}."""
    if i < 1:
        raise ValueError("degree must be >= 1")
    if i % 2 == 0:
        return 0
    return sum(mobius(d) * (q ** (i // d) + 1) for d in divisors(i))


def tilde_selfconj_polys(q, d):
    """Self-conjugate monic irreducibles of degree d over F_{q^2} (z excluded)."""
    return exact_div(tilde_selfconj_elements(q, d), d)


def tilde_pair_count(q, d):
    """Conjugate pairs of non-self-conjugate monic irreducibles of degree d over F_{q^2}."""
    return exact_div(count_irreducible(q * q, d) - tilde_selfconj_polys(q, d), 2)


def count_nonselfconj_unitary(q, r):
    """Nonzero non-self-conjugate elements of F_{q^2r} over F_{q^2}, r odd."""
    if r < 1 or r % 2 == 0:
        raise ValueError("r must be odd and positive")
    prime_power(q)
    total_selfconj = sum(tilde_selfconj_elements(q, i) for i in divisors(r))
    return q ** (2 * r) - 1 - total_selfconj


# --- star path: base field F_q, phi* = z^deg phi(1/z) / phi(0) ---

@dataclass(frozen=True)
class PolyCounts:
    """Counts up to degree ``upto``; every tuple is indexed by degree with slot 0 unused.

    ``nstar2[d]`` is N*(q;2d) and ``mstar[d]`` is M*(q;d).
    """

    q: int
    upto: int
    N: tuple
    nstar2: tuple
    mstar: tuple

    def nstar(self, d):
        """N*(q;d) for d <= upto (zero in odd degree, z+-1 excluded)."""
        if d % 2:
            return 0
        return self.nstar2[d // 2]

    def decomposition_holds(self, d):
        special = special_linear_count(self.q) if d == 1 else 0
        return self.N[d] == 2 * self.mstar[d] + self.nstar(d) + special


def _star_exponent(q):
    return 1 if q % 2 == 0 else 2


def _fnp_targets(q, D):
    f = _star_exponent(q)
    # (1-t)^f / (1-qt)
    num = [comb(f, k) * (-1) ** k for k in range(f + 1)] + [0] * D
    lhs = [0] * (D + 1)
    for n in range(D + 1):
        lhs[n] = sum(num[k] * q ** (n - k) for k in range(min(n, f) + 1))
    rhs2 = [1, -1] + [0] * (D - 1)
    return lhs, rhs2[: D + 1]


def _mul_power_series(c, d, count, sign):
    # c *= (1 - sign*t^d)^(-count), in place; sign=+1 gives (1-t^d)^-count
    if count == 0:
        return
    D = len(c) - 1
    terms = [comb(count + k - 1, k) * sign**k for k in range(D // d + 1)]
    out = [0] * (D + 1)
    for i, x in enumerate(c):
        if x:
            for k, w in enumerate(terms):
                j = i + d * k
                if j > D:
                    break
                out[j] += x * w
    c[:] = out


def star_counts(q, D):
    """Solve both product identities degree by degree for N*(q;2d) and M*(q;d)."""
    prime_power(q)
    if D < 1:
        raise ValueError("D must be >= 1")
    if D > MAX_STAR_DEGREE:
        raise CapExceeded(f"star counts are capped at degree {MAX_STAR_DEGREE}")
    target1, target2 = _fnp_targets(q, D)
    p1 = [1] + [0] * D
    p2 = [1] + [0] * D
    nstar2 = [0] * (D + 1)
    mstar = [0] * (D + 1)
    for d in range(1, D + 1):
        s = target1[d] - p1[d]  # a + b
        t = target2[d] - p2[d]  # b - a
        a = exact_div(s - t, 2)
        b = s - a
        if a < 0 or b < 0:
            raise ArithmeticError(f"negative star count at degree {d} for q={q}")
        nstar2[d], mstar[d] = a, b
        _mul_power_series(p1, d, a + b, 1)
        _mul_power_series(p2, d, a, -1)
        _mul_power_series(p2, d, b, 1)
    N = (0,) + tuple(count_irreducible(q, d) for d in range(1, D + 1))
    return PolyCounts(q, D, N, tuple(nstar2), tuple(mstar))


def verify_polycount_identities(q, D):
    """Rebuild the three identities from computed counts; returns a report dict."""
    checks = []
    for r in range(1, D + 1):
        lhs = sum(d * count_irreducible(q, d) for d in divisors(r))
        checks.append({"identity": "countirr", "degree": r, "passed": lhs == q**r - 1})
    pc = star_counts(q, D)
    target1, target2 = _fnp_targets(q, D)
    p1 = [1] + [0] * D
    p2 = [1] + [0] * D
    for d in range(1, D + 1):
        _mul_power_series(p1, d, pc.nstar2[d] + pc.mstar[d], 1)
        _mul_power_series(p2, d, pc.nstar2[d], -1)
        _mul_power_series(p2, d, pc.mstar[d], 1)
    for n in range(D + 1):
        checks.append({"identity": "star_product_1", "degree": n, "passed": p1[n] == target1[n]})
        checks.append({"identity": "star_product_2", "degree": n, "passed": p2[n] == target2[n]})
    for d in range(1, D + 1):
        checks.append({"identity": "decomposition", "degree": d, "passed": pc.decomposition_holds(d)})
    return {
        "q": q,
        "D": D,
        "f": _star_exponent(q),
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
