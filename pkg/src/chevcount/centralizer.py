"""Centralizer orders from Jordan-type class data, group orders, and lower bounds.

A :class:`ClassType` records which partitions sit on which kind of polynomial
slot without naming the polynomials; :func:`enumerate_class_types` attaches
to each type the number of actual conjugacy classes it stands for.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from ._config import CapExceeded, cap, exact_div
from .numth import Partition, iter_partitions, partition_stats, prime_power
from .polycount import count_irreducible, tilde_pair_count, tilde_selfconj_polys

PLAIN = "plain"
SELF_CONJUGATE = "selfConjugate"
CONJUGATE_PAIR = "conjugatePair"
_TAGS = (PLAIN, SELF_CONJUGATE, CONJUGATE_PAIR)

SAFETY_MARGIN = 1e-9


@dataclass(frozen=True)
class ClassType:
    """A multiset of ``(degree, tag, partition)`` entries, stored sorted."""

    entries: tuple

    def __post_init__(self):
        clean = []
        for d, tag, lam in self.entries:
            if d < 1 or tag not in _TAGS:
                raise ValueError(f"bad slot descriptor ({d}, {tag!r})")
            lam = Partition(lam)
            if not lam:
                raise ValueError("partitions in a class type must be non-empty")
            clean.append((d, tag, lam))
        object.__setattr__(self, "entries", tuple(sorted(clean)))

    @property
    def dimension(self):
        return sum((2 * d if tag == CONJUGATE_PAIR else d) * sum(lam) for d, tag, lam in self.entries)

    @property
    def unitary(self):
        return any(tag != PLAIN for _, tag, _ in self.entries)


def _gl_factor(lam, Q):
    # Q^(sum of squared column lengths) * prod_i prod_{k<=m_i} (1 - Q^-k), as an exact integer
    _, mults, colsq = partition_stats(lam)
    num = prod(Q**k - 1 for m in mults.values() for k in range(1, m + 1))
    drop = sum(m * (m + 1) // 2 for m in mults.values())
    return Q ** (colsq - drop) * num


def _gu_selfconj_factor(lam, Q):
    # Q^(colsq) * prod_i prod_{k<=m_i} (1 - (-1/Q)^k)
    _, mults, colsq = partition_stats(lam)
    num = prod(Q**k - (-1) ** k for m in mults.values() for k in range(1, m + 1))
    drop = sum(m * (m + 1) // 2 for m in mults.values())
    return Q ** (colsq - drop) * num


def f_monotone(lam, q):
    """``q^(sum lam'_i^2) * prod_i (1/q)_(m_i)`` as an exact Fraction."""
    if q < 2:
        raise ValueError("q must be >= 2")
    _, mults, colsq = partition_stats(lam)
    out = Fraction(q) ** colsq
    for m in mults.values():
        for k in range(1, m + 1):
            out *= 1 - Fraction(1, q**k)
    return out


def f_monotone_unitary(lam, q):
    """The unitary analogue with ``(-1/q)_(m_i)`` factors."""
    _, mults, colsq = partition_stats(lam)
    out = Fraction(q) ** colsq
    for m in mults.values():
        for k in range(1, m + 1):
            out *= 1 - Fraction(-1, q) ** k
    return out


def gl_centralizer_order(ct, q):
    if ct.unitary:
        raise ValueError("GL class types use plain slots only")
    return prod(_gl_factor(lam, q**d) for d, _, lam in ct.entries)


def gu_centralizer_order(ct, q):
    out = 1
    for d, tag, lam in ct.entries:
        if tag == SELF_CONJUGATE:
            out *= _gu_selfconj_factor(lam, q**d)
        elif tag == CONJUGATE_PAIR:
            out *= _gl_factor(lam, (q * q) ** d)
        else:
            raise ValueError("GU class types use selfConjugate/conjugatePair slots")
    return out


def _slot_kinds(family, n, q):
    # (degree, tag, dimension weight, number of available slots)
    kinds = []
    if family == "GL":
        for d in range(1, n + 1):
            kinds.append((d, PLAIN, d, count_irreducible(q, d)))
    elif family == "GU":
        for d in range(1, n + 1):
            if d % 2:
                kinds.append((d, SELF_CONJUGATE, d, tilde_selfconj_polys(q, d)))
            if 2 * d <= n:
                kinds.append((d, CONJUGATE_PAIR, 2 * d, tilde_pair_count(q, d)))
    else:
        raise ValueError(f"class types are only enumerated for GL and GU, not {family!r}")
    return [k for k in kinds if k[3] > 0]


def _multisets(parts, budget, max_len, start):
    # non-decreasing index sequences into parts whose sizes sum to exactly budget
    if budget == 0:
        yield ()
        return
    if max_len == 0:
        return
    for i in range(start, len(parts)):
        s = sum(parts[i])
        if s > budget:
            continue
        for rest in _multisets(parts, budget - s, max_len - 1, i):
            yield (i,) + rest


def _slot_multiplicity(avail, idxs):
    counts = {}
    for i in idxs:
        counts[i] = counts.get(i, 0) + 1
    k = len(idxs)
    return comb(avail, k) * factorial(k) // prod(factorial(c) for c in counts.values())


def enumerate_class_types(family, n, q):
    """Yield ``(ClassType, multiplicity)``; multiplicities sum to the class number."""
    prime_power(q)
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = [lam for m in range(1, n + 1) for lam in iter_partitions(m)]
    parts.sort(key=lambda lam: (sum(lam), lam))
    kinds = _slot_kinds(family, n, q)
    limit = cap("classtypes")
    produced = 0

    def rec(ki, remaining, acc, mult):
        nonlocal produced
        if remaining == 0:
            produced += 1
            if produced > limit:
                raise CapExceeded(f"more than {limit} class types")
            yield ClassType(tuple(acc)), mult
            return
        if ki == len(kinds):
            return
        d, tag, w, avail = kinds[ki]
        for used in range(remaining // w, -1, -1):
            for idxs in _multisets(parts, used, avail, 0):
                entries = [(d, tag, parts[i]) for i in idxs]
                m = _slot_multiplicity(avail, idxs) if idxs else 1
                yield from rec(ki + 1, remaining - w * used, acc + entries, mult * m)

    yield from rec(0, n, [], 1)


def class_type_centralizer(family, ct, q):
    return gl_centralizer_order(ct, q) if family == "GL" else gu_centralizer_order(ct, q)


def class_equation_check(family, n, q):
    """``(sum of multiplicity/|C|, number of classes)``; the first must be exactly 1."""
    total = Fraction(0)
    classes = 0
    for ct, mult in enumerate_class_types(family, n, q):
        total += Fraction(mult, class_type_centralizer(family, ct, q))
        classes += mult
    return total, classes


def min_centralizer_exact(family, n, q):
    """Smallest centralizer order over all classes (GL/GU by enumeration, else by the oracle)."""
    if family in ("GL", "GU"):
        if n == 0:
            return 1
        return min(class_type_centralizer(family, ct, q) for ct, _ in enumerate_class_types(family, n, q))
    from . import oracle

    G = oracle.build_group(family, n, q)
    return int(oracle.conjugacy_data(G).centralizers.min())


# --- group orders and unipotent counts ---

def _sign_of(kind):
    if kind in ("+", "plus", 1, "OPlus", "SOPlus"):
        return 1
    if kind in ("-", "minus", -1, "OMinus", "SOMinus"):
        return -1
    raise ValueError(f"need '+' or '-' for even-dimensional orthogonal groups, got {kind!r}")


def group_order(family, dim, q, kind=None):
    """|G| for GL, SL, PGL, PSL, GU, SU, PGU, PSU, Sp, O, SO, Omega (dim = natural module)."""
    prime_power(q)
    n = dim
    if family in ("GL", "SL", "PGL", "PSL"):
        gl = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))
        if family == "GL":
            return gl
        if family in ("SL", "PGL"):
            return exact_div(gl, q - 1)
        return exact_div(gl, (q - 1) * math.gcd(n, q - 1))
    if family in ("GU", "SU", "PGU", "PSU"):
        gu = q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))
        if family == "GU":
            return gu
        if family in ("SU", "PGU"):
            return exact_div(gu, q + 1)
        return exact_div(gu, (q + 1) * math.gcd(n, q + 1))
    if family == "Sp":
        if dim % 2:
            raise ValueError("symplectic dimension must be even")
        m = dim // 2
        return q ** (m * m) * prod(q ** (2 * j) - 1 for j in range(1, m + 1))
    if family in ("O", "SO", "Omega"):
        m = dim // 2
        if dim % 2:
            if q % 2 == 0:
                raise ValueError("odd-dimensional orthogonal groups need odd q here")
            o = 2 * q ** (m * m) * prod(q ** (2 * j) - 1 for j in range(1, m + 1))
        else:
            if dim < 2:
                raise ValueError("dimension too small")
            e = _sign_of(kind)
            o = 2 * q ** (m * m - m) * (q**m - e) * prod(q ** (2 * j) - 1 for j in range(1, m))
        if family == "O":
            return o
        if family == "SO":
            return exact_div(o, 2)
        # Omega: index 2 in SO for odd q; equal to the Dickson kernel for even q
        return exact_div(o, 2) if q % 2 == 0 else exact_div(o, 4)
    raise ValueError(f"unknown family {family!r}")


def unipotent_count(family, dim, q, kind=None):
    """Number of unipotent elements."""
    prime_power(q)
    if family in ("GL", "SL"):
        return q ** (dim * (dim - 1))
    if family in ("GU", "SU"):
        return q ** (dim * (dim - 1))
    if family == "Sp":
        if dim % 2:
            raise ValueError("symplectic dimension must be even")
        m = dim // 2
        return q ** (2 * m * m)
    if family == "O":
        m = dim // 2
        if dim % 2:
            if q % 2 == 0:
                raise ValueError("odd-dimensional orthogonal groups need odd q here")
            return q ** (2 * m * m)
        e = _sign_of(kind)
        if q % 2:
            return q ** (2 * (m * m - m))
        # q^(2m^2-2m+1) (1 + 1/q - e/q^m), cleared of denominators
        return q ** (2 * m * m - 3 * m + 1) * (q**m + q ** (m - 1) - e)
    raise ValueError(f"no unipotent count for {family!r}")


# --- closed-form lower bounds ---

@dataclass(frozen=True)
class BoundSpec:
    family: str
    n: int
    q: int
    value: float
    formulaTag: str

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError("a lower bound must be positive")


def _down(x):
    return x * (1 - SAFETY_MARGIN)


def _answer_root(m, q):
    return math.sqrt((1 - 1 / q) / (2 * math.e * (math.log(4 * m, q) + 4)))


def min_centralizer_lower_bound(family, n, q, kind="all", A=1.0, rank=None):
    """Lower bound on centralizer orders, rounded down by a relative margin.

    ``n`` is the matrix size for GL/GU and the module dimension for Sp/O/SO.
    ``kind`` selects the element class: "all", "unipotent" (algebraic-group
    bound) or "unipotent_combinatorial" (bound via unipotent counts).
    Exceptional and Chevalley bounds take the rank ``rank`` (defaults to n).
    """
    prime_power(q)
    if family == "GL" and kind == "all":
        v, tag = q**n * (1 - 1 / q) / (math.e * (1 + math.log(n + 1, q))), "GLsmallcent"
    elif family == "GU" and kind == "all":
        v, tag = q**n * math.sqrt((1 - 1 / q**2) / (math.e * (2 + math.log(n + 1, q)))), "Usmallcent"
    elif family in ("Sp", "O", "OPlus", "OMinus", "SO", "SOPlus", "SOMinus", "OOdd"):
        m = n // 2
        if family == "OOdd" and (n % 2 == 0 or q % 2 == 0):
            raise ValueError("OOdd needs odd dimension and odd q")
        if family != "OOdd" and n % 2:
            raise ValueError(f"{family} needs even dimension")
        ortho_even = family in ("O", "OPlus", "OMinus")
        if kind == "all":
            root = _answer_root(m, q)
            if family == "Sp":
                v, tag = q**m * root, "answer1"
            elif ortho_even:
                v, tag = 2 * q ** (m - 1) * root, "answer2"
            elif family == "OOdd":
                v, tag = q**m * root, "answer4"
            else:
                v, tag = q**m * root, "answer3"
        elif kind == "unipotent":
            if family == "Sp" or q % 2:
                v, tag = float(q**m), "centsize"
            elif ortho_even:
                v, tag = 2.0 * q ** (m - 1), "centsize3"
            else:
                raise ValueError("no unipotent bound for this family")
        elif kind == "unipotent_combinatorial":
            t = 1 - q**-2 - q**-4
            if family == "Sp":
                v, tag = q**m * t, "unipcentcomb1"
            elif q % 2:
                v, tag = float(q**m), "unipcentcomb2"
            elif ortho_even:
                v, tag = q ** (m - 1) * t, "unipcentcomb3"
            else:
                raise ValueError("no unipotent bound for this family")
        else:
            raise ValueError(f"unknown kind {kind!r}")
    elif family == "Exceptional":
        r = rank if rank is not None else n
        v, tag = q**r / 26, "except-centralizer"
    elif family == "Chevalley":
        r = rank if rank is not None else n
        v, tag = q**r / (A * min(q, r) * (1 + math.log(r, q))), "D"
    else:
        raise ValueError(f"no bound for family {family!r} with kind {kind!r}")
    return BoundSpec(family, n, q, _down(v), tag)


def compare_to_bound(exact, bound):
    """"pass" if exact >= bound, "inconclusive" within the safety margin, else "fail"."""
    value = bound.value if isinstance(bound, BoundSpec) else bound
    if exact >= value:
        return "pass"
    if exact >= value * (1 - 2 * SAFETY_MARGIN) / (1 - SAFETY_MARGIN):
        return "inconclusive"
    return "fail"
