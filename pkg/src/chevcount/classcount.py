"""Class numbers k(G) of finite classical groups from their generating functions.

Every count is a coefficient of an exact truncated power series (see
:mod:`chevcount.series`); linear combinations with fractional weights are
formed with integer weights first and divided exactly at the end.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from ._config import cap, exact_div
from .numth import divisors, iter_partitions, partition_count, phi_r, prime_power
from .series import INTEGER, POLY_Q, Atom, product_factors

# (1 - q t^i)^-1 and friends, reused across families
_INV_Q = Atom(-1, 1, q_pow=1, exponent=-1)
_INV_Q2 = Atom(-1, 2, q_pow=1, exponent=-1)
_INV_Q4 = Atom(-1, 4, q_pow=1, exponent=-1)

GENERATING_FUNCTIONS = {
    "gl": (Atom(-1, 1), _INV_Q),
    "gu": (Atom(1, 1), _INV_Q),
    "sp_odd": (Atom(1, 1, exponent=4), _INV_Q),
    "sp_even": (Atom(-1, 4), Atom(-1, 4, -2, exponent=-1), Atom(-1, 1, exponent=-1), _INV_Q),
    # O+(2n) + O-(2n), q odd: read at t^(2n)
    "o_sum_odd": (Atom(1, 2, -1, exponent=4), _INV_Q2),
    # O+(2n) - O-(2n), any q: read at t^n
    "o_diff": (Atom(-1, 2, -1), _INV_Q2),
    # O+(2n) + O-(2n), q even: read at t^n
    "o_sum_even": (Atom(1, 1), Atom(1, 2, -1, exponent=2), _INV_Q),
    # split-class part of SO+(2n) + SO-(2n), q odd
    "so_split_odd": (Atom(-1, 2, exponent=2), Atom(-1, 4, exponent=-2), _INV_Q2),
    # SO+(2n) - SO-(2n) for both parities of q: read at t^n
    "so_diff": (Atom(1, 1, exponent=-1), _INV_Q2),
    "so_odd_dim": (
        Atom(-1, 4, exponent=2),
        Atom(-1, 4, -2, exponent=-2),
        Atom(-1, 1, exponent=-2),
        _INV_Q,
    ),
    "so_even_a": (Atom(1, 2, -1, exponent=2), Atom(-1, 2, -1, exponent=-1), _INV_Q),
    "so_even_b": (Atom(1, 1, exponent=-1), _INV_Q),
    "omega_p1": (Atom(1, 2, exponent=-2), _INV_Q2),
    "omega_p3": (Atom(1, 2, -1, exponent=2), _INV_Q4),
    "omega_p4": (Atom(-1, 4, -2), _INV_Q4),
    "omega_p5": (
        Atom(-1, 8, exponent=2),
        Atom(-1, 8, -4, exponent=-2),
        Atom(-1, 2, exponent=-2),
        _INV_Q2,
    ),
}


@lru_cache(maxsize=4096)
def _series(name, q, trunc):
    ring = POLY_Q if q is None else INTEGER
    return product_factors(GENERATING_FUNCTIONS[name], trunc, ring, q)


def gf_coefficient(name, q, n):
    """Coefficient of t^n in the named generating function (q=None for a polynomial in q)."""
    if n < 0:
        return () if q is None else 0
    # round the truncation up so neighbouring n share one cached series
    limit = cap("series_poly" if q is None else "series_int")
    trunc = max(n, min(limit, -(-(n + 1) // 16) * 16))
    return _series(name, q, trunc)[n]


def _check_q(q):
    prime_power(q)
    return q


def _require_odd(q, what):
    _check_q(q)
    if q % 2 == 0:
        raise ValueError(f"{what} needs odd q, got q={q}")


def _require_even(q, what):
    _check_q(q)
    if q % 2:
        raise ValueError(f"{what} needs even q, got q={q}")


def k_gl(n, q=None):
    """k(GL(n,q)); with ``q=None`` the lowest-first coefficients of the polynomial in q."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if q is not None:
        _check_q(q)
    return gf_coefficient("gl", q, n)


def k_gu(n, q=None):
    """k(GU(n,q)); with ``q=None`` the lowest-first coefficients of the polynomial in q."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if q is not None:
        _check_q(q)
    return gf_coefficient("gu", q, n)


def k_typeA(variant, n, q):
    """Macdonald's divisor sums for SL, PGL, PSL and the unitary SU, PGU, PSU."""
    variant = variant.upper()
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_q(q)
    if variant in ("SL", "PGL", "PSL"):
        m, k = q - 1, k_gl
    elif variant in ("SU", "PGU", "PSU"):
        m, k = q + 1, k_gu
    else:
        raise ValueError(f"unknown type A variant {variant!r}")
    if variant in ("SL", "SU"):
        total = sum(phi_r(d, 2) * k(n // d, q) for d in divisors(gcd(n, m)))
        return exact_div(total, m)
    if variant in ("PGL", "PGU"):
        total = sum(phi_r(d, 1) * k(n // d, q) for d in divisors(gcd(n, m)))
        return exact_div(total, m)
    total = 0
    for d1 in divisors(m):
        for d2 in divisors(m):
            if n % (d1 * d2) == 0:
                total += phi_r(d1, 1) * phi_r(d2, 2) * k(n // (d1 * d2), q)
    return exact_div(total, m * gcd(n, m))


def k_between_sl_gl(n, q, j):
    """k(H) for SL(n,q) <= H <= GL(n,q) of index j in GL(n,q)."""
    _check_q(q)
    if j < 1 or (q - 1) % j:
        raise ValueError(f"index j={j} must divide q-1={q - 1}")
    total = sum(phi_r(d, 2) * k_gl(n // d, q) for d in divisors(gcd(j, n)))
    return exact_div(total, j)


def k_sp(dim, q):
    """k(Sp(dim,q)), dim = 2n."""
    if dim < 2 or dim % 2:
        raise ValueError("symplectic dimension must be even and >= 2")
    _check_q(q)
    return gf_coefficient("sp_odd" if q % 2 else "sp_even", q, dim // 2)


def _orth_even_dim(dim):
    if dim % 2 or dim < 4:
        raise ValueError("even-dimensional orthogonal groups need dim >= 4 (dimension 2 is refused)")
    return dim // 2


def k_o_even(dim, q):
    """``(k(O+(dim,q)), k(O-(dim,q)))`` for even dim >= 4."""
    n = _orth_even_dim(dim)
    _check_q(q)
    if q % 2:
        total = gf_coefficient("o_sum_odd", q, 2 * n)
    else:
        total = gf_coefficient("o_sum_even", q, n)
    diff = gf_coefficient("o_diff", q, n)
    return exact_div(total + diff, 2), exact_div(total - diff, 2)


def _so_even_pair(dim, q):
    n = _orth_even_dim(dim)
    _check_q(q)
    if q % 2:
        total = exact_div(3 * gf_coefficient("so_split_odd", q, 2 * n) + gf_coefficient("o_sum_odd", q, 2 * n), 2)
    else:
        a = gf_coefficient("so_even_a", q, n)
        b = gf_coefficient("so_even_b", q, n)
        total = exact_div(a + 3 * b, 2)
    diff = 2 * gf_coefficient("so_diff", q, n)
    return exact_div(total + diff, 2), exact_div(total - diff, 2)


def _sign(kind):
    if kind in ("+", "plus", 1):
        return "+"
    if kind in ("-", "minus", -1):
        return "-"
    raise ValueError(f"orthogonal type must be '+' or '-', got {kind!r}")


def k_so(dim, q, kind=None):
    """k(SO^kind(dim,q)); ``kind`` is '+'/'-' for even dim and ignored for odd dim."""
    if dim < 3:
        raise ValueError("orthogonal groups need dimension >= 3")
    if dim % 2:
        _require_odd(q, "SO(2n+1,q)")
        return gf_coefficient("so_odd_dim", q, dim // 2)
    plus, minus = _so_even_pair(dim, q)
    return plus if _sign(kind) == "+" else minus


def k_o_odd(dim, q):
    """k(O(2n+1,q)) = 2 k(SO(2n+1,q)), q odd."""
    if dim % 2 == 0:
        raise ValueError("k_o_odd needs odd dimension")
    return 2 * k_so(dim, q)


def omega_star_type(dim, q):
    """The type '*' whose Omega is given by a generating function (q odd, even dim)."""
    n = dim // 2
    return "+" if (q % 4 == 1 or n % 2 == 0) else "-"


def k_omega(dim, q, kind=None):
    """k(Omega^kind(dim,q)) for q odd; even dim >= 4 or odd dim >= 5."""
    _require_odd(q, "Omega")
    if dim % 2:
        if dim < 5:
            raise ValueError("odd-dimensional Omega needs dim >= 5")
        n = dim // 2
        num = 3 * gf_coefficient("omega_p3", q, 2 * n + 1) + 2 * gf_coefficient("omega_p5", q, 2 * n)
        return exact_div(num, 4)
    n = _orth_even_dim(dim)
    kind = _sign(kind)
    star = omega_star_type(dim, q)
    if kind != star:
        return exact_div(k_so(dim, q, kind), 2)
    j = 2 if star == "+" else 1
    num = (
        3 * gf_coefficient("omega_p1", q, 2 * n)
        + gf_coefficient("o_sum_odd", q, 2 * n)
        + 12 * gf_coefficient("omega_p3", q, 2 * n)
        + 8 * j * gf_coefficient("omega_p4", q, 2 * n)
    )
    return exact_div(num, 8)


# Polynomial upper bounds for exceptional groups, highest power first.
EXCEPTIONAL_TABLE = {
    "2B2": ((1, 3), (2, "odd")),
    "2G2": ((1, 8), (3, "odd")),
    "G2": ((1, 2, 9), None),
    "2F4": ((1, 4, 17), (2, "odd")),
    "3D4": ((1, 1, 1, 1, 6), None),
    "F4": ((1, 2, 7, 15, 31), None),
    "E6": ((1, 1, 2, 2, 15, 21, 60), None),
    "2E6": ((1, 1, 2, 4, 18, 26, 62), None),
    "E7": ((1, 1, 2, 7, 17, 35, 71, 103), None),
    "E8": ((1, 1, 2, 3, 10, 16, 40, 67, 112), None),
}


def exceptional_rank(family):
    return len(EXCEPTIONAL_TABLE[_exc_key(family)][0]) - 1


def _exc_key(family):
    key = family.replace("^", "").replace("_", "").upper()
    if key not in EXCEPTIONAL_TABLE:
        raise ValueError(f"unknown exceptional family {family!r}")
    return key


def exceptional_q_allowed(family, q):
    rule = EXCEPTIONAL_TABLE[_exc_key(family)][1]
    p, k = prime_power(q)
    if rule is None:
        return True
    need_p, parity = rule
    return p == need_p and k % 2 == 1


def k_exceptional_upper(family, q):
    """Polynomial UPPER BOUND on k(G) for an exceptional group (not k itself)."""
    coeffs, _ = EXCEPTIONAL_TABLE[_exc_key(family)]
    if not exceptional_q_allowed(family, q):
        raise ValueError(f"q={q} is not allowed for {family}")
    out = 0
    for c in coeffs:
        out = out * q + c
    return out


def k_sym_alt(m):
    """``(k(S_m), k(A_m))``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    k_s = partition_count(m)
    even = 0
    split = 0
    for lam in iter_partitions(m):
        if (m - len(lam)) % 2 == 0:
            even += 1
            if all(x % 2 for x in lam) and len(set(lam)) == len(lam):
                split += 1
    return k_s, even + split


FAMILIES = (
    "GL", "SL", "PGL", "PSL", "BetweenSLGL", "GU", "SU", "PGU", "PSU", "Sp",
    "OPlus", "OMinus", "SOPlus", "SOMinus", "SOOdd", "OOdd",
    "OmegaPlus", "OmegaMinus", "OmegaOdd", "SymmetricGroup", "AlternatingGroup", "Exceptional",
)


@dataclass(frozen=True)
class GroupSpec:
    """A family plus its parameters.

    ``n`` is the matrix size for type A, the dimension of the natural module for
    Sp/O/SO/Omega, the degree for Sym/Alt; ``extra`` is the index j for
    BetweenSLGL or the type tag (e.g. "E8") for Exceptional.
    """

    family: str
    n: int
    q: Optional[int] = None
    extra: object = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family not in ("SymmetricGroup", "AlternatingGroup"):
            if self.q is None:
                raise ValueError(f"{self.family} needs q")
            prime_power(self.q)


def class_number(spec):
    """``(value, label)`` where label is "exact" or "upper_bound"."""
    f, n, q = spec.family, spec.n, spec.q
    if f == "GL":
        return k_gl(n, q), "exact"
    if f == "GU":
        return k_gu(n, q), "exact"
    if f in ("SL", "PGL", "PSL", "SU", "PGU", "PSU"):
        return k_typeA(f, n, q), "exact"
    if f == "BetweenSLGL":
        return k_between_sl_gl(n, q, spec.extra), "exact"
    if f == "Sp":
        return k_sp(n, q), "exact"
    if f in ("OPlus", "OMinus"):
        plus, minus = k_o_even(n, q)
        return (plus if f == "OPlus" else minus), "exact"
    if f == "SOPlus":
        return k_so(n, q, "+"), "exact"
    if f == "SOMinus":
        return k_so(n, q, "-"), "exact"
    if f == "SOOdd":
        if n % 2 == 0:
            raise ValueError("SOOdd needs odd dimension")
        return k_so(n, q), "exact"
    if f == "OOdd":
        return k_o_odd(n, q), "exact"
    if f == "OmegaPlus":
        return k_omega(n, q, "+"), "exact"
    if f == "OmegaMinus":
        return k_omega(n, q, "-"), "exact"
    if f == "OmegaOdd":
        if n % 2 == 0:
            raise ValueError("OmegaOdd needs odd dimension")
        return k_omega(n, q), "exact"
    if f == "SymmetricGroup":
        return k_sym_alt(n)[0], "exact"
    if f == "AlternatingGroup":
        return k_sym_alt(n)[1], "exact"
    return k_exceptional_upper(spec.extra, q), "upper_bound"
