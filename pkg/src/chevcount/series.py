"""Truncated power series in ``t`` with exact coefficients.

Coefficients live either in the integers (``INTEGER``) or in the dense
polynomial ring Z[q] (``POLY_Q``), where a coefficient is a tuple of ints,
lowest power of q first, with no trailing zeros.

Infinite products are described by :class:`Atom` lists; each atom stands for
``prod_i (1 + sign * q^(q_pow + q_step*i) * t^(t_shift + t_step*i))^exponent``
over ``i = 1, 2, ...`` (or ``i = 1..count``).
"""

from dataclasses import dataclass
from typing import Optional

from ._config import CapExceeded, cap


class IntegerRing:
    name = "Integer"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def monomial(self, a, k, q):
        if q is None:
            raise ValueError("the Integer ring needs a numeric q")
        return a * q**k

    def times_monomial(self, x, a, k, q):
        return x * a * q**k

    def is_one(self, a):
        return a == 1

    def __repr__(self):
        return "INTEGER"


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class PolyRing:
    name = "PolyInQ"
    zero = ()
    one = (1,)

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return _trim(out)

    def neg(self, a):
        return tuple(-x for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim(out)

    def from_int(self, n):
        return _trim([n])

    def monomial(self, a, k, q=None):
        return _trim([0] * k + [a])

    def times_monomial(self, x, a, k, q=None):
        if not x:
            return ()
        return (0,) * k + tuple(a * c for c in x)

    def is_one(self, a):
        return a == (1,)

    def __repr__(self):
        return "POLY_Q"


INTEGER = IntegerRing()
POLY_Q = PolyRing()


def poly_eval(coeffs, q):
    """Evaluate a lowest-first coefficient tuple at ``q``."""
    out = 0
    for c in reversed(coeffs):
        out = out * q + c
    return out


def _check_cap(trunc, ring):
    limit = cap("series_poly" if ring is POLY_Q else "series_int")
    if trunc > limit:
        raise CapExceeded(f"truncation order {trunc} exceeds cap {limit} for {ring.name}")


class TruncSeries:
    """An immutable series ``c_0 + c_1 t + ... + c_N t^N`` (N = ``trunc``)."""

    __slots__ = ("coeffs", "trunc", "ring")

    def __init__(self, coeffs, trunc, ring=INTEGER):
        if trunc < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = list(coeffs)[: trunc + 1]
        if ring is POLY_Q:
            coeffs = [_trim(c) if isinstance(c, (tuple, list)) else ring.from_int(c) for c in coeffs]
        coeffs += [ring.zero] * (trunc + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def one(cls, trunc, ring=INTEGER):
        return cls([ring.one], trunc, ring)

    def __getitem__(self, n):
        return self.coeffs[n]

    def coeff(self, n):
        if n < 0 or n > self.trunc:
            raise IndexError(f"t^{n} is outside truncation order {self.trunc}")
        return self.coeffs[n]

    def __len__(self):
        return self.trunc + 1

    def _compatible(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.trunc != self.trunc or other.ring is not self.ring:
            raise ValueError("series have mismatched truncation order or ring")

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.trunc, self.ring.name, self.coeffs) == (other.trunc, other.ring.name, other.coeffs)

    def __hash__(self):
        return hash((self.trunc, self.ring.name, self.coeffs))

    def __add__(self, other):
        self._compatible(other)
        r = self.ring
        return TruncSeries([r.add(a, b) for a, b in zip(self.coeffs, other.coeffs)], self.trunc, r)

    def __sub__(self, other):
        self._compatible(other)
        r = self.ring
        return TruncSeries([r.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)], self.trunc, r)

    def __neg__(self):
        return TruncSeries([self.ring.neg(a) for a in self.coeffs], self.trunc, self.ring)

    def scale(self, c):
        """Multiply every coefficient by the integer ``c``."""
        r = self.ring
        c = r.from_int(c)
        return TruncSeries([r.mul(c, a) for a in self.coeffs], self.trunc, r)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t^k`` (k >= 0), dropping what falls past the truncation."""
        return TruncSeries([self.ring.zero] * k + list(self.coeffs), self.trunc, self.ring)

    def evaluate_q(self, q):
        """Map a POLY_Q series to the INTEGER series obtained by setting q."""
        if self.ring is not POLY_Q:
            raise ValueError("evaluate_q needs a POLY_Q series")
        return TruncSeries([poly_eval(c, q) for c in self.coeffs], self.trunc, INTEGER)

    def __repr__(self):
        terms = [f"{c!r}*t^{i}" for i, c in enumerate(self.coeffs) if c not in (0, ())]
        return f"TruncSeries({' + '.join(terms) or '0'}; N={self.trunc}, {self.ring!r})"


def mul(a, b):
    """Cauchy product truncated at the common order."""
    a._compatible(b)
    r, n = a.ring, a.trunc
    out = [r.zero] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if x == r.zero:
            continue
        for j in range(n + 1 - i):
            y = b.coeffs[j]
            if y != r.zero:
                out[i + j] = r.add(out[i + j], r.mul(x, y))
    return TruncSeries(out, n, r)


def inv(a):
    """Multiplicative inverse; the constant term must be 1."""
    r, n = a.ring, a.trunc
    if not r.is_one(a.coeffs[0]):
        raise ValueError("inv needs constant term 1")
    out = [r.one] + [r.zero] * n
    for k in range(1, n + 1):
        acc = r.zero
        for j in range(1, k + 1):
            if a.coeffs[j] != r.zero:
                acc = r.add(acc, r.mul(a.coeffs[j], out[k - j]))
        out[k] = r.neg(acc)
    return TruncSeries(out, n, r)


@dataclass(frozen=True)
class Atom:
    sign: int
    t_step: int
    t_shift: int = 0
    q_pow: int = 0
    q_step: int = 0
    exponent: int = 1
    count: Optional[int] = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.count is None and self.t_step < 1:
            raise ValueError("an infinite atom needs t_step >= 1")

    def instances(self, trunc):
        """Yield ``(c_sign, q_exp, t_exp)`` for each factor that can touch t^0..t^trunc."""
        i = 1
        while self.count is None or i <= self.count:
            b = self.t_shift + self.t_step * i
            k = self.q_pow + self.q_step * i
            if b < 1 or k < 0:
                raise ValueError(f"atom {self} gives an invalid factor at i={i}")
            if b > trunc:
                if self.t_step >= 1:
                    break
            else:
                yield self.sign, k, b
            i += 1


def _mul_binomial(c, b, ring, c_sign, k, q):
    # in place: c *= (1 + c_sign q^k t^b)
    for j in range(len(c) - 1, b - 1, -1):
        if c[j - b] != ring.zero:
            c[j] = ring.add(c[j], ring.times_monomial(c[j - b], c_sign, k, q))


def _div_binomial(c, b, ring, c_sign, k, q):
    # in place: c /= (1 + c_sign q^k t^b)
    for j in range(b, len(c)):
        if c[j - b] != ring.zero:
            c[j] = ring.sub(c[j], ring.times_monomial(c[j - b], c_sign, k, q))


def product_factors(atoms, trunc, ring=INTEGER, q=None):
    """Expand ``prod(atoms)`` to order ``trunc``.

    With ``ring=INTEGER`` the value of ``q`` must be given; with ``POLY_Q`` it
    is the formal variable.
    """
    _check_cap(trunc, ring)
    if ring is INTEGER and q is None and any(a.q_pow or a.q_step for a in atoms):
        raise ValueError("numeric q required for the Integer ring")
    c = [ring.one] + [ring.zero] * trunc
    for atom in atoms:
        for c_sign, k, b in atom.instances(trunc):
            step = _mul_binomial if atom.exponent > 0 else _div_binomial
            for _ in range(abs(atom.exponent)):
                step(c, b, ring, c_sign, k, q)
    return TruncSeries(c, trunc, ring)


def pentagonal_series(trunc):
    """``1 + sum_n (-1)^n (x^(n(3n-1)/2) + x^(n(3n+1)/2))``, truncated."""
    c = [0] * (trunc + 1)
    c[0] = 1
    n = 1
    while n * (3 * n - 1) // 2 <= trunc:
        sign = -1 if n % 2 else 1
        for e in (n * (3 * n - 1) // 2, n * (3 * n + 1) // 2):
            if e <= trunc:
                c[e] += sign
        n += 1
    return TruncSeries(c, trunc)


def gauss_triangular_series(trunc):
    """``sum_{n>=0} t^(n(n+1)/2)``, truncated."""
    c = [0] * (trunc + 1)
    n = 0
    while n * (n + 1) // 2 <= trunc:
        c[n * (n + 1) // 2] += 1
        n += 1
    return TruncSeries(c, trunc)


def jacobi_square_series(trunc):
    """``sum_{n in Z} t^(n^2)``, truncated."""
    c = [0] * (trunc + 1)
    n = 0
    while n * n <= trunc:
        c[n * n] += 1 if n == 0 else 2
        n += 1
    return TruncSeries(c, trunc)
