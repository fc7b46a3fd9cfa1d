"""Brute-force matrix groups over small finite fields.

Everything here is explicit: a group is the sorted array of all its
matrices. This is the ground truth the formula modules are checked against,
so it deliberately shares no code with them beyond :mod:`numth`.

Matrices act on column vectors. Field elements are integers ``0..q-1``
encoding coefficient vectors over F_p in base p (so the prime subfield is
``0..p-1`` with its usual arithmetic).
"""

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._config import CapExceeded, cap
from .numth import factorize, prime_power

# Frozen moduli, lowest coefficient first.
FROZEN_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
}

_CHUNK = 1 << 17


def _poly_mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod_ = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod_[i + j] = (prod_[i + j] + x * y) % p
    for i in range(len(prod_) - 1, k - 1, -1):
        c = prod_[i]
        if c:
            for j in range(k + 1):
                prod_[i - k + j] = (prod_[i - k + j] - c * modulus[j]) % p
    return prod_[:k]


def _is_irreducible(modulus, p):
    k = len(modulus) - 1
    # no monic factor of degree 1..k//2: brute force over the quotient ring for zero divisors
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            # remainder of modulus by f
            r = list(modulus)
            for i in range(len(r) - 1, d - 1, -1):
                c = r[i]
                if c:
                    for j in range(d + 1):
                        r[i - d + j] = (r[i - d + j] - c * f[j]) % p
            if not any(r[:d]):
                return False
    return True


def _find_modulus(p, k):
    for low in itertools.product(range(p), repeat=k):
        m = tuple(low) + (1,)
        if m[0] and _is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")


class FqField:
    """F_q with full lookup tables, checked exhaustively on construction."""

    def __init__(self, q):
        p, k = prime_power(q)
        if k > 4 or q > 81:
            raise ValueError("oracle fields need q = p^k with k <= 4 and q <= 81")
        self.q, self.p, self.k = q, p, k
        self.modulus = FROZEN_MODULI.get(q) or ((0, 1) if k == 1 else _find_modulus(p, k))
        if k == 1:
            self.modulus = (0, 1)
        digits = np.array([[(x // p**i) % p for i in range(k)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        self.sub = self.add[:, self.neg]
        if k == 1:
            self.mul = np.outer(np.arange(q), np.arange(q)) % p
        else:
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    c = _poly_mulmod(list(digits[a]), list(digits[b]), self.modulus, p)
                    mul[a, b] = mul[b, a] = int(np.dot(c, weights))
            self.mul = mul
        self.add = self.add.astype(np.int64)
        self.mul = self.mul.astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            (b,) = np.nonzero(self.mul[a] == 1)[0]
            inv[a] = b
        self.inv = inv
        self.frob = np.array([self.power(x, p) for x in range(q)], dtype=np.int64)
        self._verify()

    def power(self, x, e):
        out = 1
        for _ in range(e):
            out = int(self.mul[out, x])
        return out

    def frob_power(self, e):
        """Table of x -> x^(p^e)."""
        t = np.arange(self.q)
        for _ in range(e):
            t = self.frob[t]
        return t

    def element_order(self, x):
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        n, y = 1, x
        while y != 1:
            y = int(self.mul[y, x])
            n += 1
        return n

    def primitive_element(self):
        for x in range(1, self.q):
            if self.element_order(x) == self.q - 1:
                return x
        raise AssertionError("no primitive element")

    def _verify(self):
        q, A, M = self.q, self.add, self.mul
        r = np.arange(q)
        assert (A[0] == r).all() and (M[1] == r).all()
        assert (A == A.T).all() and (M == M.T).all()
        assert (A[r, self.neg] == 0).all()
        assert (M[r[1:], self.inv[1:]] == 1).all()
        a, b, c = r[:, None, None], r[None, :, None], r[None, None, :]
        assert (A[A[a, b], c] == A[a, A[b, c]]).all()
        assert (M[M[a, b], c] == M[a, M[b, c]]).all()
        assert (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()
        # Frobenius is a field automorphism
        assert len(set(self.frob.tolist())) == q
        assert (self.frob[A] == A[self.frob[:, None], self.frob[None, :]]).all()
        assert (self.frob[M] == M[self.frob[:, None], self.frob[None, :]]).all()

    def __repr__(self):
        return f"FqField({self.q})"


@lru_cache(maxsize=None)
def field(q):
    return FqField(q)


# --- batched matrix arithmetic ---

def matmul(F, A, B):
    """Batched product; A is (N,d,d), B is (N,d,d) or a single (d,d)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.k == 1:
        if B.ndim == 2:
            return (A @ B) % F.p
        return np.einsum("nij,njk->nik", A, B) % F.p
    if B.ndim == 2:
        B = B[None]
    d = A.shape[-1]
    acc = F.mul[A[:, :, 0][:, :, None], B[:, 0, :][:, None, :]]
    for j in range(1, d):
        acc = F.add[acc, F.mul[A[:, :, j][:, :, None], B[:, j, :][:, None, :]]]
    return acc


def identity(d):
    return np.eye(d, dtype=np.int64)


def batch_rank_det(F, M):
    """Ranks and determinants of a batch of square matrices (Gaussian elimination)."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim == 2:
        A = A[None]
    N, d, _ = A.shape
    rank = np.zeros(N, dtype=np.int64)
    used = np.zeros((N, d), dtype=bool)
    pivrow = np.full((N, d), -1, dtype=np.int64)
    pivval = np.ones(N, dtype=np.int64)
    for c in range(d):
        cand = (A[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        idx = np.nonzero(has)[0]
        if idx.size == 0:
            continue
        piv = np.argmax(cand[idx], axis=1)
        prow = A[idx, piv, :]
        pv = prow[:, c]
        pivval[idx] = F.mul[pivval[idx], pv]
        prow = F.mul[F.inv[pv][:, None], prow]
        factor = A[idx, :, c]
        newA = F.sub[A[idx], F.mul[factor[:, :, None], prow[:, None, :]]]
        newA[np.arange(idx.size), piv, :] = prow
        A[idx] = newA
        used[idx, piv] = True
        pivrow[idx, c] = piv
        rank[idx] += 1
    det = np.zeros(N, dtype=np.int64)
    full = rank == d
    if full.any():
        P = pivrow[full]
        inversions = np.zeros(P.shape[0], dtype=np.int64)
        for i in range(d):
            for j in range(i + 1, d):
                inversions += P[:, i] > P[:, j]
        sign = np.where(inversions % 2 == 0, 1, F.neg[1])
        det[full] = F.mul[sign, pivval[full]]
    return rank, det


def determinants(F, M):
    return batch_rank_det(F, M)[1]


def ranks(F, M):
    return batch_rank_det(F, M)[0]


def inverse(F, g):
    """Inverse of one matrix by Gauss-Jordan."""
    d = g.shape[0]
    A = np.concatenate([np.asarray(g, dtype=np.int64), identity(d)], axis=1)
    for c in range(d):
        rows = [r for r in range(c, d) if A[r, c]]
        if not rows:
            raise ValueError("singular matrix")
        r = rows[0]
        A[[c, r]] = A[[r, c]]
        A[c] = F.mul[F.inv[A[c, c]], A[c]]
        for r in range(d):
            if r != c and A[r, c]:
                A[r] = F.sub[A[r], F.mul[A[r, c], A[c]]]
    return A[:, d:]


# --- group containers ---

def _key_weights(q, d):
    if d * d * math.log2(q) >= 62:
        raise CapExceeded(f"matrices of size {d} over F_{q} are too large to key")
    return (q ** np.arange(d * d, dtype=np.int64))[::-1].copy()


def _raw_keys(q, mats):
    d = mats.shape[-1]
    return mats.reshape(len(mats), d * d).astype(np.int64) @ _key_weights(q, d)


def _scalar_canonical(F, mats, scalars):
    # replace each matrix by the scalar multiple with the smallest key
    best = mats
    best_keys = _raw_keys(F.q, mats)
    for s in scalars:
        if s == 1:
            continue
        cand = F.mul[s, mats]
        k = _raw_keys(F.q, cand)
        better = k < best_keys
        if better.any():
            best = np.where(better[:, None, None], cand, best)
            best_keys = np.where(better, k, best_keys)
    return best, best_keys


@dataclass(eq=False)
class OracleGroup:
    """An explicit matrix group: ``elements`` sorted by key, with generators.

    With ``scalars`` set, elements are cosets of that scalar subgroup, each
    stored by its canonical representative (used for projective groups).
    """

    field: FqField
    dim: int
    elements: np.ndarray
    keys: np.ndarray
    generators: list
    form_tag: Optional[str] = None
    scalars: Optional[tuple] = None
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def order(self):
        return len(self.keys)

    def canonical(self, mats):
        mats = np.asarray(mats, dtype=np.int64)
        if mats.ndim == 2:
            mats = mats[None]
        if self.scalars:
            return _scalar_canonical(self.field, mats, self.scalars)
        return mats, _raw_keys(self.field.q, mats)

    def index_of(self, mats):
        """Indices of ``mats`` in ``elements`` (-1 where absent)."""
        _, k = self.canonical(mats)
        pos = np.searchsorted(self.keys, k)
        pos = np.minimum(pos, len(self.keys) - 1)
        return np.where(self.keys[pos] == k, pos, -1)

    def contains(self, mats):
        return self.index_of(mats) >= 0

    def mul(self, A, B):
        return self.canonical(matmul(self.field, A, B))[0]

    @property
    def identity_index(self):
        return int(self.index_of(identity(self.dim))[0])

    def __repr__(self):
        return f"OracleGroup({self.name or '?'}, order={self.order}, dim={self.dim}, q={self.field.q})"


def _element_cap(limit):
    return cap("elements") if limit is None else limit


def close_group(generators, F, limit=None, scalars=None, form_tag=None, name=""):
    """Breadth-first closure of ``generators`` (right multiplication)."""
    limit = _element_cap(limit)
    gens = [np.asarray(g, dtype=np.int64) % F.q for g in generators]
    if not gens:
        raise ValueError("need at least one generator (pass the identity for the trivial group)")
    d = gens[0].shape[0]
    if any(g.shape != (d, d) for g in gens):
        raise ValueError("generators must be square matrices of one size")
    if (determinants(F, np.stack(gens)) == 0).any():
        raise ValueError("singular generator")
    tmp = OracleGroup(F, d, np.zeros((0, d, d), np.int64), np.zeros(0, np.int64), gens, scalars=scalars)
    start, k0 = tmp.canonical(identity(d))
    known_keys = k0
    known_elems = [start]
    frontier = start
    while len(frontier):
        cands = []
        for g in gens:
            for i in range(0, len(frontier), _CHUNK):
                cands.append(tmp.canonical(matmul(F, frontier[i:i + _CHUNK], g)))
        mats = np.concatenate([c[0] for c in cands])
        ks = np.concatenate([c[1] for c in cands])
        ks, first = np.unique(ks, return_index=True)
        mats = mats[first]
        pos = np.searchsorted(known_keys, ks)
        pos = np.minimum(pos, len(known_keys) - 1)
        fresh = known_keys[pos] != ks
        frontier = mats[fresh]
        if len(frontier):
            known_keys = np.concatenate([known_keys, ks[fresh]])
            known_elems.append(frontier)
            order = np.argsort(known_keys, kind="stable")
            known_keys = known_keys[order]
            all_e = np.concatenate(known_elems)[order]
            known_elems = [all_e]
            if len(known_keys) > limit:
                raise CapExceeded(f"group exceeds the element cap {limit}")
    elems = np.concatenate(known_elems)
    order = np.argsort(known_keys, kind="stable")
    return OracleGroup(F, d, elems[order].astype(np.int64), known_keys[order], gens, form_tag, scalars, name)


def group_from_elements(F, mats, generators=None, form_tag=None, scalars=None, name="", verify=True, seed=0):
    """Wrap an explicit element list; a small generating set is found if none is given."""
    tmp = OracleGroup(F, mats.shape[-1], mats, np.zeros(0, np.int64), [], scalars=scalars)
    mats, ks = tmp.canonical(mats)
    ks, first = np.unique(ks, return_index=True)
    mats = mats[first]
    G = OracleGroup(F, mats.shape[-1], mats, ks, list(generators or []), form_tag, scalars, name)
    if not G.generators:
        G.generators = _find_generators(G, seed)
    elif verify:
        H = close_group(G.generators, F, limit=G.order, scalars=scalars)
        if H.order != G.order or not np.array_equal(H.keys, G.keys):
            raise ValueError("given generators do not generate the element set")
    return G


def _find_generators(G, seed=0):
    rng = np.random.default_rng(seed)
    if G.order == 1:
        return [G.elements[0]]
    gens = []
    for attempt in range(64):
        gens.append(G.elements[rng.integers(G.order)])
        if len(gens) < 2:
            continue
        try:
            H = close_group(gens, G.field, limit=G.order, scalars=G.scalars)
        except CapExceeded:
            raise ValueError("element set is not closed under multiplication") from None
        if H.order == G.order:
            if not np.array_equal(H.keys, G.keys):
                raise ValueError("element set is not a group")
            return gens
    raise RuntimeError("could not find a generating set")


# --- forms and isometry groups ---

@dataclass(frozen=True)
class FormSpec:
    """A nondegenerate form on F^dim.

    ``gram`` is the Gram matrix of the bilinear (or polar, or hermitian) form;
    for ``quadratic`` the form is x^T upper x with ``upper`` upper triangular.
    ``hermitian`` forms live over F_{q^2} and are sesquilinear in the second slot.
    """

    kind: str
    dim: int
    q: int
    gram: tuple
    upper: Optional[tuple] = None
    type: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("symmetricBilinear", "alternating", "quadratic", "hermitian"):
            raise ValueError(f"unknown form kind {self.kind!r}")


def _least_nonsquare(F):
    squares = {int(F.mul[x, x]) for x in range(1, F.q)}
    return min(x for x in range(1, F.q) if x not in squares)


def _abs_trace(F, x):
    t, y = 0, x
    for _ in range(F.k):
        t = int(F.add[t, y])
        y = int(F.frob[y])
    return t


def standard_form(kind, dim, q, type=None):
    """The fixed forms used for every oracle group."""
    F = field(q)
    G = np.zeros((dim, dim), dtype=np.int64)
    if kind == "alternating":
        if dim % 2:
            raise ValueError("alternating forms need even dimension")
        for i in range(0, dim, 2):
            G[i, i + 1] = 1
            G[i + 1, i] = F.neg[1]
        return FormSpec(kind, dim, q, tuple(map(tuple, G)))
    if kind == "symmetricBilinear":
        if q % 2 == 0:
            raise ValueError("use a quadratic form in characteristic 2")
        h = dim // 2
        if dim % 2:
            type = "odd"
        for i in range(h - (1 if type == "minus" else 0)):
            G[2 * i, 2 * i + 1] = G[2 * i + 1, 2 * i] = 1
        if dim % 2:
            G[dim - 1, dim - 1] = 1
        elif type == "minus":
            nu = _least_nonsquare(F)
            G[dim - 2, dim - 2] = 1
            G[dim - 1, dim - 1] = F.neg[nu]
        elif type != "plus":
            raise ValueError("even-dimensional symmetric forms need type plus or minus")
        return FormSpec(kind, dim, q, tuple(map(tuple, G)), type=type)
    if kind == "quadratic":
        if q % 2 or dim % 2:
            raise ValueError("quadratic forms here are for even q and even dimension")
        U = np.zeros((dim, dim), dtype=np.int64)
        for i in range(0, dim, 2):
            U[i, i + 1] = 1
        if type == "minus":
            delta = next(x for x in range(1, q) if _abs_trace(F, x) == 1)
            U[dim - 2, dim - 2] = 1
            U[dim - 1, dim - 1] = delta
        elif type != "plus":
            raise ValueError("quadratic forms need type plus or minus")
        P = F.add[U, U.T]
        return FormSpec(kind, dim, q, tuple(map(tuple, P)), upper=tuple(map(tuple, U)), type=type)
    if kind == "hermitian":
        return FormSpec(kind, dim, q * q, tuple(map(tuple, identity(dim))), type=None)
    raise ValueError(f"unknown form kind {kind!r}")


def _all_vectors(F, d):
    return np.array(list(itertools.product(range(F.q), repeat=d)), dtype=np.int64)


def _bilinear_rows(F, rows, gram):
    # rows (S,d) -> r = rows^T gram, so B(row, y) = r . y
    return matmul(F, rows[:, None, :], gram)[:, 0, :]


def _dot_all(F, r, Vt):
    # (S,d) x (M,d) -> (S,M) of sum_k r_k * V_k
    acc = F.mul[r[:, 0][:, None], Vt[None, :, 0]]
    for k in range(1, r.shape[1]):
        acc = F.add[acc, F.mul[r[:, k][:, None], Vt[None, :, k]]]
    return acc


def _rowwise_dot(F, r, W):
    acc = F.mul[r[:, 0], W[:, 0]]
    for k in range(1, r.shape[1]):
        acc = F.add[acc, F.mul[r[:, k], W[:, k]]]
    return acc


def isometry_group(form, limit=None, name=""):
    """All matrices preserving ``form``, by level-wise backtracking on basis images."""
    limit = _element_cap(limit)
    F = field(form.q)
    d = form.dim
    gram = np.array(form.gram, dtype=np.int64)
    V = _all_vectors(F, d)
    M = len(V)
    Vt = V
    if form.kind == "hermitian":
        conj = F.frob_power(F.k // 2)
        Vt = conj[V]
    # value of the "diagonal" condition on every vector
    if form.kind == "alternating":
        diag, e_diag = None, None
    else:
        U = np.array(form.upper if form.kind == "quadratic" else form.gram, dtype=np.int64)
        diag = np.empty(M, dtype=np.int64)
        for i in range(0, M, 4096):
            diag[i:i + 4096] = _rowwise_dot(F, _bilinear_rows(F, V[i:i + 4096], U), Vt[i:i + 4096])
        e_diag = [int(U[i, i]) for i in range(d)]
    nonzero = np.any(V != 0, axis=1)
    states = np.zeros((1, 0), dtype=np.int64)
    for level in range(d):
        new_states = []
        base = nonzero.copy()
        if diag is not None:
            base &= diag == e_diag[level]
        for s0 in range(0, len(states), max(1, (1 << 22) // M)):
            S = states[s0:s0 + max(1, (1 << 22) // M)]
            mask = np.broadcast_to(base, (len(S), M)).copy()
            for i in range(level):
                r = _bilinear_rows(F, V[S[:, i]], gram)
                vals = _dot_all(F, r, Vt)
                mask &= vals == gram[i, level]
            si, ci = np.nonzero(mask)
            new_states.append(np.concatenate([S[si], ci[:, None]], axis=1))
        states = np.concatenate(new_states) if new_states else np.zeros((0, level + 1), np.int64)
        if len(states) > 4 * limit:
            raise CapExceeded(f"isometry search exceeds the element cap {limit}")
    mats = np.transpose(V[states], (0, 2, 1))
    _, det = batch_rank_det(F, mats)
    mats = mats[det != 0]
    if len(mats) > limit:
        raise CapExceeded(f"group exceeds the element cap {limit}")
    tag = f"{form.kind}:{form.type}" if form.type else form.kind
    return group_from_elements(F, mats, form_tag=tag, name=name)


# --- subgroups ---

def subgroup(G, mask, name=""):
    """The subgroup of elements selected by ``mask`` (closure is checked)."""
    mats = G.elements[mask]
    return group_from_elements(G.field, mats, form_tag=G.form_tag, scalars=G.scalars, name=name)


def determinant_kernel(G, name=""):
    return subgroup(G, determinants(G.field, G.elements) == 1, name or f"det-kernel of {G.name}")


def dickson_invariant(F, mats):
    """rank(g - 1) mod 2."""
    d = mats.shape[-1]
    shifted = F.sub[mats, identity(d)[None]]
    return ranks(F, shifted) % 2


def dickson_kernel(G, name=""):
    return subgroup(G, dickson_invariant(G.field, G.elements) == 0, name or f"Dickson kernel of {G.name}")


def _commutator(F, a, b):
    ai, bi = inverse(F, a), inverse(F, b)
    return matmul(F, matmul(F, matmul(F, ai[None], bi), a), b)[0]


def is_normal(G, N):
    for g in G.generators:
        gi = inverse(G.field, g)
        for i in range(0, N.order, _CHUNK):
            conj = G.mul(G.mul(np.broadcast_to(gi, N.elements[i:i + _CHUNK].shape), N.elements[i:i + _CHUNK]), g)
            if not N.contains(conj).all():
                return False
    return True


def derived_subgroup(G, name=""):
    """Normal closure of the commutators of generators."""
    F = G.field
    gens = [_commutator(F, a, b) for a in G.generators for b in G.generators]
    gens = [g for g in gens if not np.array_equal(g, identity(G.dim))] or [identity(G.dim)]
    while True:
        H = close_group(gens, F, limit=G.order, scalars=G.scalars)
        added = False
        for g in G.generators:
            gi = inverse(F, g)
            for h in list(H.generators):
                c = G.mul(G.mul(gi[None], h), g)[0]
                if not H.contains(c)[0]:
                    gens.append(c)
                    added = True
        if not added:
            H.name = name or f"derived subgroup of {G.name}"
            H.form_tag = G.form_tag
            return H


# --- conjugacy ---

@dataclass
class ClassData:
    labels: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray
    centralizers: np.ndarray
    orders: np.ndarray
    p_prime: np.ndarray
    p_power: np.ndarray

    @property
    def k(self):
        return len(self.reps)


def conjugation_permutation(G, g):
    gi = inverse(G.field, g)
    out = np.empty(G.order, dtype=np.int64)
    for i in range(0, G.order, _CHUNK):
        blk = G.elements[i:i + _CHUNK]
        c = G.mul(G.mul(np.broadcast_to(gi, blk.shape), blk), g)
        out[i:i + _CHUNK] = G.index_of(c)
    if (out < 0).any():
        raise ValueError("conjugation leaves the element set")
    return out


def orbit_labels(G, conjugators):
    n = G.order
    rows, cols = [], []
    for g in conjugators:
        perm = conjugation_permutation(G, g)
        rows.append(np.arange(n))
        cols.append(perm)
    if not rows:
        return np.arange(n)
    A = coo_matrix((np.ones(n * len(rows), dtype=np.int8), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
    _, labels = connected_components(A, directed=True, connection="weak")
    return labels


def element_orders(G, idx):
    """Orders of the elements at ``idx`` (as cosets when scalars are set)."""
    F = G.field
    e = G.identity_index
    X = G.elements[idx]
    cur = X.copy()
    orders = np.zeros(len(idx), dtype=np.int64)
    todo = np.ones(len(idx), dtype=bool)
    n = 1
    while todo.any():
        hit = todo & (G.index_of(cur) == e)
        orders[hit] = n
        todo &= ~hit
        if not todo.any():
            break
        cur = G.mul(cur, X)
        n += 1
        if n > G.order:
            raise AssertionError("element order exceeds group order")
    return orders


def conjugacy_data(G):
    """Classes of G with sizes, centralizer orders and element orders (cached)."""
    if "classes" in G._cache:
        return G._cache["classes"]
    labels = orbit_labels(G, G.generators)
    _, reps, inv, sizes = np.unique(labels, return_index=True, return_inverse=True, return_counts=True)
    # relabel classes by first occurrence for a deterministic order
    order = np.argsort(reps)
    relabel = np.empty_like(order)
    relabel[order] = np.arange(len(order))
    labels = relabel[inv]
    reps, sizes = reps[order], sizes[order]
    cents = G.order // sizes
    assert (sizes * cents == G.order).all()
    orders = element_orders(G, reps)
    p = G.field.p
    p_prime = orders % p != 0
    p_power = np.array([set(factorize(int(o))) <= {p} for o in orders])
    data = ClassData(labels, reps, sizes, cents, orders, p_prime, p_power)
    G._cache["classes"] = data
    return data


def burnside_class_count(G, limit=None):
    """k(G) = #{commuting pairs} / |G|, by direct products (small groups only)."""
    limit = cap("burnside") if limit is None else limit
    if G.order > limit:
        raise CapExceeded(f"Burnside check capped at order {limit}")
    pairs = 0
    E = G.elements
    for g in E:
        gb = np.broadcast_to(g, E.shape)
        pairs += int((G.canonical(G.mul(gb, E))[1] == G.canonical(G.mul(E, gb))[1]).sum())
    return Fraction(pairs, G.order)


def coset_class_distribution(G, N, primes=None):
    """Per coset of N: G-classes of pi-elements that are single N-orbits; plus alpha."""
    if not is_normal(G, N):
        raise ValueError("N is not normal in G")
    cd = conjugacy_data(G)
    in_N = N.contains(G.elements)
    n_labels = orbit_labels(G, N.generators)
    n_sizes = np.bincount(n_labels)
    if primes is None:
        pi_class = np.ones(cd.k, dtype=bool)
    else:
        primes = set(primes)
        pi_class = np.array([set(factorize(int(o))) <= primes for o in cd.orders])
    # coset label: smallest element index in gN
    coset_of = np.full(G.order, -1, dtype=np.int64)
    cosets = []
    for i in range(G.order):
        if coset_of[i] >= 0:
            continue
        members = G.index_of(G.mul(np.broadcast_to(G.elements[i], N.elements.shape), N.elements))
        coset_of[members] = len(cosets)
        cosets.append(i)
    per_coset = [0] * len(cosets)
    alpha = 0
    for c in range(cd.k):
        if not pi_class[c]:
            continue
        rep = cd.reps[c]
        single = n_sizes[n_labels[rep]] == cd.sizes[c]
        if single:
            per_coset[coset_of[rep]] += 1
            if in_N[rep]:
                alpha += 1
    return {"cosets": len(cosets), "per_coset": per_coset, "alpha": alpha}


def derangement_proportion(G, H):
    """Proportion of elements of G fixing no point of G/H."""
    if not G.contains(H.elements).all():
        raise ValueError("H is not a subgroup of G")
    cd = conjugacy_data(G)
    hit = np.zeros(cd.k, dtype=bool)
    hit[np.unique(cd.labels[G.index_of(H.elements)])] = True
    fixing = int(cd.sizes[hit].sum())
    return Fraction(G.order - fixing, G.order)


# --- Jordan structure of single matrices ---

def jordan_block_sizes(F, g, eigenvalue):
    """Partition of Jordan block sizes of ``g`` at ``eigenvalue`` (a field element)."""
    d = g.shape[0]
    A = F.sub[np.asarray(g, dtype=np.int64), F.mul[eigenvalue, identity(d)]]
    kernels = [0]
    P = identity(d)
    for _ in range(d):
        P = matmul(F, P[None], A)[0]
        kernels.append(d - int(ranks(F, P[None])[0]))
    at_least = [kernels[i] - kernels[i - 1] for i in range(1, d + 1)]
    sizes = []
    for s in range(d, 0, -1):
        cnt = at_least[s - 1] - (at_least[s] if s < d else 0)
        sizes += [s] * cnt
    return tuple(sizes)


def uselem_check(O, SO):
    """For each SO-class: (block condition, class equals an O-class). The two must agree."""
    F = O.field
    cdO = conjugacy_data(O)
    cdS = conjugacy_data(SO)
    out = []
    minus_one = int(F.neg[1])
    for c in range(cdS.k):
        g = SO.elements[cdS.reps[c]]
        blocks = jordan_block_sizes(F, g, 1) + jordan_block_sizes(F, g, minus_one)
        odd_block = any(b % 2 for b in blocks)
        o_idx = O.index_of(g)[0]
        full = cdO.sizes[cdO.labels[o_idx]] == cdS.sizes[c]
        out.append((odd_block, bool(full)))
    return out


# --- concrete families ---

def _elementary(F, d, i, j, a):
    m = identity(d)
    m[i, j] = a
    return m


def _basis_elements(F):
    return [F.p**i for i in range(F.k)]


def _sl_generators(F, d):
    gens = []
    for i in range(d - 1):
        for a in _basis_elements(F):
            gens.append(_elementary(F, d, i, i + 1, a))
            gens.append(_elementary(F, d, i + 1, i, a))
    return gens or [identity(d)]


def _gl_generators(F, d):
    w = F.primitive_element()
    diag = identity(d)
    diag[0, 0] = w
    return _sl_generators(F, d) + [diag]


def _scalars_in(G):
    F = G.field
    out = []
    for s in range(1, F.q):
        if G.contains(F.mul[s, identity(G.dim)])[0]:
            out.append(s)
    return tuple(out)


def projective(G, name=""):
    """G modulo the scalar matrices it contains."""
    sc = _scalars_in(G)
    return group_from_elements(G.field, G.elements, generators=G.generators, form_tag=G.form_tag, scalars=sc, name=name)


def permutation_matrices(m, even_only=False):
    mats = []
    for perm in itertools.permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        if even_only and inv % 2:
            continue
        P = np.zeros((m, m), dtype=np.int64)
        P[list(perm), list(range(m))] = 1
        mats.append(P)
    return np.stack(mats)


def symmetric_group(m):
    return group_from_elements(field(2), permutation_matrices(m), name=f"S{m}")


def alternating_group(m):
    return group_from_elements(field(2), permutation_matrices(m, True), name=f"A{m}")


def _expected_order(family, n, q, extra):
    from . import centralizer as cz  # formula orders, used only to refuse oversized requests early

    try:
        if family in ("GL", "SL", "PGL", "PSL", "GU", "SU", "PGU", "PSU", "Sp"):
            return cz.group_order(family, n, q)
        if family == "BetweenSLGL":
            return cz.group_order("GL", n, q) // extra
        if family in ("OPlus", "OMinus"):
            return cz.group_order("O", n, q, family[1:].lower())
        if family in ("SOPlus", "SOMinus"):
            return cz.group_order("SO", n, q, family[2:].lower())
        if family in ("OmegaPlus", "OmegaMinus"):
            return cz.group_order("Omega", n, q, family[5:].lower())
        if family == "OOdd":
            return cz.group_order("O", n, q)
        if family == "SOOdd":
            return cz.group_order("SO", n, q)
        if family == "OmegaOdd":
            return cz.group_order("Omega", n, q)
    except ValueError:
        return None
    if family in ("SymmetricGroup", "AlternatingGroup"):
        return math.factorial(n)
    return None


def build_group(family, n, q=None, extra=None, limit=None):
    """Explicit group for a classcount family name (see classcount.GroupSpec)."""
    limit = _element_cap(limit)
    if family == "SymmetricGroup":
        if math.factorial(n) > limit:
            raise CapExceeded("symmetric group exceeds the element cap")
        return symmetric_group(n)
    if family == "AlternatingGroup":
        if math.factorial(n) // 2 > limit:
            raise CapExceeded("alternating group exceeds the element cap")
        return alternating_group(n)
    expected = _expected_order(family, n, q, extra)
    # intermediate constructions (e.g. O before Omega) can be up to 4x larger
    parent_factor = {"SOPlus": 2, "SOMinus": 2, "SOOdd": 2, "OmegaPlus": 4, "OmegaMinus": 4, "OmegaOdd": 4,
                     "SL": q - 1 if q else 1, "PSL": 1, "SU": q + 1 if q else 1, "BetweenSLGL": extra or 1}
    if expected is not None and expected * parent_factor.get(family, 1) > limit:
        raise CapExceeded(f"{family}({n},{q}) has order {expected}, above the element cap {limit}")
    sym = {"OPlus": "plus", "OMinus": "minus", "SOPlus": "plus", "SOMinus": "minus",
           "OmegaPlus": "plus", "OmegaMinus": "minus"}
    name = f"{family}({n},{q})"
    if family in ("GL", "PGL", "BetweenSLGL"):
        F = field(q)
        G = close_group(_gl_generators(F, n), F, limit=limit, name=f"GL({n},{q})")
        if family == "PGL":
            return projective(G, name)
        if family == "BetweenSLGL":
            if extra is None or (q - 1) % extra:
                raise ValueError("BetweenSLGL needs an index j dividing q-1")
            det = determinants(F, G.elements)
            e = (q - 1) // extra
            ok = np.array([F.power(int(x), e) == 1 for x in range(q)])
            return subgroup(G, ok[det], name)
        return G
    if family in ("SL", "PSL"):
        F = field(q)
        G = close_group(_sl_generators(F, n), F, limit=limit, name=f"SL({n},{q})")
        return projective(G, name) if family == "PSL" else G
    if family in ("GU", "SU", "PGU", "PSU"):
        G = isometry_group(standard_form("hermitian", n, q), limit=limit * (q + 1), name=f"GU({n},{q})")
        if family == "GU":
            return G
        if family == "PGU":
            return projective(G, name)
        S = determinant_kernel(G, f"SU({n},{q})")
        return projective(S, name) if family == "PSU" else S
    if family == "Sp":
        return isometry_group(standard_form("alternating", n, q), limit=limit, name=name)
    if family in ("OPlus", "OMinus", "SOPlus", "SOMinus", "OmegaPlus", "OmegaMinus", "OOdd", "SOOdd", "OmegaOdd"):
        odd_dim = family in ("OOdd", "SOOdd", "OmegaOdd")
        if odd_dim != bool(n % 2):
            raise ValueError(f"{family} needs {'odd' if odd_dim else 'even'} dimension")
        if n < 3:
            raise ValueError("orthogonal groups need dimension >= 3")
        if q % 2:
            form = standard_form("symmetricBilinear", n, q, None if odd_dim else sym[family])
        else:
            if odd_dim:
                raise ValueError("odd-dimensional orthogonal groups need odd q")
            form = standard_form("quadratic", n, q, sym[family])
        O = isometry_group(form, limit=4 * limit, name=f"O{'' if odd_dim else '+-'[family.endswith('Minus')]}({n},{q})")
        if family.startswith("O") and not family.startswith("Omega"):
            return O
        if family.startswith("SO"):
            return determinant_kernel(O, name) if q % 2 else dickson_kernel(O, name)
        if q % 2 == 0:
            return dickson_kernel(O, name)
        return derived_subgroup(O, name)
    raise ValueError(f"no oracle construction for {family!r}")


def oracle_class_number(family, n, q=None, extra=None, limit=None):
    return conjugacy_data(build_group(family, n, q, extra, limit)).k


# --- polynomial brute force for star counts ---

def _poly_mul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = int(F.add[out[i + j], F.mul[x, y]])
    return tuple(out)


def monic_irreducibles(q, d):
    """All monic irreducible polynomials of degree d (coefficients lowest first), z excluded."""
    F = field(q)

    def monic(deg):
        for low in itertools.product(range(q), repeat=deg):
            yield tuple(low) + (1,)

    reducible = set()
    for a in range(1, d // 2 + 1):
        for f in monic(a):
            for g in monic(d - a):
                reducible.add(_poly_mul(F, f, g))
    return [f for f in monic(d) if f not in reducible and f[0] != 0]


def star_conjugate(q, f):
    """phi* = z^deg phi(1/z) / phi(0)."""
    F = field(q)
    c0inv = int(F.inv[f[0]])
    return tuple(int(F.mul[c0inv, x]) for x in reversed(f))


def brute_force_star_counts(q, dmax):
    """``{d: (N*(q;d), M*(q;d))}`` by enumeration, z +- 1 excluded."""
    out = {}
    specials = {(1, 1), (int(field(q).neg[1]), 1)}
    for d in range(1, dmax + 1):
        polys = [f for f in monic_irreducibles(q, d) if f not in specials]
        selfc = sum(1 for f in polys if star_conjugate(q, f) == f)
        out[d] = (selfc, (len(polys) - selfc) // 2)
    return out
