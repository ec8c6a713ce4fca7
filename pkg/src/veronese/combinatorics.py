"""Degree-q monomial combinatorics for the q-fold embedding of affine n-space.

The coordinate set T consists of all exponent vectors of degree q = p^h in
n variables; each corresponds to a weakly increasing q-tuple over {1..n}
(the multiplicity of j in the tuple is the j-th exponent).  Variables of
the ambient polynomial ring are named by these index tuples, listed in
ascending lexicographic order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .fields import ZZ, PrimeField, is_prime
from .polys import Monomial, PolyRing

DEFAULT_Q_CAP = 16

IndexTuple = tuple
ExponentVector = tuple


@dataclass(frozen=True)
class VeroneseParams:
    """Ambient dimension n and prime power q = p^h."""

    n: int
    p: int
    h: int
    q_cap: int = field(default=DEFAULT_Q_CAP, compare=False, repr=False)

    def __post_init__(self):
        for name in ("n", "p", "h"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        q = self.p**self.h
        if q > self.q_cap:
            raise ValueError(
                f"q = {self.p}^{self.h} = {q} exceeds the cap {self.q_cap}; "
                "raise q_cap explicitly if you really want this"
            )
        if self.n < 3:
            warnings.warn(
                f"n={self.n}: below n=3 the variety is a point or a line "
                "and most checks degenerate",
                stacklevel=2,
            )

    @property
    def q(self) -> int:
        return self.p**self.h

    def cardinality(self) -> int:
        """|T| = C(n+q-1, q)."""
        return comb(self.n + self.q - 1, self.q)


def tuple_of(a: ExponentVector) -> IndexTuple:
    """Weakly increasing tuple with multiplicity a_j of each value j."""
    if not a or any((not isinstance(x, int)) or x < 0 for x in a):
        raise ValueError(f"bad exponent vector {a!r}")
    out = []
    for j, m in enumerate(a, start=1):
        out.extend([j] * m)
    if not out:
        raise ValueError("exponent vector must have positive degree")
    return tuple(out)


def exponent_of(t: IndexTuple, n: int) -> ExponentVector:
    """Multiplicity vector of a weakly increasing tuple over {1..n}."""
    if not t:
        raise ValueError("empty index tuple")
    if any((not isinstance(i, int)) or i < 1 or i > n for i in t):
        raise ValueError(f"index tuple {t!r} has entries outside 1..{n}")
    if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"index tuple {t!r} is not weakly increasing")
    a = [0] * n
    for i in t:
        a[i - 1] += 1
    return tuple(a)


@lru_cache(maxsize=None)
def index_tuples(params: VeroneseParams) -> tuple:
    """All weakly increasing q-tuples over {1..n}, ascending lexicographic."""
    return tuple(
        combinations_with_replacement(range(1, params.n + 1), params.q)
    )


@lru_cache(maxsize=None)
def exponent_vectors(params: VeroneseParams) -> tuple:
    """Degree-q exponent vectors, parallel to index_tuples."""
    return tuple(exponent_of(t, params.n) for t in index_tuples(params))


def pure_tuple(params: VeroneseParams, j: int) -> IndexTuple:
    """The tuple (j, ..., j) naming the coordinate that sees only u_j."""
    if j < 1 or j > params.n:
        raise ValueError(f"index {j} outside 1..{params.n}")
    return (j,) * params.q


@lru_cache(maxsize=None)
def polynomial_ring(params: VeroneseParams, field, order: str = "degrevlex") -> PolyRing:
    """Ambient ring with one variable per element of T."""
    return PolyRing(field, index_tuples(params), order)


def integer_ring(params: VeroneseParams, order: str = "degrevlex") -> PolyRing:
    return polynomial_ring(params, ZZ, order)


def content_of(m: Monomial, n: int) -> tuple:
    """Total multiplicity each of u_1..u_n receives under substitution.

    For a monomial in the x variables this is the exponent vector of its
    pullback: the sum over variables of exponent times the variable's own
    exponent vector.  Binomial membership in the toric ideal is exactly
    equality of contents of the two monomials.
    """
    total = [0] * n
    for v, e in m.items():
        a = exponent_of(v, n)
        for i in range(n):
            total[i] += e * a[i]
    return tuple(total)


def parametrize(params: VeroneseParams, u, field: PrimeField) -> tuple:
    """Point of the variety with coordinates ordered like index_tuples."""
    if len(u) != params.n:
        raise ValueError(f"need {params.n} coordinates, got {len(u)}")
    vals = [field.normalize(x) for x in u]
    out = []
    for a in exponent_vectors(params):
        w = field.one
        for x, e in zip(vals, a):
            if e:
                w = field.mul(w, field.pow(x, e))
        out.append(w)
    return tuple(out)
