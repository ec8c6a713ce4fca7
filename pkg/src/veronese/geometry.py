"""Smoothness and fiber checks over prime fields.

The Jacobian of the quadratic generators has rank 0 at the origin and
full codimension rank elsewhere on the variety; the proof's square
submatrix (one row per non-minimal coordinate, built from products with
the distinguished pure coordinate) is reproduced and checked for its
triangular shape.  Fibers of the parametrization over fields containing
the q-th roots of unity are orbits of the scalar root-of-unity action.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .combinatorics import (
    VeroneseParams,
    index_tuples,
    integer_ring,
    parametrize,
    pure_tuple,
)
from .fields import PrimeField
from .polys import Poly


class RootOfUnityError(ValueError):
    """The field does not contain q distinct q-th roots of unity."""


def matrix_rank_mod(rows: Sequence[Sequence[int]], r: int) -> int:
    """Row-echelon rank of an integer matrix reduced mod a prime r."""
    work = [[x % r for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][col], -1, r)
        work[rank] = [x * inv % r for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                c = work[i][col]
                work[i] = [(a - c * b) % r for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class JacobianReport:
    params: VeroneseParams
    r: int
    point: tuple
    rank: int
    # shape check of the distinguished square submatrix; None when no
    # pure coordinate is nonzero at the point
    triangular_ok: Optional[bool]
    diagonal_value: Optional[int]
    permutation: tuple


def jacobian_rank(
    params: VeroneseParams, generators: Sequence[Poly], w: Sequence[int], r: int
) -> JacobianReport:
    """Rank of the Jacobian of generators at w over F_r, plus the
    triangular-submatrix diagnostic."""
    field = PrimeField(r)
    tuples = index_tuples(params)
    if len(w) != len(tuples):
        raise ValueError(f"point needs {len(tuples)} coordinates")
    w = tuple(field.normalize(x) for x in w)

    rows = []
    for g in generators:
        gr = g.map_field(field)
        rows.append([gr.derivative(v).evaluate(w) for v in tuples])
    rank = matrix_rank_mod(rows, r)

    perm = tuple(range(1, params.n + 1))
    candidates = [
        jj
        for jj in range(1, params.n + 1)
        if w[tuples.index(pure_tuple(params, jj))]
    ]
    if not candidates:
        return JacobianReport(params, r, w, rank, None, None, perm)
    support = {
        jj: sum(1 for t, x in zip(tuples, w) if x and jj in t) for jj in candidates
    }
    j = max(candidates, key=lambda jj: (support[jj], -jj))
    if j != 1:
        perm = tuple(
            {1: j, j: 1}.get(i, i) for i in range(1, params.n + 1)
        )
    wp = _permuted_point(params, w, perm)
    ok, diag = _triangular_check(params, wp, field)
    return JacobianReport(params, r, w, rank, ok, diag, perm)


def _permuted_point(params: VeroneseParams, w: tuple, perm: tuple) -> tuple:
    """Coordinates after relabeling u_i as u_perm(i)."""
    tuples = index_tuples(params)
    pos = {t: i for i, t in enumerate(tuples)}
    out = []
    for t in tuples:
        src = tuple(sorted(perm[i - 1] for i in t))
        out.append(w[pos[src]])
    return tuple(out)


def _triangular_check(params: VeroneseParams, w: tuple, field: PrimeField):
    """Rows F_t = x_{1..1} x_t - x_{1..1 i_q} x_{1 i_1..i_{q-1}} for
    non-minimal t, differentiated, evaluated, restricted to those t.

    Entries right of the diagonal must vanish and the diagonal must be
    the value of the distinguished pure coordinate.
    """
    ring = integer_ring(params)
    tuples = index_tuples(params)
    pos = {t: i for i, t in enumerate(tuples)}
    q = params.q
    lead = pure_tuple(params, 1)
    prime = [t for t in tuples if t[: q - 1] != lead[: q - 1]]
    diag = w[pos[lead]]
    ok = True
    for row_i, t in enumerate(prime):
        a = ring.exps_of([(lead, 1), (t, 1)])
        b_var1 = tuple(sorted((1,) * (q - 1) + (t[-1],)))
        b_var2 = tuple(sorted((1,) + t[:-1]))
        b = ring.exps_of([(b_var1, 1), (b_var2, 1)])
        f = Poly(ring, {a: 1, b: -1}) if a != b else ring.zero()
        fr = f.map_field(field)
        for col_j, s in enumerate(prime):
            val = fr.derivative(s).evaluate(w)
            if col_j > row_i and val:
                ok = False
            if col_j == row_i and val != diag:
                ok = False
    return ok, diag


@dataclass(frozen=True)
class FiberReport:
    params: VeroneseParams
    r: int
    u: tuple
    image_point: tuple
    fiber: tuple
    orbit: tuple
    roots_of_unity: tuple
    equal: bool


def fiber_check(params: VeroneseParams, r: int, u: Sequence[int]) -> FiberReport:
    """Compare the fiber through u with its root-of-unity orbit."""
    field = PrimeField(r)
    q = params.q
    if (r - 1) % q:
        raise RootOfUnityError(
            f"root-of-unity deficiency: q={q} does not divide r-1={r - 1}"
        )
    u = tuple(field.normalize(x) for x in u)
    if len(u) != params.n:
        raise ValueError(f"need {params.n} coordinates")
    if not any(u):
        raise ValueError("fiber comparison needs a nonzero point")
    w = parametrize(params, u, field)
    fiber = tuple(
        v for v in product(range(r), repeat=params.n)
        if parametrize(params, v, field) == w
    )
    mu = tuple(g for g in range(1, r) if pow(g, q, r) == 1)
    orbit = tuple(sorted({tuple(g * x % r for x in u) for g in mu}))
    return FiberReport(
        params, r, u, w, fiber, orbit, mu, set(fiber) == set(orbit)
    )
