"""Certificate binomials cutting the variety set-theoretically in
characteristic p, with Frobenius verification and finite-field surveys.

One binomial per non-pure coordinate: x_t^q minus the matching product
of pure-power coordinates.  In characteristic p every quadratic
generator has a p-power landing in the certificate ideal; over other
prime fields exhaustive point enumeration hunts for zero-set points
outside the parametrized image.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .combinatorics import (
    VeroneseParams,
    exponent_vectors,
    index_tuples,
    integer_ring,
    parametrize,
    polynomial_ring,
    pure_tuple,
)
from .fields import PrimeField
from .groebner import GroebnerBasis, buchberger, reduce
from .polys import Poly, frobenius_power
from .toric import quadratic_generators

DEFAULT_ENUM_BUDGET = 10**7
MODE_FULL = "full-enumeration"
MODE_IMAGE = "image-only"


class BudgetExceededError(Exception):
    """The requested enumeration is larger than the configured budget."""


@dataclass(frozen=True)
class SciCertificate:
    """|T| - n binomials x_t^q - prod_j x_{j..j}^{a_j(t)}, t non-pure."""

    params: VeroneseParams
    binomials: tuple

    def __len__(self) -> int:
        return len(self.binomials)


def build_certificate(params: VeroneseParams) -> SciCertificate:
    ring = integer_ring(params)
    q, n = params.q, params.n
    pures = {pure_tuple(params, j) for j in range(1, n + 1)}
    out = []
    for t, a in zip(index_tuples(params), exponent_vectors(params)):
        if t in pures:
            continue
        left = ring.exps_of([(t, q)])
        right = ring.exps_of(
            [(pure_tuple(params, j), a[j - 1]) for j in range(1, n + 1) if a[j - 1]]
        )
        out.append(Poly(ring, {left: 1, right: -1}))
    return SciCertificate(params, tuple(out))


@dataclass(frozen=True)
class FrobeniusReport:
    """Least exponent k per quadratic generator with g^(p^k) in the
    certificate ideal; success means every generator got one."""

    params: VeroneseParams
    k_max: int
    entries: tuple  # (generator over F_p, k or None)

    @property
    def success(self) -> bool:
        return all(k is not None for _, k in self.entries)

    @property
    def k_values(self) -> tuple:
        return tuple(k for _, k in self.entries)

    @property
    def failures(self) -> tuple:
        return tuple(g for g, k in self.entries if k is None)


def certificate_groebner(cert: SciCertificate) -> GroebnerBasis:
    field = PrimeField(cert.params.p)
    gens = [g.map_field(field) for g in cert.binomials]
    return buchberger(gens)


def verify_char_p(cert: SciCertificate, k_max: Optional[int] = None) -> FrobeniusReport:
    """Radical membership of every quadratic generator, char p only."""
    params = cert.params
    p = params.p
    if k_max is None:
        k_max = 2 * params.h + 2
    gb = certificate_groebner(cert)
    field = PrimeField(p)
    entries = []
    for g0 in quadratic_generators(params):
        g = g0.map_field(field)
        found = None
        for k in range(k_max + 1):
            if reduce(frobenius_power(g, p, k), gb).is_zero():
                found = k
                break
        entries.append((g, found))
    return FrobeniusReport(params, k_max, tuple(entries))


@dataclass(frozen=True)
class PointSetReport:
    """Counts over F_r: parametrized image vs zero set of a binomial set."""

    params: VeroneseParams
    r: int
    set_label: str  # "certificate" or "ideal"
    mode: str
    count_image: int
    count_zero_set: Optional[int]
    witness: Optional[tuple]

    @property
    def counts_equal(self) -> Optional[bool]:
        if self.count_zero_set is None:
            return None
        return self.count_zero_set == self.count_image


def _compiled(binomials, field) -> list:
    """[(terms, coeffs)] with terms as (position, exponent) lists."""
    out = []
    for g in binomials:
        gm = g.map_field(field) if g.ring.field != field else g
        compiled = []
        for e, c in gm.raw_terms().items():
            compiled.append((c, tuple((i, x) for i, x in enumerate(e) if x)))
        out.append(compiled)
    return out


def _image_set(params: VeroneseParams, field: PrimeField) -> frozenset:
    r = field.r
    pts = set()
    u = [0] * params.n
    while True:
        pts.add(parametrize(params, u, field))
        i = params.n - 1
        while i >= 0 and u[i] == r - 1:
            u[i] = 0
            i -= 1
        if i < 0:
            return frozenset(pts)
        u[i] += 1


def _survey_chunk(args):
    compiled, r, m, powtab, image, start, stop = args
    point = [0] * m
    k = start
    rem = start
    for i in range(m - 1, -1, -1):
        point[i] = rem % r
        rem //= r
    count = 0
    witness = None
    while k < stop:
        ok = True
        for binomial in compiled:
            acc = 0
            for c, factors in binomial:
                t = c
                for i, e in factors:
                    t = t * powtab[point[i]][e] % r
                acc = (acc + t) % r
            if acc:
                ok = False
                break
        if ok:
            count += 1
            if witness is None:
                pt = tuple(point)
                if pt not in image:
                    witness = pt
        k += 1
        i = m - 1
        while i >= 0:
            point[i] += 1
            if point[i] < r:
                break
            point[i] = 0
            i -= 1
    return count, witness


def _zero_set_scan(compiled, r: int, m: int, image: frozenset, workers: int):
    """Count zero-set points and find the lex-first one off the image."""
    maxe = max(
        (e for binomial in compiled for _, fs in binomial for _, e in fs),
        default=1,
    )
    powtab = [[pow(v, e, r) for e in range(maxe + 1)] for v in range(r)]
    total = r**m
    nchunks = max(workers * 4, 1)
    size = max(total // nchunks, 1)
    bounds = list(range(0, total, size))
    if bounds[-1] != total:
        bounds.append(total)
    jobs = [
        (compiled, r, m, powtab, image, bounds[i], bounds[i + 1])
        for i in range(len(bounds) - 1)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_survey_chunk, jobs))
    else:
        results = [_survey_chunk(j) for j in jobs]
    count = sum(c for c, _ in results)
    witness = next((w for _, w in results if w is not None), None)
    return count, witness


def _workers() -> int:
    try:
        return max(int(os.environ.get("VERONESE_THREADS", "1")), 1)
    except ValueError:
        return 1


def point_survey(
    cert: SciCertificate,
    r: int,
    mode: str = MODE_FULL,
    budget: int = DEFAULT_ENUM_BUDGET,
    workers: Optional[int] = None,
) -> PointSetReport:
    return _survey(cert.params, cert.binomials, "certificate", r, mode, budget, workers)


def full_ideal_point_survey(
    params: VeroneseParams,
    r: int,
    mode: str = MODE_FULL,
    budget: int = DEFAULT_ENUM_BUDGET,
    workers: Optional[int] = None,
) -> PointSetReport:
    return _survey(
        params, quadratic_generators(params), "ideal", r, mode, budget, workers
    )


def _survey(params, binomials, label, r, mode, budget, workers) -> PointSetReport:
    if mode not in (MODE_FULL, MODE_IMAGE):
        raise ValueError(f"unknown mode {mode!r}")
    field = PrimeField(r)
    m = params.cardinality()
    image = _image_set(params, field)
    compiled = _compiled(binomials, field)
    if mode == MODE_IMAGE:
        # sanity: the image always satisfies every binomial of the ideal
        for pt in image:
            for binomial in compiled:
                acc = 0
                for c, factors in binomial:
                    t = c
                    for i, e in factors:
                        t = t * pow(pt[i], e, r) % r
                    acc = (acc + t) % r
                if acc:
                    raise AssertionError(
                        f"image point {pt} violates a binomial; content bookkeeping broken"
                    )
        return PointSetReport(params, r, label, mode, len(image), None, None)
    total = r**m
    if total > budget:
        raise BudgetExceededError(
            f"{r}^{m} = {total} points exceeds the enumeration budget {budget}"
        )
    nworkers = workers if workers is not None else _workers()
    count, witness = _zero_set_scan(compiled, r, m, image, nworkers)
    return PointSetReport(params, r, label, mode, len(image), count, witness)
