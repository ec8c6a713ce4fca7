"""Buchberger's algorithm and multivariate division over a prime field.

Tuned for the binomial ideals that arise here: reducer lookup is indexed
by leading-monomial support, the coprime-leading-term criterion prunes
pairs, and the pair queue is capped so runaway inputs fail loudly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .fields import PrimeField
from .polys import Poly, PolyRing, mono_div, mono_divides, mono_lcm, mono_mul

DEFAULT_PAIR_CAP = 200_000


class PairLimitExceeded(Exception):
    """Raised when Buchberger would process more S-pairs than allowed."""


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, tail-reduced, sorted by leading term."""

    ring: PolyRing
    polys: tuple
    pairs_processed: int = 0

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)


class _Reducers:
    """Division helper; indexes reducers by variables in their lead term."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.lead: list = []
        self.tail: list = []
        self.buckets: list = [[] for _ in range(ring.nvars)]
        self.has_constant = False

    def add(self, terms: dict) -> None:
        lm = max(terms, key=self.ring.key)
        tail = [(e, c) for e, c in terms.items() if e != lm]
        idx = len(self.lead)
        self.lead.append(lm)
        self.tail.append(tail)
        support = [i for i, x in enumerate(lm) if x]
        if not support:
            self.has_constant = True
        for i in support:
            self.buckets[i].append(idx)

    def find(self, m: tuple):
        if self.has_constant:
            for i, lm in enumerate(self.lead):
                if not any(lm):
                    return i
        seen = set()
        for v, x in enumerate(m):
            if not x:
                continue
            for i in self.buckets[v]:
                if i in seen:
                    continue
                seen.add(i)
                if mono_divides(self.lead[i], m):
                    return i
        return None


def _normal_form_terms(terms: dict, red: _Reducers, field) -> dict:
    work = dict(terms)
    remainder: dict = {}
    key = red.ring.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        i = red.find(m)
        if i is None:
            remainder[m] = c
            continue
        delta = mono_div(m, red.lead[i])
        for eg, cg in red.tail[i]:
            e = mono_mul(eg, delta)
            s = field.sub(work.get(e, 0), field.mul(c, cg))
            if s:
                work[e] = s
            else:
                work.pop(e, None)
    return remainder


def reduce(f: Poly, basis: Union[GroebnerBasis, Sequence[Poly]]) -> Poly:
    """Full normal form of f against a list of polynomials.

    With a Groebner basis this is the canonical representative mod the
    ideal, so the result is zero exactly for ideal members.
    """
    polys = basis.polys if isinstance(basis, GroebnerBasis) else tuple(basis)
    if not isinstance(f.ring.field, PrimeField):
        raise ValueError("division requires prime-field coefficients")
    red = _Reducers(f.ring)
    for g in polys:
        if g.ring != f.ring:
            raise ValueError("reducers live in a different ring")
        if g.is_zero():
            continue
        red.add(g.monic().raw_terms())
    return Poly(f.ring, _normal_form_terms(f.raw_terms(), red, f.ring.field))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    lf, cf = f.leading()
    lg, cg = g.leading()
    lcm = mono_lcm(lf, lg)
    fld = f.ring.field
    mf = Poly(f.ring, {mono_div(lcm, lf): fld.inv(cf)})
    mg = Poly(g.ring, {mono_div(lcm, lg): fld.inv(cg)})
    return mf * f - mg * g


def buchberger(
    gens: Iterable[Poly], *, pair_cap: int = DEFAULT_PAIR_CAP
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    S-pairs with coprime leading terms are skipped.  Raises
    PairLimitExceeded rather than truncating when pair_cap is hit.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    if not isinstance(ring.field, PrimeField):
        raise ValueError("Groebner computation requires prime-field coefficients")
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")

    basis: list = []
    leads: list = []
    red = _Reducers(ring)
    seen = set()
    for g in gens:
        m = g.monic()
        fs = frozenset(m.raw_terms().items())
        if fs in seen:
            continue
        seen.add(fs)
        basis.append(m)
        leads.append(m.leading()[0])
        red.add(m.raw_terms())

    heap: list = []
    counter = 0

    def push_pair(i: int, j: int) -> None:
        nonlocal counter
        lcm = mono_lcm(leads[i], leads[j])
        counter += 1
        heapq.heappush(heap, (ring.key(lcm), counter, i, j, lcm))

    for i in range(len(basis)):
        for j in range(i):
            push_pair(j, i)

    processed = 0
    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        processed += 1
        if processed > pair_cap:
            raise PairLimitExceeded(
                f"S-pair limit {pair_cap} exceeded ({len(basis)} basis elements)"
            )
        if mono_mul(leads[i], leads[j]) == lcm:
            continue  # coprime leading terms reduce to zero
        s = s_polynomial(basis[i], basis[j])
        rt = _normal_form_terms(s.raw_terms(), red, ring.field)
        if not rt:
            continue
        r = Poly(ring, rt).monic()
        basis.append(r)
        leads.append(r.leading()[0])
        red.add(r.raw_terms())
        for k in range(len(basis) - 1):
            push_pair(k, len(basis) - 1)

    return GroebnerBasis(ring, _reduced(basis, ring), processed)


def _reduced(basis: list, ring: PolyRing) -> tuple:
    """Minimalize then tail-reduce: the canonical reduced basis."""
    items = sorted(basis, key=lambda g: ring.key(g.leading()[0]))
    kept: list = []
    kept_leads: list = []
    for g in items:
        lm = g.leading()[0]
        if any(mono_divides(l, lm) for l in kept_leads):
            continue
        kept.append(g)
        kept_leads.append(lm)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = reduce(g, others)
        out.append(r.monic())
    out.sort(key=lambda g: ring.key(g.leading()[0]))
    return tuple(out)
