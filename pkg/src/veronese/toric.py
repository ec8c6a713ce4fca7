"""Binomials of the defining ideal and rewriting into quadratic pieces.

A monomial lies in the kernel congruence class of another exactly when
their contents agree; a difference of q-tuple blocks scrambled by a
permutation is rewritten as a telescoping sum of degree-2 binomials,
each step swapping one index between two blocks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional

from .combinatorics import (
    VeroneseParams,
    content_of,
    exponent_of,
    exponent_vectors,
    index_tuples,
    integer_ring,
)
from .polys import Monomial, Poly, PolyRing


class ZeroBinomialError(ValueError):
    """The two sides of the binomial are the same monomial."""


def binomial_in_ideal(params: VeroneseParams, m1: Monomial, m2: Monomial) -> bool:
    """Does m1 - m2 vanish under the substitution x_t -> u^t?

    Equivalent to content equality; degrees must match as a consequence.
    """
    return content_of(m1, params.n) == content_of(m2, params.n)


def normalize_sign(g: Poly) -> Poly:
    """Flip an integer binomial so the lex-larger monomial comes positive."""
    if g.is_zero():
        return g
    terms = g.raw_terms()
    lead = max(terms)  # plain tuple comparison = lex with first variable largest
    return -g if terms[lead] < 0 else g


@lru_cache(maxsize=None)
def quadratic_generators(
    params: VeroneseParams, full: bool = False
) -> tuple:
    """Degree-2 binomials generating the ideal, integer coefficients.

    Monomials x_t * x_t' are grouped by content; each group contributes
    the differences of its members against the group leader (one per
    member), or every pairwise difference when full=True.  Signs are
    normalized so the lex-larger monomial carries +1.
    """
    ring = integer_ring(params)
    by_content: dict = {}
    n = params.n
    exps_by_tuple = dict(zip(index_tuples(params), exponent_vectors(params)))
    tuples = index_tuples(params)
    for t1, t2 in combinations_with_replacement(tuples, 2):
        e = ring.exps_of([(t1, 1), (t2, 1)])
        a1, a2 = exps_by_tuple[t1], exps_by_tuple[t2]
        c = tuple(x + y for x, y in zip(a1, a2))
        by_content.setdefault(c, []).append(e)
    out = []
    for c in sorted(by_content):
        group = sorted(by_content[c], reverse=True)  # lex descending
        if len(group) < 2:
            continue
        if full:
            pairs = [
                (group[i], group[j])
                for i in range(len(group))
                for j in range(i + 1, len(group))
            ]
        else:
            pairs = [(group[0], m) for m in group[1:]]
        for big, small in pairs:
            out.append(Poly(ring, {big: 1, small: -1}))
    return tuple(out)


def generators_over(params: VeroneseParams, field, full: bool = False) -> tuple:
    return tuple(g.map_field(field) for g in quadratic_generators(params, full))


@dataclass(frozen=True)
class TypeStarBinomial:
    """Product of s block variables minus the sigma-scrambled product.

    blocks lists s weakly increasing q-tuples; sigma is the image array
    of a permutation of {1..s*q} acting on the concatenated index
    sequence, so slot j of the right side holds index number sigma(j).
    """

    params: VeroneseParams
    blocks: tuple
    sigma: tuple

    def __post_init__(self):
        q, n = self.params.q, self.params.n
        if not self.blocks:
            raise ValueError("need at least one block")
        for b in self.blocks:
            exponent_of(b, n)  # validates shape
            if len(b) != q:
                raise ValueError(f"block {b!r} must have length q={q}")
        sq = len(self.blocks) * q
        if sorted(self.sigma) != list(range(1, sq + 1)):
            raise ValueError(f"sigma must be a permutation of 1..{sq}")

    @property
    def s(self) -> int:
        return len(self.blocks)

    def left_blocks(self) -> tuple:
        return self.blocks

    def right_blocks(self) -> tuple:
        q = self.params.q
        seq = [i for b in self.blocks for i in b]
        scrambled = [seq[j - 1] for j in self.sigma]
        return tuple(
            tuple(sorted(scrambled[k * q : (k + 1) * q]))
            for k in range(self.s)
        )

    def is_zero(self) -> bool:
        return Counter(self.left_blocks()) == Counter(self.right_blocks())

    def poly(self, ring: Optional[PolyRing] = None) -> Poly:
        ring = ring or integer_ring(self.params)
        left = ring.exps_of([(b, 1) for b in self.left_blocks()])
        right = ring.exps_of([(b, 1) for b in self.right_blocks()])
        if left == right:
            return ring.zero()
        return Poly(ring, {left: 1, right: -1})


@dataclass(frozen=True)
class RewriteStep:
    """One telescoping move: sign * cofactor * quadratic."""

    quadratic: Poly
    cofactor: Monomial
    sign: int


@dataclass(frozen=True)
class RewriteCertificate:
    params: VeroneseParams
    steps: tuple

    def expansion(self) -> Poly:
        """Exact integer sum of the steps; equals the rewritten binomial."""
        ring = integer_ring(self.params)
        total = ring.zero()
        for st in self.steps:
            total = total + st.quadratic * st.cofactor.as_poly() * st.sign
        return total

    def __len__(self) -> int:
        return len(self.steps)


def rewrite(binomial: TypeStarBinomial) -> RewriteCertificate:
    """Express the binomial as a combination of degree-2 binomials.

    Greedy block fixing: the first block that differs from its target
    receives a needed index from a block holding it in excess, one
    cross-block swap per emitted step.  Swaps that merely permute equal
    blocks adjust the bookkeeping without emitting a step.
    """
    params = binomial.params
    ring = integer_ring(params)
    left = list(binomial.left_blocks())
    right = list(binomial.right_blocks())
    if Counter(left) == Counter(right):
        raise ZeroBinomialError(
            "zero binomial: sigma permutes the blocks among themselves"
        )

    # divide out blocks common to both sides; they ride along in cofactors
    spectators: list = []
    rcount = Counter(right)
    cur: list = []
    for b in left:
        if rcount[b] > 0:
            rcount[b] -= 1
            spectators.append(b)
        else:
            cur.append(b)
    tgt = sorted(rcount.elements())
    cur.sort()

    steps: list = []
    while True:
        k = next((i for i in range(len(cur)) if cur[i] != tgt[i]), None)
        if k is None:
            break
        want = Counter(tgt[k])
        have = Counter(cur[k])
        alpha = min(x for x in want if have[x] < want[x])
        beta = min(x for x in have if have[x] > want[x])
        l = next(
            i
            for i in range(len(cur))
            if i != k and Counter(cur[i])[alpha] > Counter(tgt[i])[alpha]
        )
        new_k = tuple(sorted(_swap_once(cur[k], beta, alpha)))
        new_l = tuple(sorted(_swap_once(cur[l], alpha, beta)))
        if Counter([cur[k], cur[l]]) != Counter([new_k, new_l]):
            mono_left = ring.exps_of([(cur[k], 1), (cur[l], 1)])
            mono_right = ring.exps_of([(new_k, 1), (new_l, 1)])
            quad = Poly(ring, {mono_left: 1, mono_right: -1})
            sgn = 1
            if mono_right > mono_left:  # store sign-normalized quadratic
                quad = -quad
                sgn = -1
            cof = [(b, 1) for i, b in enumerate(cur) if i not in (k, l)]
            cof += [(b, 1) for b in spectators]
            cofactor = ring.monomial(cof) if cof else ring.monomial(ring.unit_exps())
            steps.append(RewriteStep(quad, cofactor, sgn))
        cur[k], cur[l] = new_k, new_l

    return RewriteCertificate(params, tuple(steps))


def _swap_once(block: tuple, out_value: int, in_value: int) -> list:
    items = list(block)
    items.remove(out_value)
    items.append(in_value)
    return items
