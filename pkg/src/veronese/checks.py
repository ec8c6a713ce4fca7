"""Acceptance checks: one callable per claim, shared by the test suite
and the reproduce-paper CLI subcommand.

Seeds and budgets are pinned here so repeated runs produce identical
tables.  Each check returns (ok, detail); run_check wraps that with a
name, a wall-clock budget in seconds, and the measured elapsed time.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .cohomology import CyclicAction, admissible_multipliers, cohomology_orders
from .combinatorics import (
    VeroneseParams,
    exponent_vectors,
    index_tuples,
    integer_ring,
    parametrize,
    polynomial_ring,
)
from .fields import PrimeField
from .geometry import fiber_check, jacobian_rank
from .gluing import (
    FreeNode,
    GluedNode,
    SemigroupGens,
    completely_p_glued,
    tree_witnesses,
    validate_witness,
)
from .groebner import buchberger, reduce
from .sci import build_certificate, full_ideal_point_survey, point_survey, verify_char_p
from .toric import (
    TypeStarBinomial,
    generators_over,
    normalize_sign,
    quadratic_generators,
    rewrite,
)

PRIME_POWERS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 8: (2, 3), 9: (3, 2)}

GLUING_PARAMS = ((3, 2, 1), (4, 2, 1), (3, 3, 1), (3, 2, 2))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget

    @property
    def passed(self) -> bool:
        return self.ok and self.within_budget


def _params(n: int, p: int, h: int) -> VeroneseParams:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return VeroneseParams(n, p, h)


@lru_cache(maxsize=None)
def generator_groebner(params: VeroneseParams, r: int):
    """Groebner basis of the quadratic generator set over F_r, cached."""
    return buchberger(list(generators_over(params, PrimeField(r))))


def _cardinality():
    bad = []
    for n in range(1, 7):
        for q, (p, h) in sorted(PRIME_POWERS.items()):
            params = _params(n, p, h)
            expect = comb(n + q - 1, q)
            got = len(index_tuples(params))
            if got != expect or params.cardinality() != expect:
                bad.append((n, q, got, expect))
    detail = f"30 (n, q) pairs, |T| up to {comb(6 + 9 - 1, 9)}"
    return not bad, detail if not bad else f"mismatches: {bad}"


_GOLDEN_PAIRS = (
    ((1, 1), (2, 2), (1, 2), (1, 2)),
    ((1, 1), (2, 3), (1, 2), (1, 3)),
    ((1, 1), (3, 3), (1, 3), (1, 3)),
    ((1, 2), (2, 3), (1, 3), (2, 2)),
    ((1, 2), (3, 3), (1, 3), (2, 3)),
    ((2, 2), (3, 3), (2, 3), (2, 3)),
)


def _golden_generators():
    params = _params(3, 2, 1)
    ring = integer_ring(params)
    computed = {normalize_sign(g) for g in quadratic_generators(params)}

    frozen = set()
    for a, b, c, d in _GOLDEN_PAIRS:
        g = ring.poly({((a, 1), (b, 1)): 1, ((c, 1), (d, 1)): -1})
        frozen.add(normalize_sign(g))

    minors = set()
    entry = lambda i, j: tuple(sorted((i, j)))
    for rows in combinations((1, 2, 3), 2):
        for cols in combinations((1, 2, 3), 2):
            i, k = rows
            j, l = cols
            m = ring.poly(
                {
                    ((entry(i, j), 1), (entry(k, l), 1)): 1,
                    ((entry(i, l), 1), (entry(k, j), 1)): -1,
                }
            )
            if not m.is_zero():
                minors.add(normalize_sign(m))

    ok = computed == frozen == minors and len(computed) == 6
    return ok, (
        "6 generators = 6 frozen binomials = 2x2 symmetric-matrix minors"
        if ok
        else f"sets differ: computed {len(computed)}, frozen {len(frozen)}, "
        f"minors {len(minors)}"
    )


def _random_type_star(rng: random.Random, params: VeroneseParams) -> TypeStarBinomial:
    q = params.q
    while True:
        s = rng.randint(1, 3)
        blocks = tuple(
            tuple(sorted(rng.choices(range(1, params.n + 1), k=q))) for _ in range(s)
        )
        sigma = tuple(rng.sample(range(1, s * q + 1), s * q))
        cand = TypeStarBinomial(params, blocks, sigma)
        if not cand.is_zero():
            return cand


def _degree_two_generation():
    rng = random.Random(0xA11CE)
    choices = [(n, pq) for n in (2, 3, 4) for pq in ((2, 1), (3, 1), (2, 2))]
    trials = 200
    max_steps = 0
    for _ in range(trials):
        n, (p, h) = rng.choice(choices)
        params = _params(n, p, h)
        tsb = _random_type_star(rng, params)
        cert = rewrite(tsb)
        max_steps = max(max_steps, len(cert))
        if cert.expansion() != tsb.poly(integer_ring(params)):
            return False, f"expansion mismatch for {tsb}"
        gb = generator_groebner(params, 5)
        f5 = tsb.poly(polynomial_ring(params, PrimeField(5)))
        if not reduce(f5, gb).is_zero():
            return False, f"nonzero normal form mod GB(B) for {tsb}"
    return True, f"{trials} rewrites exact over Z, 0 mod GB(B)/F_5, <= {max_steps} steps"


def _leaf_gens(tree):
    if isinstance(tree, FreeNode):
        return [tree.gens]
    assert isinstance(tree, GluedNode)
    return _leaf_gens(tree.left) + _leaf_gens(tree.right)


def _gluing():
    details = []
    for n, p, h in GLUING_PARAMS:
        params = _params(n, p, h)
        gens = SemigroupGens.of(exponent_vectors(params))
        tree = completely_p_glued(gens, p, h)
        triples = tree_witnesses(tree)
        for t1, t2, w in triples:
            if not validate_witness(t1, t2, p, w):
                return False, f"witness failed revalidation at {(n, p, h)}: {w}"
        leaves = _leaf_gens(tree)
        covered = sorted(g for leaf in leaves for g in leaf.gens)
        if covered != sorted(gens.gens):
            return False, f"leaves do not partition T at {(n, p, h)}"
        if not all(leaf.is_free() for leaf in leaves):
            return False, f"non-free leaf at {(n, p, h)}"
        details.append(f"{(n, p, h)}: {len(triples)} gluings, s <= "
                       f"{max(w.s for _, _, w in triples)}")
    return True, "; ".join(details)


def _char_p_certificate():
    details = []
    for n, p, h in GLUING_PARAMS:
        params = _params(n, p, h)
        report = verify_char_p(build_certificate(params))
        if not report.success:
            return False, f"radical membership failed at {(n, p, h)}: " \
                          f"{len(report.failures)} generators"
        worst = max(report.k_values)
        if worst > h + 1:
            return False, f"Frobenius exponent {worst} > h+1 at {(n, p, h)}"
        details.append(f"{(n, p, h)}: k <= {worst}")
    return True, "; ".join(details)


def _char_p_point_equality():
    params = _params(3, 2, 1)
    report = point_survey(build_certificate(params), 2)
    ok = (
        report.count_image == 8
        and report.count_zero_set == 8
        and report.witness is None
    )
    return ok, (
        f"|V(F_2)| = {report.count_image}, |Zero(cert)(F_2)| = "
        f"{report.count_zero_set}, witness {report.witness}"
    )


def _char_neq_p_refutation():
    params = _params(3, 2, 1)
    cert = build_certificate(params)
    details = []
    for r in (3, 5, 7):
        report = point_survey(cert, r)
        w = report.witness
        if w is None:
            return False, f"no witness over F_{r}"
        field = PrimeField(r)
        for g in cert.binomials:
            if g.map_field(field).evaluate(w) != 0:
                return False, f"witness {w} not on the certificate zero set mod {r}"
        image = {
            parametrize(params, u, field)
            for u in product(range(r), repeat=params.n)
        }
        if w in image:
            return False, f"witness {w} lies on V over F_{r}"
        details.append(f"F_{r}: witness {w}")
    return True, "; ".join(details)


def _full_ideal_point_counts():
    params = _params(3, 2, 1)
    details = []
    ok = True
    for r in (2, 3, 5):
        report = full_ideal_point_survey(params, r)
        details.append(
            f"F_{r}: |V| = {report.count_image}, |Zero(B)| = {report.count_zero_set}"
        )
        if not report.counts_equal:
            ok = False
    return ok, "; ".join(details)


def _jacobian():
    rng = random.Random(0xBEEF)
    details = []
    for n, p, h, r in ((3, 2, 1, 5), (3, 3, 1, 7)):
        params = _params(n, p, h)
        gens = quadratic_generators(params)
        m = params.cardinality()
        big_n = m - n

        origin = jacobian_rank(params, gens, (0,) * m, r)
        if origin.rank != 0:
            return False, f"origin rank {origin.rank} != 0 at {(n, p, h)}"

        for _ in range(50):
            u = [rng.randrange(r) for _ in range(n)]
            if not any(u):
                u[rng.randrange(n)] = 1 + rng.randrange(r - 1)
            w = parametrize(params, u, PrimeField(r))
            rep = jacobian_rank(params, gens, w, r)
            if rep.rank != big_n:
                return False, f"rank {rep.rank} != N = {big_n} at u = {u}, r = {r}"
            if rep.triangular_ok is not True:
                return False, f"triangular submatrix check failed at u = {u}, r = {r}"
            if not rep.diagonal_value:
                return False, f"zero diagonal at u = {u}, r = {r}"
        details.append(f"{(n, p, h)}/F_{r}: rank N = {big_n} at 50 points")
    return True, "; ".join(details) + "; rank 0 at origin"


def _galois_fibers():
    rng = random.Random(0xFEED)
    details = []
    for n, p, h, r in ((3, 2, 1, 5), (3, 3, 1, 7), (3, 2, 2, 5)):
        params = _params(n, p, h)
        q = params.q
        zero_coord_seen = 0
        for trial in range(20):
            u = [1 + rng.randrange(r - 1) for _ in range(n)]
            if trial % 3 == 0:
                u[rng.randrange(n)] = 0
            rep = fiber_check(params, r, tuple(u))
            if len(rep.roots_of_unity) != q:
                return False, f"mu_{q} has {len(rep.roots_of_unity)} elements mod {r}"
            if not set(rep.orbit) <= set(rep.fiber):
                return False, f"orbit escapes fiber at u = {u}, q = {q}, r = {r}"
            if not rep.equal:
                return False, f"fiber != orbit at u = {u}, q = {q}, r = {r}"
            if 0 in u:
                zero_coord_seen += 1
        details.append(f"q={q}, r={r}: 20 fibers ({zero_coord_seen} with a zero coord)")
    return True, "; ".join(details)


def _brute_cohomology(q: int, d: int, nm: int) -> tuple:
    ker_d = sum(1 for x in range(q) if d * x % q == 0)
    im_d = len({d * x % q for x in range(q)})
    ker_nm = sum(1 for x in range(q) if nm * x % q == 0)
    im_nm = len({nm * x % q for x in range(q)})
    return ker_d, ker_nm // im_d, ker_d // im_nm


def _cohomology():
    tables = 0
    for q in (2, 4, 8, 3, 9):
        for a in admissible_multipliers(q):
            action = CyclicAction(q, a)
            if a % action.p != 1:
                return False, f"a = {a} not 1 mod p for q = {q}"
            table = cohomology_orders(action, i_max=6)
            orders = table.as_dict()
            vals = set(orders.values())
            if len(vals) != 1 or vals == {1}:
                return False, f"orders not equal and > 1 for q = {q}, a = {a}: {orders}"
            h0, hodd, heven = _brute_cohomology(q, table.difference, table.norm)
            for i, o in orders.items():
                want = h0 if i == 0 else (hodd if i % 2 else heven)
                if o != want:
                    return False, f"H^{i} order {o} != brute force {want} " \
                                  f"for q = {q}, a = {a}"
            tables += 1
    return True, f"{tables} (q, a) tables, orders match kernel/image enumeration"


CHECKS = (
    ("cardinality", 1.0, _cardinality),
    ("golden-generators", 1.0, _golden_generators),
    ("degree-2-generation", 30.0, _degree_two_generation),
    ("gluing", 30.0, _gluing),
    ("char-p-certificate", 60.0, _char_p_certificate),
    ("char-p-point-equality", 1.0, _char_p_point_equality),
    ("char-neq-p-refutation", 60.0, _char_neq_p_refutation),
    ("full-ideal-point-counts", 30.0, _full_ideal_point_counts),
    ("jacobian", 10.0, _jacobian),
    ("galois-fibers", 10.0, _galois_fibers),
    ("cohomology", 5.0, _cohomology),
)

CHECK_NAMES = tuple(name for name, _, _ in CHECKS)


def run_check(name: str) -> CheckResult:
    for check_name, budget, fn in CHECKS:
        if check_name == name:
            t0 = time.perf_counter()
            ok, detail = fn()
            return CheckResult(name, ok, detail, time.perf_counter() - t0, budget)
    raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")


def run_all() -> list:
    return [run_check(name) for name in CHECK_NAMES]
