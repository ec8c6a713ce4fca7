"""Independent reference implementations used only to cross-check test
expectations.  Everything here is either elementary (minor gcds, brute
enumeration) or delegates to sympy; nothing imports the package's own
linear algebra or Groebner code paths beyond data types.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd, prod

import sympy
from sympy import GF, Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.matrices import DomainMatrix


def invariant_factors_minor_gcd(rows) -> list:
    """d_k = g_k / g_{k-1} with g_k the gcd of all k x k minors.

    Exponential in the matrix size; fine for the small frozen cases.
    """
    m = Matrix(rows)
    nr, nc = m.shape
    factors = []
    g_prev = 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, int(m[rs, cs].det()))
        if g == 0:
            break
        factors.append(g // g_prev)
        g_prev = g
    return factors


def snf_diagonal_sympy(rows) -> list:
    d = smith_normal_form(Matrix(rows))
    out = [abs(int(d[i, i])) for i in range(min(d.shape))]
    return [x for x in out if x]


def lattice_member_sympy(basis_cols, v) -> bool:
    """v in the Z-span of the columns: adjoining v must change neither
    the rank nor the product of invariant factors."""
    b = Matrix(list(zip(*basis_cols)))
    bv = b.row_join(Matrix([list(v)]).T)
    if b.rank() != bv.rank():
        return False
    return prod(snf_diagonal_sympy(b.tolist())) == prod(
        snf_diagonal_sympy(bv.tolist())
    )


def rank_mod_sympy(rows, r: int) -> int:
    rows = [list(map(int, row)) for row in rows]
    if not rows or not rows[0]:
        return 0
    dm = DomainMatrix.from_list(rows, GF(r))
    return len(dm.rref()[1])


def groebner_sympy(polys, variables, r: int):
    """Reduced degrevlex basis over F_r as a set of {exps: coeff} dicts
    with coefficients normalized to {0..r-1}."""
    # sympy's grevlex gives the first symbol the highest precedence,
    # matching the package's convention, so symbols map positionally.
    syms = sympy.symbols([f"y{i}" for i in range(len(variables))])
    converted = []
    for f in polys:
        expr = 0
        for exps, c in f.raw_terms().items():
            term = sympy.Integer(c)
            for s, e in zip(syms, exps):
                term *= s**e
            expr += term
        converted.append(expr)
    gb = sympy.groebner(converted, *syms, order="grevlex", modulus=r, polys=True)
    out = set()
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms, modulus=r)
        terms = {}
        for exps, c in poly.terms():
            terms[tuple(int(e) for e in exps)] = int(c) % r
        out.add(tuple(sorted(terms.items())))
    return out


def poly_key_set(polys) -> set:
    """Same shape as groebner_sympy's output, for comparison."""
    out = set()
    for f in polys:
        out.add(tuple(sorted((e, int(c)) for e, c in f.raw_terms().items())))
    return out


def semigroup_member_brute(gens, target) -> bool:
    """BFS over bounded multiplicities; assumes every generator is
    nonnegative and nonzero so coordinates only grow."""
    target = tuple(target)
    start = tuple([0] * len(target))
    if target == start:
        return True
    seen = {start}
    frontier = list(seen)
    while frontier:
        nxt = []
        for pt in frontier:
            for g in gens:
                cand = tuple(a + b for a, b in zip(pt, g))
                if cand == target:
                    return True
                if cand not in seen and all(a <= b for a, b in zip(cand, target)):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return False


def symmetric_rank_le_one_count(r: int) -> int:
    """Points of F_r^6 viewed as symmetric 3x3 matrices with every 2x2
    minor zero, counted by direct enumeration."""
    count = 0
    for a, b, c, d, e, f in product(range(r), repeat=6):
        m = Matrix([[a, b, c], [b, d, e], [c, e, f]])
        ok = True
        for rs in combinations(range(3), 2):
            for cs in combinations(range(3), 2):
                if int(m[rs, cs].det()) % r:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
