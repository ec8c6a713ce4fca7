import random

import pytest

import oracles
from veronese import (
    IntMatrix,
    column_lattice_basis,
    determinant,
    lattice_contains,
    lattice_intersection,
    minimal_multiplier,
    smith_normal_form,
)


def check_snf_identities(a: IntMatrix):
    res = smith_normal_form(a)
    u, v = res.u, res.v
    nr, nc = a.shape
    assert u.mul(a).mul(v) == IntMatrix(
        [
            [res.d[i] if i == j and i < len(res.d) else 0 for j in range(nc)]
            for i in range(nr)
        ]
    )
    assert u.mul(res.u_inv) == IntMatrix.identity(nr)
    assert res.u_inv.mul(u) == IntMatrix.identity(nr)
    assert v.mul(res.v_inv) == IntMatrix.identity(nc)
    assert res.v_inv.mul(v) == IntMatrix.identity(nc)
    positive = [d for d in res.d if d]
    assert all(d > 0 for d in positive)
    for x, y in zip(positive, positive[1:]):
        assert y % x == 0
    assert len(positive) == res.rank
    return res


# columns 2e1, 2e2, 2e3, e1+e2
EXPONENT_COLUMNS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0))


def test_snf_of_degree_two_exponent_columns():
    a = IntMatrix.from_cols(EXPONENT_COLUMNS)
    res = check_snf_identities(a)
    assert tuple(d for d in res.d if d) == (1, 2, 2)
    # two independent oracles agree
    assert oracles.invariant_factors_minor_gcd(a.rows) == [1, 2, 2]
    assert oracles.snf_diagonal_sympy(a.rows) == [1, 2, 2]


def test_snf_random_matrices_match_minor_gcds():
    rng = random.Random(7)
    for _ in range(60):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        a = IntMatrix(
            [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        )
        res = check_snf_identities(a)
        positive = [d for d in res.d if d]
        assert positive == oracles.invariant_factors_minor_gcd(a.rows)
        assert positive == oracles.snf_diagonal_sympy(a.rows)


def test_snf_zero_and_identity():
    z = IntMatrix([[0, 0], [0, 0]])
    assert check_snf_identities(z).d == (0, 0)
    i3 = IntMatrix.identity(3)
    assert check_snf_identities(i3).d == (1, 1, 1)


def test_determinant_matches_sympy():
    rng = random.Random(11)
    import sympy

    for _ in range(40):
        n = rng.randint(1, 5)
        a = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert determinant(a) == int(sympy.Matrix(a.rows).det())


def test_determinant_rejects_nonsquare():
    with pytest.raises(ValueError):
        determinant(IntMatrix([[1, 2, 3], [4, 5, 6]]))


def test_lattice_contains_against_sympy_membership():
    rng = random.Random(13)
    for _ in range(80):
        dim = rng.randint(1, 4)
        ncols = rng.randint(1, 4)
        cols = [
            tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(ncols)
        ]
        basis = IntMatrix.from_cols(cols)
        if rng.random() < 0.5:
            # genuine member: random integer combination
            v = [0] * dim
            for c in cols:
                k = rng.randint(-3, 3)
                for i, x in enumerate(c):
                    v[i] += k * x
            v = tuple(v)
        else:
            v = tuple(rng.randint(-6, 6) for _ in range(dim))
        assert lattice_contains(basis, v) == oracles.lattice_member_sympy(cols, v)


def test_minimal_multiplier_frozen_and_minimal():
    basis = IntMatrix.from_cols(EXPONENT_COLUMNS)
    assert minimal_multiplier(basis, (1, 0, 1)) == 2
    assert minimal_multiplier(basis, (2, 0, 2)) == 1
    assert minimal_multiplier(basis, (1, 1, 0)) == 1
    # off the rational span
    assert minimal_multiplier(IntMatrix.from_cols([(2, 0)]), (1, 1)) is None


def test_minimal_multiplier_is_least_positive():
    rng = random.Random(17)
    checked = 0
    while checked < 30:
        dim = rng.randint(1, 3)
        cols = [
            tuple(rng.randint(-3, 3) for _ in range(dim))
            for _ in range(rng.randint(1, 3))
        ]
        basis = IntMatrix.from_cols(cols)
        v = tuple(rng.randint(-3, 3) for _ in range(dim))
        d = minimal_multiplier(basis, v)
        if d is None:
            assert not lattice_contains(basis, v)
            continue
        assert lattice_contains(basis, tuple(d * x for x in v))
        for smaller in range(1, d):
            assert not lattice_contains(basis, tuple(smaller * x for x in v))
        checked += 1


def test_column_lattice_basis_spans_same_lattice():
    rng = random.Random(19)
    for _ in range(40):
        dim = rng.randint(1, 4)
        cols = [
            tuple(rng.randint(-4, 4) for _ in range(dim))
            for _ in range(rng.randint(1, 4))
        ]
        a = IntMatrix.from_cols(cols)
        new_basis = column_lattice_basis(a)
        rank = smith_normal_form(a).rank
        assert len(new_basis) == rank
        b = IntMatrix.from_cols(new_basis) if new_basis else None
        for c in cols:
            if b is None:
                assert all(x == 0 for x in c)
            else:
                assert lattice_contains(b, c)
        for c in new_basis:
            assert lattice_contains(a, c)


def test_lattice_intersection_frozen():
    even = IntMatrix.from_cols([(2, 0), (0, 2)])
    diag = IntMatrix.from_cols([(1, 1)])
    got = lattice_intersection(even, diag)
    assert [tuple(map(abs, g)) for g in got] == [(2, 2)]


def test_lattice_intersection_contains_exactly_common_vectors():
    rng = random.Random(23)
    for _ in range(30):
        dim = rng.randint(1, 3)
        mk = lambda: IntMatrix.from_cols(
            [
                tuple(rng.randint(-3, 3) for _ in range(dim))
                for _ in range(rng.randint(1, 3))
            ]
        )
        a, b = mk(), mk()
        inter = lattice_intersection(a, b)
        for g in inter:
            assert lattice_contains(a, g)
            assert lattice_contains(b, g)
        # random small vectors: in both lattices iff in the intersection
        im = IntMatrix.from_cols(inter) if inter else None
        for _ in range(20):
            v = tuple(rng.randint(-4, 4) for _ in range(dim))
            both = lattice_contains(a, v) and lattice_contains(b, v)
            if im is None:
                assert not both or all(x == 0 for x in v)
            else:
                assert both == lattice_contains(im, v)


def test_int_matrix_shape_errors():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix.from_cols([(1, 2), (3,)])
