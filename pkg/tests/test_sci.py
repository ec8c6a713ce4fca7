import os
from itertools import product
from unittest import mock

import pytest

import oracles
from conftest import make_params
from veronese import (
    BudgetExceededError,
    PrimeField,
    build_certificate,
    certificate_groebner,
    full_ideal_point_survey,
    index_tuples,
    parametrize,
    point_survey,
    pure_tuple,
    verify_char_p,
)
from veronese.polys import mono_lcm
from veronese.sci import MODE_FULL, MODE_IMAGE


def test_certificate_frozen(params321):
    cert = build_certificate(params321)
    assert sorted(g.text() for g in cert.binomials) == [
        "x12^2 - x11*x22",
        "x13^2 - x11*x33",
        "x23^2 - x22*x33",
    ]
    assert len(cert) == 3


def test_certificate_shape():
    for n, p, h in ((3, 2, 1), (4, 2, 1), (3, 3, 1), (3, 2, 2)):
        params = make_params(n, p, h)
        cert = build_certificate(params)
        assert len(cert) == params.cardinality() - n
        q = params.q
        pures = {pure_tuple(params, j) for j in range(1, n + 1)}
        for g in cert.binomials:
            terms = sorted(g.raw_terms().items(), key=lambda t: -t[1])
            (lead_e, c1), (tail_e, c2) = terms
            assert (c1, c2) == (1, -1)
            # head is the q-th power of one non-pure coordinate
            head_vars = [
                (v, e) for v, e in zip(index_tuples(params), lead_e) if e
            ]
            assert len(head_vars) == 1
            (t, e) = head_vars[0]
            assert e == q and t not in pures
            # tail involves only pure coordinates
            for v, e in zip(index_tuples(params), tail_e):
                if e:
                    assert v in pures


def test_certificate_leading_terms_coprime():
    for n, p, h in ((3, 2, 1), (3, 3, 1), (3, 2, 2), (4, 2, 1)):
        params = make_params(n, p, h)
        cert = build_certificate(params)
        gb = certificate_groebner(cert)
        leads = [g.leading()[0] for g in gb.polys]
        for i in range(len(leads)):
            for j in range(i + 1, len(leads)):
                lcm = mono_lcm(leads[i], leads[j])
                assert lcm == tuple(
                    a + b for a, b in zip(leads[i], leads[j])
                )
        # pairwise-coprime leads mean the set is already its own basis
        assert len(gb.polys) == len(cert)


def test_verify_char_p_frozen(params321):
    report = verify_char_p(build_certificate(params321))
    assert report.success
    assert sorted(report.k_values) == [0, 0, 0, 1, 1, 1]
    assert report.k_max == 4


def test_verify_char_p_parameter_sweep():
    for n, p, h in ((4, 2, 1), (3, 3, 1), (3, 2, 2)):
        params = make_params(n, p, h)
        report = verify_char_p(build_certificate(params))
        assert report.success
        assert max(report.k_values) <= h + 1


def test_verify_char_p_k_zero_insufficient(params321):
    report = verify_char_p(build_certificate(params321), k_max=0)
    assert not report.success
    assert len(report.failures) == 3
    assert report.entries


def test_point_survey_char_p(params321):
    report = point_survey(build_certificate(params321), 2)
    assert report.count_image == 8
    assert report.count_zero_set == 8
    assert report.witness is None
    assert report.counts_equal


def test_point_survey_char_3_witness(params321):
    report = point_survey(build_certificate(params321), 3)
    assert report.count_image == 14
    assert report.count_zero_set == 35
    assert report.witness == (0, 0, 0, 0, 0, 2)
    assert not report.counts_equal


def test_witness_is_lexicographically_first(params321):
    cert = build_certificate(params321)
    report = point_survey(cert, 3)
    field = PrimeField(3)
    image = {
        parametrize(params321, u, field) for u in product(range(3), repeat=3)
    }
    first = None
    for w in product(range(3), repeat=6):
        if w in image:
            continue
        if all(g.map_field(field).evaluate(w) == 0 for g in cert.binomials):
            first = w
            break
    assert report.witness == first


def test_documented_nonimage_point_satisfies_certificate(params321):
    # (1,1,1,1,2,1) solves all three equations over F_3 yet is not a
    # parametrized point: x12*x33 - x13*x23 separates it
    cert = build_certificate(params321)
    field = PrimeField(3)
    w = (1, 1, 1, 1, 2, 1)
    assert all(g.map_field(field).evaluate(w) == 0 for g in cert.binomials)
    image = {
        parametrize(params321, u, field) for u in product(range(3), repeat=3)
    }
    assert w not in image


def test_full_ideal_survey(params321):
    rep2 = full_ideal_point_survey(params321, 2)
    assert (rep2.count_image, rep2.count_zero_set) == (8, 8)
    assert rep2.witness is None

    rep3 = full_ideal_point_survey(params321, 3)
    assert (rep3.count_image, rep3.count_zero_set) == (14, 27)
    assert rep3.witness is not None
    # the zero set of all quadrics is the rank <= 1 symmetric locus
    assert rep3.count_zero_set == oracles.symmetric_rank_le_one_count(3)


def test_image_only_mode(params321):
    report = point_survey(build_certificate(params321), 5, mode=MODE_IMAGE)
    assert report.count_image == 63
    assert report.count_zero_set is None
    assert report.witness is None
    assert report.counts_equal is None
    assert report.mode == MODE_IMAGE


def test_budget_guard(params321):
    with pytest.raises(BudgetExceededError):
        point_survey(build_certificate(params321), 5, budget=100)
    # image-only only enumerates r^n points, so it stays under the same cap
    report = point_survey(
        build_certificate(params321), 5, mode=MODE_IMAGE, budget=200
    )
    assert report.count_image == 63


def test_invalid_mode_rejected(params321):
    with pytest.raises(ValueError):
        point_survey(build_certificate(params321), 3, mode="sample")


def test_parallel_scan_is_deterministic(params321):
    cert = build_certificate(params321)
    seq = point_survey(cert, 3, workers=1)
    par = point_survey(cert, 3, workers=4)
    assert seq == par
    with mock.patch.dict(os.environ, {"VERONESE_THREADS": "3"}):
        env = point_survey(cert, 3)
    assert env == seq
