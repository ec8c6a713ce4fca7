from math import gcd

import pytest

from veronese import (
    CyclicAction,
    admissible_multipliers,
    cohomology_orders,
    invariant_element,
    prime_power_split,
)


def test_prime_power_split():
    assert prime_power_split(2) == (2, 1)
    assert prime_power_split(8) == (2, 3)
    assert prime_power_split(9) == (3, 2)
    assert prime_power_split(27) == (3, 3)
    for bad in (1, 6, 12, 0, -4):
        with pytest.raises(ValueError):
            prime_power_split(bad)


def test_admissible_multipliers_frozen():
    assert admissible_multipliers(2) == (1,)
    assert admissible_multipliers(3) == (1,)
    assert admissible_multipliers(4) == (1, 3)
    assert admissible_multipliers(8) == (1, 3, 5, 7)
    assert admissible_multipliers(9) == (1, 4, 7)


def test_action_validation():
    with pytest.raises(ValueError):
        CyclicAction(9, 3)  # not a unit
    with pytest.raises(ValueError):
        CyclicAction(9, 2)  # unit but 2^9 = 8 mod 9
    with pytest.raises(ValueError):
        CyclicAction(4, 4)  # out of range
    act = CyclicAction(9, 4)
    assert act.p == 3 and act.h == 2
    assert act.difference() == 3
    assert act.norm() == 0


def test_orders_frozen_tables():
    assert cohomology_orders(CyclicAction(2, 1)).as_dict() == {
        i: 2 for i in range(7)
    }
    assert cohomology_orders(CyclicAction(4, 3)).as_dict() == {
        i: 2 for i in range(7)
    }
    assert cohomology_orders(CyclicAction(8, 5)).as_dict() == {
        i: 4 for i in range(7)
    }
    assert cohomology_orders(CyclicAction(9, 4)).as_dict() == {
        i: 3 for i in range(7)
    }
    assert cohomology_orders(CyclicAction(9, 7)).as_dict() == {
        i: 3 for i in range(7)
    }


def test_orders_match_brute_force_enumeration():
    for q in (2, 3, 4, 8, 9, 16, 27):
        for a in admissible_multipliers(q):
            action = CyclicAction(q, a)
            table = cohomology_orders(action, i_max=8)
            d, nm = table.difference, table.norm
            ker_d = sum(1 for x in range(q) if d * x % q == 0)
            im_d = len({d * x % q for x in range(q)})
            ker_nm = sum(1 for x in range(q) if nm * x % q == 0)
            im_nm = len({nm * x % q for x in range(q)})
            orders = table.as_dict()
            assert orders[0] == ker_d
            for i in range(1, 9):
                assert orders[i] == (ker_nm // im_d if i % 2 else ker_d // im_nm)


def test_orders_equal_and_nontrivial():
    for q in (2, 4, 8, 3, 9):
        for a in admissible_multipliers(q):
            orders = cohomology_orders(CyclicAction(q, a)).as_dict()
            assert len(set(orders.values())) == 1
            assert orders[0] > 1


def test_multipliers_are_one_mod_p():
    for q in (2, 4, 8, 16, 3, 9, 27, 25):
        p, _ = prime_power_split(q)
        for a in admissible_multipliers(q):
            assert a % p == 1


def test_norm_times_difference_vanishes():
    for q in (4, 8, 9, 16, 27):
        for a in admissible_multipliers(q):
            act = CyclicAction(q, a)
            assert act.norm() * act.difference() % q == 0


def test_invariant_element():
    assert invariant_element(CyclicAction(2, 1)) == 1
    assert invariant_element(CyclicAction(4, 3)) == 2
    assert invariant_element(CyclicAction(9, 4)) == 3
    act = CyclicAction(8, 5)
    e = invariant_element(act)
    assert e == 4
    assert act.a * e % 8 == e


def test_i_max_respected():
    table = cohomology_orders(CyclicAction(4, 3), i_max=2)
    assert set(table.as_dict()) == {0, 1, 2}
    with pytest.raises(ValueError):
        cohomology_orders(CyclicAction(4, 3), i_max=-1)
