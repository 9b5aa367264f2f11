import itertools

import numpy as np
import pytest

from oracles import CLASS_COUNTS, semiring_classes, semiring_classes_commutative
from semisym import count_semirings, enumerate_semirings, make_boolean, make_zn
from semisym.semiring import find_axiom_violation


def iso_key(sr):
    m = sr.order
    keys = []
    for p in itertools.permutations(range(m)):
        p = np.array(p)
        inv = np.argsort(p)
        keys.append((int(p[sr.zero]), int(p[sr.one]),
                     tuple(p[sr.add_table[np.ix_(inv, inv)]].ravel()),
                     tuple(p[sr.mul_table[np.ix_(inv, inv)]].ravel())))
    return min(keys)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_oracle_reproduces_frozen_counts(m):
    assert semiring_classes(m) == CLASS_COUNTS[m]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_commutative_oracle_agrees(m):
    assert semiring_classes_commutative(m) == CLASS_COUNTS[m]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_counts_match_oracle(m):
    assert count_semirings(m) == CLASS_COUNTS[m]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_classes_valid_and_distinct(m):
    classes = list(enumerate_semirings(m))
    for sr in classes:
        assert find_axiom_violation(sr.add_table, sr.mul_table, sr.zero, sr.one) is None
    assert len({iso_key(sr) for sr in classes}) == len(classes)


def test_order_two_is_boolean_and_z2():
    keys = {iso_key(sr) for sr in enumerate_semirings(2)}
    assert keys == {iso_key(make_boolean()), iso_key(make_zn(2))}


def test_order_three_contains_z3():
    assert iso_key(make_zn(3)) in {iso_key(sr) for sr in enumerate_semirings(3)}


def test_order_bounds():
    with pytest.raises(ValueError):
        list(enumerate_semirings(0))
    with pytest.raises(ValueError):
        list(enumerate_semirings(5))


def test_order_four_upper_bound_theorem():
    from semisym import is_upper_bound, theorem_suite_upper_bound
    classes = list(enumerate_semirings(4))
    assert len(classes) == CLASS_COUNTS[4]
    ub = [sr for sr in classes if is_upper_bound(sr).holds]
    assert len(ub) == 25
    for sr in ub:
        assert theorem_suite_upper_bound(sr).consistent
