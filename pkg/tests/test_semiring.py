import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semisym import (AxiomError, builtin, make_boolean, make_n_quotient, make_natural,
                     make_saturated_natural, make_supertropical, make_truncated_maxplus, make_zn,
                     validate_axioms)
from semisym.semiring import find_axiom_violation

FINITE_IDS = ["boolean", "zn:2", "zn:3", "zn:5", "nq:2:4", "nq:1:3", "sat:2", "sat:3", "sat:4",
              "maxplus:1", "maxplus:3", "super:1", "super:2", "super:3", "super:4"]


@pytest.mark.parametrize("ident", FINITE_IDS)
def test_builtins_validate(ident):
    sr = builtin(ident)
    assert find_axiom_violation(sr.add_table, sr.mul_table, sr.zero, sr.one) is None


def test_orders():
    assert make_boolean().order == 2
    assert make_n_quotient(2, 4).order == 4
    assert make_n_quotient(2, 4).tokens == ("[0]", "[1]", "[2]", "[3]")
    assert make_supertropical(2).order == 5
    assert make_supertropical(4).order == 9
    assert make_truncated_maxplus(2).tokens[0] == "inf-"


def test_non_associative_add_rejected():
    add = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises(AxiomError) as e:
        validate_axioms(add, mul, 0, 1, ["a", "b", "c"])
    assert e.value.violation.axiom == "additive associativity"
    a, b, c = e.value.violation.witness
    A = np.array(add)
    assert A[A[a, b], c] != A[a, A[b, c]]


def test_non_distributive_rejected():
    # max/min on a chain with a broken product cell
    add = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(AxiomError):
        validate_axioms(add, mul, 0, 1)


def test_naive_saturated_supertropical_is_not_distributive():
    op = np.minimum(np.arange(2)[:, None] + np.arange(2)[None, :], 1)
    with pytest.raises(AxiomError):
        make_supertropical((op, 0))


def test_natural_numerals_and_cap():
    n = make_natural()
    assert n.numeral(7) == 7 and n.pow(3, 4) == 81
    capped = make_natural(10)
    with pytest.raises(OverflowError):
        capped.mul(4, 3)


def test_numerals_in_quotient():
    q = make_n_quotient(2, 4)
    assert [q.token(q.numeral(k)) for k in range(7)] == ["[0]", "[1]", "[2]", "[3]", "[2]", "[3]", "[2]"]


def test_power_table_square_and_multiply():
    sr = make_zn(5)
    P = sr.power_table(9)
    for x in range(5):
        for e in range(10):
            assert P[x, e] == pow(x, e, 5) if e else P[x, e] == 1
            assert sr.pow(x, e) == P[x, e]


def test_relabel_preserves_axioms():
    sr = make_saturated_natural(3)
    r = sr.relabel([0, 1, 3, 2])
    assert r.order == sr.order
    assert find_axiom_violation(r.add_table, r.mul_table, r.zero, r.one) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FINITE_IDS), st.data())
def test_laws_on_random_triples(ident, data):
    sr = builtin(ident)
    el = st.integers(0, sr.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert sr.add(a, b) == sr.add(b, a)
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.mul(sr.mul(a, b), c) == sr.mul(a, sr.mul(b, c))
    assert sr.add(a, sr.zero) == a and sr.mul(a, sr.one) == a and sr.mul(a, sr.zero) == sr.zero


def test_tables_read_only():
    sr = make_boolean()
    with pytest.raises(ValueError):
        sr.add_table[0, 0] = 1
