import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semisym import (NotSymmetric, Polynomial, SegmentCombination, builtin, detect_symmetric,
                     elementary, functions_equal, make_boolean, make_n_quotient, make_natural,
                     segment, segment_times_elementary)
from semisym.poly import (evaluate, evaluate_raw, extend_with_zero_variable, function_table,
                          index_sets, multiset_permutation_count, point_grid)

N = make_natural()
B = make_boolean()


def var(n, i, sr=N):
    return Polynomial.variable(sr, n, i)


def exps(p):
    return set(p.terms)


def test_segment_examples():
    assert exps(segment((2, 1))) == {(2, 1), (1, 2)}
    assert len(segment((1, 1))) == 1
    assert len(segment((2, 2, 0, 0))) == 6
    assert segment((0, 0, 0)) == Polynomial.constant(N, 3, 1)


def test_elementary_examples():
    x, y, z = (var(3, i) for i in range(3))
    assert elementary(3, 1) == x + y + z
    assert len(elementary(4, 2)) == 6
    assert elementary(5, 0) == Polynomial.constant(N, 5, 1)


def test_arithmetic():
    x, y = var(2, 0), var(2, 1)
    one = Polynomial.constant(N, 2, 1)
    assert x * one == x
    sq = (x + y) ** 2
    assert sq.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    bx, by = var(2, 0, B), var(2, 1, B)
    assert ((bx + by) ** 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_independent_semiring_instances_combine():
    p = Polynomial.variable(make_natural(), 1, 0) + Polynomial.variable(make_natural(), 1, 0)
    assert p.terms == {(1,): 2}


def test_degree_and_variable_caps():
    with pytest.raises(ValueError):
        Polynomial(N, 9)
    with pytest.raises(ValueError):
        var(1, 0) ** 17


def test_evaluation_examples():
    assert evaluate(elementary(3, 2), (1, 1, 1)) == 3
    assert evaluate(segment((2, 1, 0)), (1, 1, 1)) == 6
    assert evaluate(segment((1, 1, 0)), (1, 1, 1)) == 3


def test_detect_symmetric_examples():
    x, y = var(2, 0), var(2, 1)
    c = detect_symmetric(x ** 2 * y + x * y ** 2)
    assert c.coeffs == {(2, 1): 1}
    with pytest.raises(NotSymmetric) as e:
        detect_symmetric(x ** 2 * y)
    assert e.value.profile == (2, 1) and e.value.coeffs == (1, 0)
    three = Polynomial.constant(N, 2, 3)
    c = detect_symmetric(x ** 2 + y ** 2 + three * x * y)
    assert c.coeffs == {(2, 0): 1, (1, 1): 3}


def test_functions_equal_examples():
    x = var(1, 0, B)
    assert functions_equal(x + x, x).holds
    q = make_n_quotient(2, 4)
    qx = var(1, 0, q)
    assert functions_equal(qx.scale(q.numeral(2)), qx.scale(q.numeral(4))).holds
    assert functions_equal(segment((2, 1), B), segment((2, 1), B)).holds


def test_functions_equal_budget():
    sr = builtin("super:4")
    p = elementary(8, 1, sr)
    assert functions_equal(p, p, budget=1000).inconclusive


def test_expansion_worked_example():
    ex = segment_times_elementary((3, 2, 0, 0), 2)
    assert ex.raw_products == 72
    assert ex.combination.coeffs == {(4, 3, 0, 0): 1, (4, 2, 1, 0): 1, (3, 3, 1, 0): 2, (3, 2, 1, 1): 1}
    assert str(ex.combination) == "sigma(4,3,0,0) + sigma(4,2,1,0) + 2*sigma(3,3,1,0) + sigma(3,2,1,1)"
    assert ex.leading.profile == (4, 3, 0, 0) and ex.leading.multiplicity == 1


def test_expansion_small_examples():
    assert segment_times_elementary((0, 0, 0), 3).combination.coeffs == {(1, 1, 1): 1}
    assert segment_times_elementary((1, 1, 0), 2).combination.coeffs == {(2, 2, 0): 1, (2, 1, 1): 2}


def test_expansion_precondition():
    with pytest.raises(ValueError):
        segment_times_elementary((1, 2), 1)
    with pytest.raises(ValueError):
        segment_times_elementary((2, 1, 1), 1)


def test_extend_with_zero_variable():
    c = SegmentCombination(N, 2, {(2, 1): 1})
    assert extend_with_zero_variable(c).coeffs == {(2, 1, 0): 1}
    assert len(extend_with_zero_variable(SegmentCombination(N, 2))) == 0
    c2 = extend_with_zero_variable(SegmentCombination(N, 2, {(1, 1): 2}))
    p = c2.to_polynomial()
    for a, b in itertools.product(range(4), repeat=2):
        assert evaluate(p, (a, b, 0)) == 2 * a * b


def decreasing(n, top):
    return [tuple(c) for c in itertools.combinations_with_replacement(range(top, -1, -1), n)]


def test_segment_injective_and_counted():
    seen = {}
    for n in range(1, 7):
        for d in decreasing(n, 2 if n > 4 else 3):
            p = segment(d)
            assert len(p) == multiset_permutation_count(d)
            key = frozenset(p.terms.items())
            assert key not in seen
            seen[key] = d
            assert detect_symmetric(p).coeffs == {d: 1}


def test_expansion_invariant_over_small_profiles():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for head in decreasing(k, 4 if n < 5 else 2):
                d = head + (0,) * (n - k)
                ex = segment_times_elementary(d, k)
                assert ex.leading.multiplicity == 1
                assert all(t.multiplicity >= 1 for t in ex.terms)
                lhs = segment(d) * elementary(n, k)
                assert ex.combination.to_polynomial() == lhs
                assert sum(len(v) for v in index_sets(d, k).values()) == len(ex.terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3),
       st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_product_of_symmetric_is_symmetric(a, b):
    n = max(len(a), len(b))
    da = tuple(sorted(a + [0] * (n - len(a)), reverse=True))
    db = tuple(sorted(b + [0] * (n - len(b)), reverse=True))
    detect_symmetric(segment(da) * segment(db))


@pytest.mark.parametrize("ident", ["boolean", "zn:3", "nq:2:4", "sat:3", "super:2", "maxplus:2"])
def test_raw_evaluation_matches_canonical(ident):
    sr = builtin(ident)
    rng = np.random.default_rng(1)
    for _ in range(5):
        raw = [(int(rng.integers(sr.order)), tuple(int(v) for v in rng.integers(0, 3, size=2)))
               for _ in range(6)]
        p = Polynomial.from_terms(sr, 2, raw)
        table = function_table(p)
        for i, pt in enumerate(point_grid(sr.order, 2).T):
            pt = tuple(int(v) for v in pt)
            assert evaluate_raw(sr, raw, pt) == evaluate(p, pt) == table[i]


def test_printing():
    x, y = var(2, 0), var(2, 1)
    assert str(x ** 2 * y + Polynomial.constant(N, 2, 3)) == "x1^2*x2 + 3"
    assert str(Polynomial(N, 2)) == "0"
