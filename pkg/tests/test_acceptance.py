"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (with its wall time) that is printed in
the pytest terminal summary.  Running this file directly prints the same
lines.
"""

import functools
import itertools
import time
from pathlib import Path

import numpy as np

import _report
from oracles import CLASS_COUNTS
from semisym import (builtin, elementarize, enumerate_semirings, frobenius_ring_criterion,
                     frobenius_segment_times_elementary, is_frobenius, is_linearly_ordered,
                     is_quasiidempotent, is_supertropical, is_symhomomorphic, is_upper_bound,
                     make_boolean, make_n_quotient, make_saturated_natural, make_supertropical,
                     make_zn, numeral_relations, segment, segment_times_elementary,
                     semantic_elementarity, theorem_suite_linear, theorem_suite_upper_bound,
                     variant_frobenius_check, verify_elementarization)
from semisym.cli import run
from semisym.elementarize import MEMBER, NON_MEMBER
from semisym.poly import Polynomial, SegmentCombination, function_table

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def criterion(number: int, title: str, limit: float):
    """Record PASS/FAIL for the wrapped test; fail it if it runs past ``limit`` seconds."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
                elapsed = time.perf_counter() - t0
                assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            except BaseException as e:
                elapsed = time.perf_counter() - t0
                _report.RESULTS.append(f"criterion {number}: FAIL  {title} ({elapsed:.2f}s) {e}")
                raise
            extra = f"; {detail}" if detail else ""
            _report.RESULTS.append(f"criterion {number}: PASS  {title} ({elapsed:.2f}s{extra})")
        return inner
    return wrap


def xy(sr, a, b):
    return Polynomial(sr, 2, {(a, b): sr.one})


def power_sum(sr, n):
    return xy(sr, n, 0) + xy(sr, 0, n)


LINEAR_BUILTINS = ["boolean", "sat:2", "sat:3", "sat:4", "maxplus:1", "maxplus:2", "maxplus:3",
                   "super:1", "super:2", "super:3"]
OTHER_BUILTINS = ["zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "nq:2:4", "nq:1:3", "nq:3:5",
                  "super:4", "quotient:nq:2:4"]


@criterion(1, "worked expansion sigma(3,2,0,0)*e2 over N", 1.0)
def test_c01_worked_example():
    ex = segment_times_elementary((3, 2, 0, 0), 2)
    assert ex.raw_products == 72 == 12 * 6
    assert ex.combination.coeffs == {(4, 3, 0, 0): 1, (4, 2, 1, 0): 1, (3, 3, 1, 0): 2,
                                     (3, 2, 1, 1): 1}
    assert run(["expand", str(FIX / "nat.sr"), "3,2,0,0", "2"], _Null(), _Null()) == 0
    return str(ex.combination)


@criterion(2, "Frobenius collapse to sigma(4,3,0,0)", 10.0)
def test_c02_frobenius_collapse():
    for sr, points in ((make_supertropical(2), 625), (make_boolean(), 16)):
        r = frobenius_segment_times_elementary((3, 2, 0, 0), 2, sr)
        assert r.combination.coeffs == {(4, 3, 0, 0): sr.one}
        assert r.check.holds and r.check.note == f"{points} points"
        lhs = function_table(segment((3, 2, 0, 0), sr) * segment((1, 1, 0, 0), sr))
        assert lhs.size == points
        assert np.array_equal(lhs, function_table(segment((4, 3, 0, 0), sr)))
    return "super2: 625 points, boolean: 16 points"


@criterion(3, "N_{2=4} profile", 5.0)
def test_c03_n2eq4_profile():
    sr = make_n_quotient(2, 4)
    assert is_frobenius(sr, 64).holds
    assert is_frobenius(sr).holds
    ub = is_upper_bound(sr)
    assert ub.fails and tuple(sr.token(x) for x in ub.witness) == ("[2]", "[3]")
    assert is_symhomomorphic(sr).fails
    assert numeral_relations(sr)["two_approx_three"].holds
    assert run(["check", str(FIX / "n2eq4.sr")], _Null(), _Null()) == 1


@criterion(4, "linear theorem: four properties agree", 30.0)
def test_c04_linear_equivalence():
    summary = []
    for ident in LINEAR_BUILTINS:
        sr = builtin(ident)
        assert is_linearly_ordered(sr).holds and is_upper_bound(sr).holds, ident
        props = [is_frobenius(sr), is_supertropical(sr), is_quasiidempotent(sr),
                 numeral_relations(sr)["two_eq_three"]]
        statuses = {v.status for v in props}
        assert len(statuses) == 1, (ident, [v.status for v in props])
        s = theorem_suite_linear(sr)
        assert s.consistent and s.verdict.holds
        summary.append(f"{ident}={'+' if props[0].holds else '-'}")
    return " ".join(summary)


@criterion(5, "variant Frobenius identity", 30.0)
def test_c05_variant_frobenius():
    for L in range(1, 5):
        sr = make_supertropical(L)
        assert sr.order <= 9
        assert variant_frobenius_check(sr, 6).holds
    sr = make_saturated_natural(3)
    v = variant_frobenius_check(sr, 6)
    assert v.fails
    x, y, n = v.witness
    lhs = sr.sum([sr.pow(x, n), sr.mul(sr.pow(x, n - 1), y), sr.pow(y, n)])
    rhs = sr.add(sr.pow(x, n), sr.pow(y, n))
    assert lhs != rhs
    return f"sat3 witness x={x}, y={y}, n={n}: {sr.token(lhs)} != {sr.token(rhs)}"


def random_symmetric(sr, rng):
    n = int(rng.integers(1, 4))
    combo = SegmentCombination(sr, n)
    for _ in range(int(rng.integers(1, 5))):
        d = sorted((int(v) for v in rng.integers(0, 5, size=n)), reverse=True)
        combo.add_term(d, int(rng.integers(1, sr.order)))
    return combo.to_polynomial()


@criterion(6, "elementarization round-trip on 200 random polynomials", 120.0)
def test_c06_round_trip():
    rng = np.random.default_rng(20240917)
    counts = {}
    for sr in (make_boolean(), make_supertropical(2)):
        checked = 0
        for _ in range(200):
            p = random_symmetric(sr, rng)
            assert p.degree() <= 4
            v = verify_elementarization(p, elementarize(p))
            assert v.holds, (sr.name, str(p), v)
            checked += 1
        counts[sr.name] = checked
    return ", ".join(f"{k}: {v}" for k, v in counts.items())


@criterion(7, "negative control: x^2+y^2 over sat3 is not elementary", 120.0)
def test_c07_negative_control():
    sr = make_saturated_natural(3)
    assert is_upper_bound(sr).holds and is_linearly_ordered(sr).holds
    assert numeral_relations(sr)["two_eq_three"].fails
    res = semantic_elementarity(sr, 2, power_sum(sr, 2))
    assert res.status == NON_MEMBER
    assert res.complete and not res.truncated
    return f"closure size {res.closure_size}"


@criterion(8, "ring criterion agrees with Frobenius on Z_n", 5.0)
def test_c08_ring_criterion():
    for n in range(2, 7):
        sr = make_zn(n)
        crit = frobenius_ring_criterion(sr)
        assert crit.status == is_frobenius(sr).status
        if n == 2:
            assert crit.holds
        else:
            assert crit.fails and crit.witness == (1, 1)


@criterion(9, "rings: x^2+y^2 is elementary over Z_2, Z_3", 120.0)
def test_c09_ring_elementarity():
    sizes = []
    for n in (2, 3):
        sr = make_zn(n)
        res = semantic_elementarity(sr, 2, power_sum(sr, 2))
        assert res.status == MEMBER
        sizes.append(f"Z{n}: closure {res.closure_size}")
    return ", ".join(sizes)


@criterion(10, "enumeration counts and upper-bound theorem on every class", 600.0)
def test_c10_enumeration():
    classes = {m: list(enumerate_semirings(m)) for m in (1, 2, 3)}
    assert len(classes[1]) == 1
    assert len(classes[2]) == 2
    assert len(classes[3]) == CLASS_COUNTS[3]
    b, z2 = make_boolean(), make_zn(2)
    found = {"B": 0, "Z2": 0}
    for sr in classes[2]:
        found["B"] += sr.same_tables(b)
        found["Z2"] += sr.same_tables(z2)
    assert found == {"B": 1, "Z2": 1}
    checked = 0
    for m, group in classes.items():
        for sr in group:
            if not is_upper_bound(sr).holds:
                continue
            s = theorem_suite_upper_bound(sr)
            if s.consistent is None:
                assert any("inconclusive" in n for n in s.notes)
                continue
            assert s.consistent, s.to_text()
            checked += 1
    return f"counts 1, 2, {CLASS_COUNTS[3]}; {checked} upper-bound classes consistent"


def touched_semirings():
    out = [builtin(i) for i in LINEAR_BUILTINS + OTHER_BUILTINS]
    for m in (1, 2, 3, 4):
        out += list(enumerate_semirings(m))
    return out


@criterion(11, "natural number equalities on every touched semiring", 60.0)
def test_c11_numeral_lemma():
    violations = []
    total = 0
    for sr in touched_semirings():
        rel = numeral_relations(sr)
        two3, two4 = rel["two_eq_three"].holds, rel["two_eq_four"].holds
        ub, frob = is_upper_bound(sr).holds, is_frobenius(sr).holds
        if two3 and not two4:
            violations.append((sr.name, "2=3 but 2!=4"))
        if ub and two4 and not two3:
            violations.append((sr.name, "upper-bound and 2=4 but 2!=3"))
        if frob and not two4:
            violations.append((sr.name, "Frobenius but 2!=4"))
        total += 1
    assert not violations, violations
    return f"{total} semirings, 0 violations"


class _Null:
    def write(self, _):
        return 0

    def flush(self):
        pass


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    for t in tests:
        try:
            t()
        except BaseException:
            pass
    print("\n".join(_report.RESULTS))
