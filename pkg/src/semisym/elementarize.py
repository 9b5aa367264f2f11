"""Elementarization of symmetric polynomials and the checks around it.

The constructive part writes every segment ``sigma(d)`` as the word
``e1^(d1-d2) * ... * e(n-1)^(d(n-1)-dn) * en^dn``.  That identity holds as
functions exactly on symhomomorphic semirings (Frobenius with ``2 = 3``),
so the candidate is always produced and its validity is a separate,
exhaustively verified claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import finite
from .closure import DEFAULT_CAP, elementary_closure
from .finite import require_finite
from .poly import (DEFAULT_BUDGET, Polynomial, SegmentCombination, as_decreasing,
                   check_expansion_precondition, compare_tables, detect_symmetric,
                   elementary, function_table, function_table_from_terms, segment)
from .semiring import FiniteSemiring, Semiring
from .verdict import (FAILS, HOLDS, INCONCLUSIVE, Verdict, fails, from_bool, holds,
                      inconclusive)


class HypothesisError(ValueError):
    """The semiring does not satisfy what the requested identity needs."""


# --- words in the elementary polynomials ------------------------------------

@dataclass(frozen=True)
class ElementaryWord:
    """``e1^c1 * ... * en^cn``."""

    exponents: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.exponents)

    def weight(self) -> int:
        return sum((i + 1) * c for i, c in enumerate(self.exponents))

    def polynomial(self, sr: Semiring) -> Polynomial:
        """Symbolic expansion in the original variables."""
        n = self.n
        out = Polynomial.constant(sr, n, sr.one)
        for i, c in enumerate(self.exponents):
            if c:
                out = out * elementary(n, i + 1, sr) ** c
        return out

    def __str__(self) -> str:
        parts = [f"e{i + 1}" + (f"^{c}" if c > 1 else "")
                 for i, c in enumerate(self.exponents) if c]
        return "*".join(parts) or "1"


def factor_segment(d: Sequence[int]) -> ElementaryWord:
    d = as_decreasing(d)
    n = len(d)
    return ElementaryWord(tuple(d[i] - (d[i + 1] if i + 1 < n else 0) for i in range(n)))


@dataclass
class ElementaryPolynomial:
    """``r`` in variables ``y1..yn`` standing for ``e1..en``."""

    r: Polynomial
    combination: SegmentCombination
    note: str = ("p = r(e1, ..., en) is guaranteed only over symhomomorphic "
                 "semirings; check with verify_elementarization")

    @property
    def n(self) -> int:
        return self.r.n

    def words(self) -> list[tuple[Any, ElementaryWord]]:
        return [(c, ElementaryWord(e)) for e, c in self.r.sorted_terms()]

    def table(self, sr: FiniteSemiring | None = None) -> np.ndarray:
        """Values of ``r(e1(x), ..., en(x))`` on the grid of ``S^n``."""
        sr = sr or self.r.sr
        n = self.n
        if n == 0:
            return function_table(self.r, sr)
        es = np.array([function_table(elementary(n, k, sr)) for k in range(1, n + 1)])
        return function_table_from_terms(sr, n, ((c, e) for e, c in self.r.terms.items()), es)

    def substituted(self) -> Polynomial:
        """Symbolic ``r(e1, ..., en)`` in the original variables."""
        sr = self.r.sr
        out = Polynomial(sr, self.n)
        for c, w in self.words():
            out = out + w.polynomial(sr).scale(c)
        return out

    def drop_last(self) -> "ElementaryPolynomial":
        """``s(y1..y(n-1)) = r(y1..y(n-1), 0)``: the induced identity with one variable fewer."""
        sr = self.r.sr
        n = self.n
        s = Polynomial.from_terms(sr, n - 1, ((c, e[:-1]) for e, c in self.r.terms.items() if e[-1] == 0))
        combo = SegmentCombination(sr, n - 1, {d[:-1]: c for d, c in self.combination.coeffs.items()
                                               if d[-1] == 0})
        return ElementaryPolynomial(s, combo)

    def __str__(self) -> str:
        sr = self.r.sr
        if not self.r.terms:
            return sr.token(sr.zero)
        return " + ".join((str(w) if c == sr.one else f"{sr.token(c)}*{w}")
                          for c, w in self.words())


def elementarize(p: Polynomial | SegmentCombination) -> ElementaryPolynomial:
    """The elementary-basis candidate ``r`` for a symmetric ``p``.

    Raises :class:`~semisym.poly.NotSymmetric` if ``p`` is not symmetric.
    """
    combo = p if isinstance(p, SegmentCombination) else detect_symmetric(p)
    sr = combo.sr
    r = Polynomial.from_terms(sr, combo.n, ((c, factor_segment(d).exponents)
                                            for d, c in combo.coeffs.items()))
    return ElementaryPolynomial(r, combo)


def verify_elementarization(p: Polynomial, r: ElementaryPolynomial,
                            sr: FiniteSemiring | None = None,
                            budget: int = DEFAULT_BUDGET) -> Verdict:
    """Exhaustively compare ``p`` with ``r(e1, ..., en)`` on ``S^n``."""
    sr = require_finite(sr or p.sr)
    if p.n != r.n:
        raise ValueError("variable-count mismatch")
    if sr.order ** p.n > budget:
        return inconclusive(f"{sr.order}^{p.n} points exceed budget {budget}")
    return compare_tables(function_table(p, sr), r.table(sr), sr, p.n)


# --- Frobenius-type identities ------------------------------------------------

def variant_frobenius_check(sr: FiniteSemiring, n_max: int = 6) -> Verdict:
    """``x^n + x^(n-1)*y + y^n == x^n + y^n`` for ``2 <= n <= n_max``."""
    sr = require_finite(sr)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    A, M = sr.add_table, sr.mul_table
    m = sr.order
    P = sr.power_table(n_max)
    xs = np.arange(m)
    first = np.zeros((m, m), dtype=np.int64)
    for n in range(2, n_max + 1):
        xn = P[:, n][:, None]
        yn = P[:, n][None, :]
        mid = M[P[:, n - 1][:, None], xs[None, :]]
        lhs = A[A[xn, mid], yn]
        rhs = A[xn, yn]
        first[(first == 0) & (lhs != rhs)] = n
    hits = np.argwhere(first > 0)
    if not len(hits):
        return holds(f"2 <= n <= {n_max}")
    x, y = (int(v) for v in hits[0])
    return fails((x, y, int(first[x, y])), ("x", "y", "n"),
                 "x^n + x^(n-1)y + y^n != x^n + y^n")


@dataclass
class FrobeniusProduct:
    combination: SegmentCombination
    check: Verdict | None = None


def frobenius_segment_times_elementary(d: Sequence[int], k: int, sr: FiniteSemiring,
                                       verify: bool = True,
                                       budget: int = DEFAULT_BUDGET) -> FrobeniusProduct:
    """``sigma(d) * e_k = sigma(d1+1, ..., dk+1, 0, ..., 0)`` over a symhomomorphic ``sr``.

    Refuses (HypothesisError) when ``sr`` is not symhomomorphic.  With
    ``verify`` the identity is confirmed at every point of ``S^n``.
    """
    sr = require_finite(sr)
    d = check_expansion_precondition(d, k)
    n = len(d)
    hyp = finite.is_symhomomorphic(sr)
    if not hyp.holds:
        raise HypothesisError(f"{sr.name} is not symhomomorphic: {hyp.describe(sr)}")
    lead = tuple(x + 1 for x in d[:k]) + (0,) * (n - k)
    combo = SegmentCombination(sr, n, {lead: sr.one})
    check = None
    if verify:
        if sr.order ** n > budget:
            check = inconclusive(f"{sr.order}^{n} points exceed budget {budget}")
        else:
            lhs = function_table(segment(d, sr) * elementary(n, k, sr))
            check = compare_tables(lhs, function_table(combo.to_polynomial()), sr, n)
    return FrobeniusProduct(combo, check)


def is_symhomomorphic(sr: FiniteSemiring, cross_check: bool = False,
                      n_max: int = 3, max_entry: int = 2) -> Verdict:
    """Frobenius and ``2 = 3``; optionally cross-checked against multiplicativity of sigma."""
    v = finite.is_symhomomorphic(sr)
    if cross_check:
        mult = sigma_multiplicative(sr, n_max, max_entry)
        if mult.holds != v.holds:
            raise AssertionError(
                f"symhomomorphic={v.status} but sigma multiplicativity={mult.status} on {sr.name}")
    return v


def decreasing_sequences(n: int, max_entry: int):
    """All decreasing length-n sequences with entries in ``0..max_entry``."""
    for c in itertools.combinations_with_replacement(range(max_entry, -1, -1), n):
        yield tuple(c)


def sigma_multiplicative(sr: FiniteSemiring, n_max: int = 3, max_entry: int = 2) -> Verdict:
    """``sigma(d' + d'') == sigma(d') * sigma(d'')`` as functions, small n and entries."""
    sr = require_finite(sr)
    for n in range(1, n_max + 1):
        seqs = list(decreasing_sequences(n, max_entry))
        tables = {d: function_table(segment(d, sr)) for d in seqs}
        M = sr.mul_table
        for a, b in itertools.combinations_with_replacement(seqs, 2):
            s = tuple(x + y for x, y in zip(a, b))
            lhs = function_table(segment(s, sr))
            rhs = M[tables[a], tables[b]]
            v = compare_tables(lhs, rhs, sr, n)
            if v.fails:
                return fails((a, b, v.witness[0]), ("d1", "d2", "point"),
                             "sigma(d1+d2) != sigma(d1)*sigma(d2)")
    return holds(f"n <= {n_max}, entries <= {max_entry}")


# --- semantic elementarity ---------------------------------------------------

MEMBER = "member"
NON_MEMBER = "non-member"


@dataclass
class ElementarityResult:
    status: str          # member | non-member | inconclusive
    closure_size: int
    complete: bool
    truncated: bool

    def to_dict(self) -> dict:
        return {"status": self.status, "closure_size": self.closure_size,
                "complete": self.complete, "truncated": self.truncated}


def _as_table(target, sr: FiniteSemiring, n: int) -> np.ndarray:
    if isinstance(target, Polynomial):
        if target.n != n:
            raise ValueError("target has the wrong number of variables")
        return function_table(target, sr)
    t = np.asarray(target).reshape(-1)
    if t.size != sr.order ** n:
        raise ValueError(f"target table needs {sr.order ** n} entries")
    return t


def semantic_elementarity(sr: FiniteSemiring, n: int, target, cap: int = DEFAULT_CAP,
                          budget: int = DEFAULT_BUDGET) -> ElementarityResult:
    """Is the function ``target`` of n arguments a polynomial in ``e1..en``?

    Decided by generating the subalgebra of functions spanned by constants
    and the ``e_k`` tables; a cap hit before the answer is known gives
    ``inconclusive``.
    """
    sr = require_finite(sr)
    if sr.order ** n > budget:
        return ElementarityResult(INCONCLUSIVE, 0, False, False)
    t = _as_table(target, sr, n)
    c = elementary_closure(sr, n, cap).run(target=t)
    if t.astype(np.uint8) in c:
        status = MEMBER
    elif c.complete:
        status = NON_MEMBER
    else:
        status = INCONCLUSIVE
    return ElementarityResult(status, len(c), c.complete, c.truncated)


def _power_horizon(sr: FiniteSemiring) -> tuple[int, int]:
    """(preperiod, period) of the vector of n-th powers."""
    m = sr.order
    xs = np.arange(m)
    seen: dict[bytes, int] = {}
    cur = np.full(m, sr.one, dtype=np.int64)
    e = 0
    while cur.tobytes() not in seen:
        seen[cur.tobytes()] = e
        cur = sr.mul_table[cur, xs]
        e += 1
    pre = seen[cur.tobytes()]
    return pre, e - pre


def segment_tables(sr: FiniteSemiring, n: int) -> dict[tuple[int, ...], np.ndarray]:
    """One representative profile for every distinct function ``sigma(d)`` on ``S^n``.

    Exponents beyond ``preperiod + n * period`` only repeat tables already
    listed, so the finite range covers every segment.
    """
    pre, period = _power_horizon(sr)
    top = pre + n * period
    out: dict[bytes, tuple[tuple[int, ...], np.ndarray]] = {}
    for d in decreasing_sequences(n, top - 1):
        t = function_table(segment(d, sr))
        out.setdefault(t.astype(np.uint8).tobytes(), (d, t))
    return {d: t for d, t in sorted(out.values(), key=lambda v: (sum(v[0]), v[0]))}


def semantic_n_elementary(sr: FiniteSemiring, n: int = 2, cap: int = DEFAULT_CAP) -> Verdict:
    """Every symmetric polynomial function on ``S^n`` lies in the elementary closure.

    Symmetric functions are sums of ``a * sigma(d)`` and the closure is a
    subsemiring containing constants, so it suffices to test each distinct
    segment table.
    """
    sr = require_finite(sr)
    c = elementary_closure(sr, n, cap).run()
    if not c.complete:
        return inconclusive(f"closure cap {cap} reached")
    for d, t in segment_tables(sr, n).items():
        if t.astype(np.uint8) not in c:
            return fails((d,), ("profile",), f"sigma{d} not a polynomial in e1..e{n}; closure size {len(c)}")
    return holds(f"closure size {len(c)}")


def is_semantically_symmetric(table, sr: FiniteSemiring, n: int) -> bool:
    """Values invariant under every permutation of the arguments."""
    t = np.asarray(table).reshape((sr.order,) * n)
    return all(np.array_equal(t, np.transpose(t, perm)) for perm in itertools.permutations(range(n)))


def solve_numeral_equation(sr: FiniteSemiring, a, b) -> list[int]:
    """All ``u`` with ``a + u = b``; ints are read as numerals.  Exploratory only."""
    sr = require_finite(sr)
    if isinstance(a, int):
        a = sr.numeral(a)
    if isinstance(b, int):
        b = sr.numeral(b)
    return [u for u in sr.elements() if sr.add(a, u) == b]


# --- theorem suites ----------------------------------------------------------

@dataclass
class SuiteReport:
    name: str
    semiring: FiniteSemiring
    hypotheses: dict[str, Verdict]
    properties: dict[str, Verdict]
    consistent: bool | None          # None when undecidable here
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        if not all(v.holds for v in self.hypotheses.values()):
            return inconclusive("hypotheses not met")
        if self.consistent is None:
            return inconclusive("unverified")
        if self.consistent:
            return holds()
        return Verdict(FAILS, note="equivalence violated: implementation counterexample")

    def to_dict(self) -> dict:
        sr = self.semiring
        return {
            "suite": self.name,
            "semiring": sr.name,
            "hypotheses": {k: v.to_dict(sr) for k, v in self.hypotheses.items()},
            "properties": {k: v.to_dict(sr) for k, v in self.properties.items()},
            "consistent": self.consistent,
            "verdict": self.verdict.to_dict(sr),
            "notes": self.notes,
        }

    def to_text(self) -> str:
        sr = self.semiring
        lines = [f"{self.name} suite on {sr.name}"]
        for k, v in self.hypotheses.items():
            lines.append(f"  hypothesis {k}: {v.describe(sr)}")
        for k, v in self.properties.items():
            lines.append(f"  {k}: {v.describe(sr)}")
        lines.append(f"  verdict: {self.verdict.describe(sr)}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def _frobenius_power_target(sr: FiniteSemiring, exponent: int) -> Polynomial:
    n = 2
    return Polynomial(sr, n, {(exponent, 0): sr.one, (0, exponent): sr.one})


def theorem_suite_upper_bound(sr: FiniteSemiring, cap: int = DEFAULT_CAP) -> SuiteReport:
    """Upper-bound case: Frobenius iff (semantically) 2-elementary."""
    sr = require_finite(sr)
    hyps = {"upper_bound": finite.is_upper_bound(sr)}
    frob = finite.is_frobenius(sr)
    elem = semantic_n_elementary(sr, 2, cap)
    props = {"frobenius": frob, "two_elementary": elem}
    notes = []
    consistent: bool | None
    if elem.inconclusive:
        consistent = None
        notes.append("closure inconclusive: equivalence unverified")
    else:
        consistent = frob.holds == elem.holds
    if frob.fails:
        n = frob.witness[2]
        res = semantic_elementarity(sr, 2, _frobenius_power_target(sr, n), cap)
        props[f"x^{n}+y^{n} elementary"] = (
            holds() if res.status == MEMBER else
            inconclusive("closure incomplete") if res.status == INCONCLUSIVE else
            fails((n,), ("n",), "x^n + y^n is not a polynomial in e1, e2"))
        if hyps["upper_bound"].holds and res.status == MEMBER:
            consistent = False
            notes.append("x^n + y^n elementary despite Frobenius failure")
    return SuiteReport("upper-bound", sr, hyps, props, consistent, notes)


def theorem_suite_linear(sr: FiniteSemiring) -> SuiteReport:
    """Linearly ordered upper-bound case: Frobenius, supertropical, quasiidempotent, 2=3 agree."""
    sr = require_finite(sr)
    hyps = {"linearly_ordered": finite.is_linearly_ordered(sr),
            "upper_bound": finite.is_upper_bound(sr)}
    props = {
        "frobenius": finite.is_frobenius(sr),
        "supertropical": finite.is_supertropical(sr),
        "quasiidempotent": finite.is_quasiidempotent(sr),
        "two_eq_three": finite.numeral_relations(sr)["two_eq_three"],
    }
    statuses = {v.holds for v in props.values()}
    return SuiteReport("linear", sr, hyps, props, len(statuses) == 1)


# --- lemma transcripts -------------------------------------------------------

LEMMAS = ("variant-frobenius", "factorization", "segment-factorization", "fibers",
          "natural-numbers")


@dataclass
class Transcript:
    lemma: str
    semiring: FiniteSemiring
    hypotheses: dict[str, Verdict]
    statement: Verdict
    scans: dict[str, int] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(v.holds for v in self.hypotheses.values())

    def to_dict(self) -> dict:
        sr = self.semiring
        return {
            "lemma": self.lemma,
            "semiring": sr.name,
            "hypotheses": {k: v.to_dict(sr) for k, v in self.hypotheses.items()},
            "hypotheses_hold": self.hypotheses_hold,
            "statement": self.statement.to_dict(sr),
            "scans": self.scans,
            "details": {k: (v.to_dict(sr) if isinstance(v, Verdict) else v)
                        for k, v in self.details.items()},
        }

    def to_text(self) -> str:
        sr = self.semiring
        lines = [f"lemma {self.lemma} on {sr.name}"]
        for k, v in self.hypotheses.items():
            lines.append(f"  hypothesis {k}: {v.describe(sr)}")
        for k, v in self.scans.items():
            lines.append(f"  scanned {k}: {v}")
        for k, v in self.details.items():
            shown = v.describe(sr) if isinstance(v, Verdict) else v
            lines.append(f"  {k}: {shown}")
        lines.append(f"  statement: {self.statement.describe(sr)}")
        return "\n".join(lines)


def _max_vars(sr: FiniteSemiring, budget: int, cap: int) -> int:
    n = 1
    while n < cap and sr.order ** (n + 1) <= budget:
        n += 1
    return n


def lemma_transcript(sr: FiniteSemiring, lemma: str, n_max: int = 6,
                     budget: int = 200_000) -> Transcript:
    sr = require_finite(sr)
    m = sr.order
    if lemma == "variant-frobenius":
        hyps = {"upper_bound": finite.is_upper_bound(sr), "frobenius": finite.is_frobenius(sr)}
        st = variant_frobenius_check(sr, n_max)
        return Transcript(lemma, sr, hyps, st, {"pairs": m * m, "exponents": n_max - 1})
    if lemma == "factorization":
        hyps = {"symhomomorphic": finite.is_symhomomorphic(sr)}
        nv = _max_vars(sr, budget, 4)
        count = 0
        st = holds()
        for n in range(1, nv + 1):
            for k in range(1, n + 1):
                for head in decreasing_sequences(k, 3):
                    d = head + (0,) * (n - k)
                    lhs = function_table(segment(d, sr) * elementary(n, k, sr))
                    lead = tuple(x + 1 for x in d[:k]) + (0,) * (n - k)
                    v = compare_tables(lhs, function_table(segment(lead, sr)), sr, n)
                    count += 1
                    if v.fails and st.holds:
                        st = fails((d, k, v.witness[0]), ("d", "k", "point"),
                                   "sigma(d)*e_k != sigma(d+1..)")
        return Transcript(lemma, sr, hyps, st, {"identities": count, "max_vars": nv})
    if lemma == "segment-factorization":
        hyps = {"symhomomorphic": finite.is_symhomomorphic(sr)}
        nv = _max_vars(sr, budget, 4)
        count = 0
        st = holds()
        for n in range(1, nv + 1):
            for d in decreasing_sequences(n, 3):
                w = factor_segment(d)
                v = compare_tables(function_table(segment(d, sr)),
                                   function_table(w.polynomial(sr)), sr, n)
                count += 1
                if v.fails and st.holds:
                    st = fails((d, str(w), v.witness[0]), ("d", "word", "point"),
                               "sigma(d) != elementary word")
        return Transcript(lemma, sr, hyps, st, {"segments": count, "max_vars": nv})
    if lemma == "fibers":
        rep = finite.fiber_analysis(sr)
        hyps = {"quasiidempotent": finite.is_quasiidempotent(sr)}
        failed = [v for v in rep.checks.values() if v.fails]
        open_ = [k for k, v in rep.checks.items() if v.inconclusive]
        st = (failed[0] if failed else
              inconclusive("hypotheses unmet for: " + ", ".join(open_)) if open_ else holds())
        details: dict[str, Any] = dict(rep.checks)
        details["ghost_ideal"] = [sr.token(x) for x in rep.ghost.members]
        details["fibers"] = {sr.token(a): [sr.token(x) for x in f] for a, f in rep.fibers.items()}
        return Transcript(lemma, sr, hyps, st, {"elements": m}, details)
    if lemma == "natural-numbers":
        rel = finite.numeral_relations(sr)
        ub = finite.is_upper_bound(sr)
        frob = finite.is_frobenius(sr)
        checks = {
            "2=3 implies 2=4": not rel["two_eq_three"].holds or rel["two_eq_four"].holds,
            "upper-bound and 2=4 implies 2=3": not (ub.holds and rel["two_eq_four"].holds)
            or rel["two_eq_three"].holds,
            "Frobenius implies 2=4": not frob.holds or rel["two_eq_four"].holds,
        }
        bad = [k for k, ok in checks.items() if not ok]
        st = holds() if not bad else Verdict(FAILS, note=bad[0])
        return Transcript(lemma, sr, {}, st, {}, {k: from_bool(ok) for k, ok in checks.items()})
    raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
