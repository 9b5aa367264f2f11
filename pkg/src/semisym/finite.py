"""Exhaustive property checkers for finite uc-semirings.

All scans run over the integer carrier in lexicographic order, so every
failure witness is the lexicographically smallest one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .semiring import (AxiomError, AxiomViolation, FiniteSemiring, Semiring,
                       find_axiom_violation, validate_axioms)
from .verdict import PropertyReport, Verdict, fails, from_bool, holds, inconclusive

__all__ = [
    "AxiomError", "AxiomViolation", "validate_axioms", "find_axiom_violation",
    "IntrinsicOrder", "GhostIdeal", "FiberReport", "intrinsic_order",
    "is_upper_bound", "is_idempotent", "is_linearly_ordered", "is_quasiidempotent",
    "is_supertropical", "is_frobenius", "numeral_relations", "is_symhomomorphic",
    "ghost_ideal", "fiber_analysis", "is_ring", "frobenius_ring_criterion",
    "make_quotient_by_approx", "property_report", "sampled_property_report",
]


def require_finite(sr: Semiring) -> FiniteSemiring:
    if not isinstance(sr, FiniteSemiring):
        raise TypeError(f"{sr!r} is not a finite semiring; exhaustive checks need a finite carrier")
    return sr


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


@dataclass(frozen=True)
class IntrinsicOrder:
    """``leq[a, b]`` iff ``a + x = b`` for some ``x``."""

    leq: np.ndarray

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b] and not self.leq[b, a])

    @property
    def approx(self) -> np.ndarray:
        return self.leq & self.leq.T

    def classes(self) -> list[list[int]]:
        """Blocks of the equivalence ``a <= b and b <= a``, ordered by least member."""
        seen: set[int] = set()
        out = []
        ap = self.approx
        for a in range(len(ap)):
            if a in seen:
                continue
            block = [int(b) for b in np.flatnonzero(ap[a])]
            seen.update(block)
            out.append(block)
        return out

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self.leq)))

    def is_transitive(self) -> bool:
        L = self.leq.astype(np.int64)
        return bool(np.all(~((L @ L) > 0) | self.leq))


def intrinsic_order(sr: FiniteSemiring) -> IntrinsicOrder:
    sr = require_finite(sr)
    m = sr.order
    leq = np.zeros((m, m), dtype=bool)
    rows = np.repeat(np.arange(m), m)
    leq[rows, sr.add_table.reshape(-1)] = True
    leq.setflags(write=False)
    return IntrinsicOrder(leq)


def is_upper_bound(sr: FiniteSemiring) -> Verdict:
    leq = intrinsic_order(sr).leq
    m = sr.order
    bad = leq & leq.T & ~np.eye(m, dtype=bool)
    w = _first(np.triu(bad))
    return holds() if w is None else fails(w, ("a", "b"), "a <= b and b <= a with a != b")


def is_idempotent(sr: FiniteSemiring) -> Verdict:
    sr = require_finite(sr)
    xs = np.arange(sr.order)
    w = _first(sr.add_table[xs, xs] != xs)
    return holds() if w is None else fails(w, ("x",), "x + x != x")


def is_linearly_ordered(sr: FiniteSemiring) -> Verdict:
    leq = intrinsic_order(sr).leq
    w = _first(~(leq | leq.T))
    return holds() if w is None else fails(w, ("a", "b"), "incomparable")


def _nu(sr: FiniteSemiring) -> np.ndarray:
    xs = np.arange(sr.order)
    return sr.add_table[xs, xs]


def is_quasiidempotent(sr: FiniteSemiring) -> Verdict:
    sr = require_finite(sr)
    nu = _nu(sr)
    w = _first(nu[nu] != nu)   # 4x = (2x)+(2x)
    return holds() if w is None else fails(w, ("x",), "x+x+x+x != x+x")


def is_supertropical(sr: FiniteSemiring) -> Verdict:
    q = is_quasiidempotent(sr)
    if not q.holds:
        return fails(q.witness, q.labels, "not quasiidempotent")
    A = sr.add_table
    nu = _nu(sr)
    m = sr.order
    a = np.arange(m)[:, None]
    b = np.arange(m)[None, :]
    distinct = nu[a] != nu[b]
    bad = np.where(distinct, (A != a) & (A != b), A != nu[a])
    w = _first(bad)
    if w is None:
        return holds()
    clause = "a + b not in {a, b}" if distinct[w] else "a + b != nu(a)"
    return fails(w, ("a", "b"), clause)


def _power_scan(sr: FiniteSemiring, n_max: int | None, start: int, bad_at):
    """Scan exponents ``n >= start``; ``bad_at(P_prev, P_n)`` gives an m x m mask.

    ``P_n[z] = z**n``.  Stops once the power vector repeats (all later
    exponents replay earlier ones) or after ``n_max`` / ``m**3`` exponents.
    Returns the first failing exponent per pair (0 where none) and the last
    exponent scanned.
    """
    m = sr.order
    M = sr.mul_table
    xs = np.arange(m)
    bound = m ** 3 if n_max is None else n_max
    first = np.zeros((m, m), dtype=np.int64)
    prev = np.full(m, sr.one, dtype=np.int64)   # z**0
    cur = xs.copy()                              # z**1
    seen = set()
    n = 1
    while n <= bound:
        if n >= start:
            key = (prev.tobytes(), cur.tobytes())
            if n_max is None and key in seen:
                break
            seen.add(key)
            bad = bad_at(prev, cur)
            first[(first == 0) & bad] = n
        prev, cur = cur, M[cur, xs]
        n += 1
    return first, n - 1


def _pair_witness(first: np.ndarray) -> tuple | None:
    w = _first(first > 0)
    return None if w is None else (w[0], w[1], int(first[w]))


def is_frobenius(sr: FiniteSemiring, n_max: int | None = None) -> Verdict:
    """``(x+y)**n == x**n + y**n`` for all pairs and every ``n >= 1``.

    Without ``n_max`` the scan is complete: it runs until the vector of
    n-th powers cycles, which is never later than ``m**3``.
    """
    sr = require_finite(sr)
    A = sr.add_table

    def bad(_, P):
        return P[A] != A[P[:, None], P[None, :]]

    first, scanned = _power_scan(sr, n_max, 1, bad)
    w = _pair_witness(first)
    note = f"scanned n <= {scanned}" + ("" if n_max is None else " (bounded)")
    if w is None:
        return holds(note)
    return fails(w, ("x", "y", "n"), "(x+y)^n != x^n + y^n")


def numeral_relations(sr: FiniteSemiring) -> dict[str, Verdict]:
    sr = require_finite(sr)
    two, three, four = sr.numeral(2), sr.numeral(3), sr.numeral(4)
    leq = intrinsic_order(sr).leq
    return {
        "two_eq_three": from_bool(two == three, (two, three), ("2", "3")),
        "two_eq_four": from_bool(two == four, (two, four), ("2", "4")),
        "two_approx_three": from_bool(bool(leq[two, three] and leq[three, two]),
                                      (two, three), ("2", "3")),
    }


def is_symhomomorphic(sr: FiniteSemiring) -> Verdict:
    """Frobenius together with ``2 = 3``."""
    f = is_frobenius(sr)
    if not f.holds:
        return fails(f.witness, f.labels, "not Frobenius")
    r = numeral_relations(sr)["two_eq_three"]
    if not r.holds:
        return fails(r.witness, r.labels, "2 != 3")
    return holds()


@dataclass(frozen=True)
class GhostIdeal:
    members: tuple[int, ...]
    nu: np.ndarray

    def __contains__(self, x: int) -> bool:
        return x in self.members

    @property
    def image(self) -> frozenset[int]:
        return frozenset(int(v) for v in self.nu)

    def is_projection(self) -> bool:
        return bool(np.array_equal(self.nu[self.nu], self.nu))

    def fiber(self, a: int) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.nu == a)]


def ghost_ideal(sr: FiniteSemiring) -> GhostIdeal:
    sr = require_finite(sr)
    nu = _nu(sr)
    nu.setflags(write=False)
    members = tuple(int(x) for x in np.flatnonzero(nu == np.arange(sr.order)))
    return GhostIdeal(members, nu)


@dataclass
class FiberReport:
    ghost: GhostIdeal
    fibers: dict[int, list[int]]
    maxima: dict[int, int | None]
    checks: dict[str, Verdict] = field(default_factory=dict)


def fiber_analysis(sr: FiniteSemiring) -> FiberReport:
    """Fibers of ``nu`` and the fiber lemmas, each under its own hypotheses.

    A lemma whose hypotheses fail is reported inconclusive, never as a
    counterexample.
    """
    sr = require_finite(sr)
    g = ghost_ideal(sr)
    order = intrinsic_order(sr)
    leq = order.leq
    A = sr.add_table
    m = sr.order
    fibers = {a: g.fiber(a) for a in range(m) if g.fiber(a)}
    maxima: dict[int, int | None] = {}
    for a, fib in fibers.items():
        tops = [x for x in fib if all(leq[y, x] for y in fib)]
        maxima[a] = tops[0] if len(tops) == 1 else None

    quasi = is_quasiidempotent(sr).holds
    ub = is_upper_bound(sr).holds
    lin = is_linearly_ordered(sr).holds
    checks: dict[str, Verdict] = {}

    if quasi:
        bad = [a for a in range(m) if (a in fibers) != (a in g.members)]
        bad += [a for a in fibers if not all(leq[x, a] for x in fibers[a])]
        checks["fiber_max"] = (holds() if not bad
                               else fails((bad[0],), ("a",), "a not the largest element of its fiber"))
    else:
        checks["fiber_max"] = inconclusive("hypothesis: quasiidempotent")

    if quasi and ub:
        w = None
        for x in range(m):
            for a in g.members:
                if leq[x, a] and A[x, a] != a:
                    w = (x, a)
                    break
            if w:
                break
        checks["below_ghost_absorbed"] = (holds() if w is None
                                          else fails(w, ("x", "a"), "x <= a in nuX but x + a != a"))
    else:
        checks["below_ghost_absorbed"] = inconclusive("hypotheses: quasiidempotent, upper-bound")

    if quasi and ub and lin:
        sizes = [a for a in g.members if len(fibers.get(a, [])) not in (1, 2)]
        checks["fiber_size"] = (holds() if not sizes
                                else fails((sizes[0], len(fibers.get(sizes[0], []))),
                                           ("a", "size"), "fiber size not 1 or 2"))
        w = None
        for x in range(m):
            for y in range(m):
                if order.lt(x, y) and A[x, y] != y:
                    w = (x, y)
                    break
            if w:
                break
        checks["strict_sum"] = holds() if w is None else fails(w, ("x", "y"), "x < y but x + y != y")
        w = None
        nu = g.nu
        for x in range(m):
            for y in range(m):
                same = nu[x] == nu[y] and ((x in g) == (y in g))
                if same != (x == y):
                    w = (x, y)
                    break
            if w:
                break
        checks["nu_separates"] = holds() if w is None else fails(w, ("x", "y"))
    else:
        reason = "hypotheses: linearly ordered, upper-bound, quasiidempotent"
        checks["fiber_size"] = inconclusive(reason)
        checks["strict_sum"] = inconclusive(reason)
        checks["nu_separates"] = inconclusive(reason)
    return FiberReport(g, fibers, maxima, checks)


def is_ring(sr: FiniteSemiring) -> Verdict:
    sr = require_finite(sr)
    has_neg = np.any(sr.add_table == sr.zero, axis=1)
    w = _first(~has_neg)
    return holds() if w is None else fails(w, ("x",), "no additive inverse")


def frobenius_ring_criterion(sr: FiniteSemiring) -> Verdict:
    """For a ring: Frobenius iff ``x*y*(x+y) = 0`` for all pairs."""
    if not is_ring(sr).holds:
        raise ValueError(f"{sr.name} is not a ring")
    A, M = sr.add_table, sr.mul_table
    val = M[M, A]
    w = _first(val != sr.zero)
    return holds() if w is None else fails(w, ("x", "y"), "x*y*(x+y) != 0")


def make_quotient_by_approx(sr: FiniteSemiring) -> FiniteSemiring:
    """``X/~`` for ``a ~ b  iff  a <= b and b <= a``; always upper-bound.

    Each class is named by the token of its least member.
    """
    sr = require_finite(sr)
    blocks = intrinsic_order(sr).classes()
    cls = np.empty(sr.order, dtype=np.int64)
    for i, block in enumerate(blocks):
        cls[block] = i
    reps = [b[0] for b in blocks]
    k = len(blocks)
    A = np.empty((k, k), dtype=np.int64)
    M = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            A[i, j] = cls[sr.add(a, b)]
            M[i, j] = cls[sr.mul(a, b)]
    tokens = [sr.token(r) for r in reps]
    return validate_axioms(A, M, int(cls[sr.zero]), int(cls[sr.one]), tokens,
                           f"{sr.name}/~")


def property_report(sr: FiniteSemiring, n_max: int | None = None) -> PropertyReport:
    sr = require_finite(sr)
    rep = PropertyReport(sr)
    rep["upper_bound"] = is_upper_bound(sr)
    rep["linearly_ordered"] = is_linearly_ordered(sr)
    rep["idempotent"] = is_idempotent(sr)
    rep["quasiidempotent"] = is_quasiidempotent(sr)
    rep["supertropical"] = is_supertropical(sr)
    rep["frobenius"] = is_frobenius(sr, n_max)
    for k, v in numeral_relations(sr).items():
        rep[k] = v
    rep["symhomomorphic"] = is_symhomomorphic(sr)
    g = ghost_ideal(sr)
    rep.extra["ghost_ideal"] = [sr.token(x) for x in g.members]
    rep.extra["nu"] = {sr.token(x): sr.token(int(g.nu[x])) for x in range(sr.order)}
    return rep


def sampled_property_report(sr: Semiring, samples: int = 200, seed: int = 0,
                            n_max: int = 8, limit: int = 64) -> PropertyReport:
    """Counterexample search on an infinite carrier.

    Small elements are tried exhaustively in lexicographic order, then
    ``samples`` random tuples drawn from the first ``limit`` elements.  A
    property with no counterexample is reported inconclusive, never holds;
    the numeral relations are decided exactly.
    """
    rng = np.random.default_rng(seed)
    pool = list(sr.elements(limit))
    small = pool[:6]

    def tuples(arity):
        for t in itertools.product(small, repeat=arity):
            yield t
        for _ in range(samples):
            yield tuple(pool[int(i)] for i in rng.integers(len(pool), size=arity))

    def search(arity, bad, labels, note):
        tried = 0
        for t in tuples(arity):
            try:
                w = bad(*t)
            except OverflowError:
                continue
            tried += 1
            if w is not None:
                return fails(w, labels, note)
        return inconclusive(f"no counterexample in {tried} tuples (seed {seed})")

    def frob(x, y):
        for n in range(1, n_max + 1):
            try:
                if sr.pow(sr.add(x, y), n) != sr.add(sr.pow(x, n), sr.pow(y, n)):
                    return (x, y, n)
            except OverflowError:
                if n == 1:
                    raise
                break
        return None

    def leq(a, b):
        return any(sr.add(a, u) == b for u in pool)

    rep = PropertyReport(sr)
    rep["upper_bound"] = search(2, lambda a, b: (a, b) if a != b and leq(a, b) and leq(b, a) else None,
                                ("a", "b"), "a <= b <= a but a != b")
    rep["linearly_ordered"] = search(2, lambda a, b: None if leq(a, b) or leq(b, a) else (a, b),
                                     ("a", "b"), "incomparable")
    rep["idempotent"] = search(1, lambda x: None if sr.add(x, x) == x else (x,), ("x",), "x+x != x")
    rep["quasiidempotent"] = search(
        1, lambda x: None if sr.add(sr.add(x, x), sr.add(x, x)) == sr.add(x, x)
        else (x,), ("x",), "x+x+x+x != x+x")
    rep["frobenius"] = search(2, frob, ("x", "y", "n"), "(x+y)^n != x^n + y^n")
    try:
        two, three, four = sr.numeral(2), sr.numeral(3), sr.numeral(4)
    except OverflowError:
        rep["two_eq_three"] = inconclusive("numerals exceed the cap")
    else:
        rep["two_eq_three"] = from_bool(two == three, (two, three), ("2", "3"))
        rep["two_eq_four"] = from_bool(two == four, (two, four), ("2", "4"))
    f = rep["frobenius"]
    t = rep["two_eq_three"]
    rep["symhomomorphic"] = (fails(f.witness, f.labels, "not Frobenius") if f.fails else
                             fails(t.witness, t.labels, "2 != 3") if t.fails else
                             inconclusive("Frobenius not certified by sampling"))
    rep.extra["sampling"] = {"seed": seed, "samples": samples, "limit": limit, "n_max": n_max}
    return rep
