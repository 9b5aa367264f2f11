"""Multivariate polynomials over a semiring, with symmetric segments.

A polynomial is kept in canonical form: a map from dense exponent vectors to
nonzero coefficients, equal exponent vectors merged by semiring addition.
"""

from __future__ import annotations

import itertools
import math
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .constructions import make_natural
from .semiring import FiniteSemiring, NaturalSemiring, Semiring
from .verdict import Verdict, fails, holds, inconclusive

MAX_VARS = 8
MAX_DEGREE = 16
DEFAULT_BUDGET = 2_000_000

Exps = tuple[int, ...]


def same_semiring(a: Semiring, b: Semiring) -> bool:
    if a is b:
        return True
    if isinstance(a, FiniteSemiring) and isinstance(b, FiniteSemiring):
        return a.same_tables(b)
    return isinstance(a, NaturalSemiring) and isinstance(b, NaturalSemiring) and a.cap == b.cap


class Polynomial:
    """Canonical polynomial in ``x1..xn`` over ``sr``."""

    __slots__ = ("sr", "n", "terms")

    def __init__(self, sr: Semiring, n: int, terms: dict[Exps, object] | None = None):
        if not 0 <= n <= MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported, got {n}")
        self.sr = sr
        self.n = n
        self.terms: dict[Exps, object] = {}
        for e, c in (terms or {}).items():
            self._accumulate(tuple(e), c)

    def _accumulate(self, e: Exps, c) -> None:
        if len(e) != self.n:
            raise ValueError(f"exponent vector {e} has wrong length for {self.n} variables")
        if any(x < 0 for x in e):
            raise ValueError(f"negative exponent in {e}")
        if any(x > MAX_DEGREE for x in e):
            raise ValueError(f"exponent above the cap {MAX_DEGREE} in {e}")
        sr = self.sr
        new = sr.add(self.terms[e], c) if e in self.terms else c
        if new == sr.zero:
            self.terms.pop(e, None)
        else:
            self.terms[e] = new

    @classmethod
    def from_terms(cls, sr: Semiring, n: int, terms: Iterable[tuple[object, Sequence[int]]]) -> "Polynomial":
        """Merge a raw multiset of ``(coeff, exps)`` monomials."""
        p = cls(sr, n)
        for c, e in terms:
            p._accumulate(tuple(e), c)
        return p

    @classmethod
    def constant(cls, sr: Semiring, n: int, c) -> "Polynomial":
        return cls(sr, n, {(0,) * n: c})

    @classmethod
    def variable(cls, sr: Semiring, n: int, i: int) -> "Polynomial":
        """The variable ``x{i+1}`` (``i`` counted from zero)."""
        e = [0] * n
        e[i] = 1
        return cls(sr, n, {tuple(e): sr.one})

    def _compatible(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError("can only combine polynomials")
        if other.n != self.n:
            raise ValueError(f"variable-count mismatch: {self.n} vs {other.n}")
        if not same_semiring(self.sr, other.sr):
            raise ValueError("polynomials over different semirings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        out = Polynomial(self.sr, self.n, self.terms)
        for e, c in other.terms.items():
            out._accumulate(e, c)
        return out

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        sr = self.sr
        out = Polynomial(sr, self.n)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out._accumulate(tuple(a + b for a, b in zip(e1, e2)), sr.mul(c1, c2))
        return out

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.sr, self.n, self.sr.one)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "Polynomial":
        sr = self.sr
        return Polynomial.from_terms(sr, self.n, ((sr.mul(c, v), e) for e, v in self.terms.items()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and same_semiring(self.sr, other.sr)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((max(e, default=0) for e in self.terms), default=0)

    def evaluate(self, point: Sequence) -> object:
        return evaluate(self, point)

    def sorted_terms(self) -> list[tuple[Exps, object]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self}, n={self.n}, over {self.sr.name})"


def format_monomial(sr: Semiring, c, e: Exps) -> str:
    factors = []
    for i, k in enumerate(e):
        if k == 1:
            factors.append(f"x{i + 1}")
        elif k > 1:
            factors.append(f"x{i + 1}^{k}")
    if not factors:
        return sr.token(c)
    if c != sr.one:
        factors.insert(0, sr.token(c))
    return "*".join(factors)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return p.sr.token(p.sr.zero)
    return " + ".join(format_monomial(p.sr, c, e) for e, c in p.sorted_terms())


# --- evaluation ------------------------------------------------------------

def evaluate(p: Polynomial, point: Sequence) -> object:
    if len(point) != p.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.n} variables")
    sr = p.sr
    total = sr.zero
    for e, c in p.terms.items():
        term = c
        for x, k in zip(point, e):
            if k:
                term = sr.mul(term, sr.pow(x, k))
        total = sr.add(total, term)
    return total


def evaluate_raw(sr: Semiring, terms: Iterable[tuple[object, Sequence[int]]], point: Sequence) -> object:
    """Evaluate an unmerged multiset of monomials."""
    total = sr.zero
    for c, e in terms:
        term = c
        for x, k in zip(point, e):
            term = sr.mul(term, sr.pow(x, k))
        total = sr.add(total, term)
    return total


def point_grid(m: int, n: int) -> np.ndarray:
    """All points of ``{0..m-1}^n`` as an ``(n, m**n)`` array, lexicographic."""
    if n == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((m,) * n, dtype=np.int64).reshape(n, -1)


def _check_budget(sr: FiniteSemiring, n: int, budget: int) -> bool:
    return sr.order ** n <= budget


def function_table_from_terms(sr: FiniteSemiring, n: int, terms: Iterable[tuple[int, Sequence[int]]],
                              inputs: np.ndarray | None = None) -> np.ndarray:
    """Values of ``sum c * prod x_i**e_i`` at every point, as a flat array.

    ``inputs`` (shape ``(n, N)``) substitutes arbitrary argument columns for
    the grid, which is how compositions such as ``r(e1, ..., en)`` are
    evaluated without expanding them.
    """
    if inputs is None:
        inputs = point_grid(sr.order, n)
    terms = list(terms)
    top = max((max(e, default=0) for _, e in terms), default=0)
    P = sr.power_table(top)
    A, M = sr.add_table, sr.mul_table
    size = inputs.shape[1]
    total = np.full(size, sr.zero, dtype=np.int64)
    for c, e in terms:
        acc = np.full(size, c, dtype=np.int64)
        for i, k in enumerate(e):
            if k:
                acc = M[acc, P[inputs[i], k]]
        total = A[total, acc]
    return total


def function_table(p: Polynomial, sr: FiniteSemiring | None = None,
                   inputs: np.ndarray | None = None) -> np.ndarray:
    sr = sr or p.sr
    if not isinstance(sr, FiniteSemiring):
        raise TypeError("function tables need a finite semiring")
    return function_table_from_terms(sr, p.n, ((c, e) for e, c in p.terms.items()), inputs)


def functions_equal(p: Polynomial, q: Polynomial, sr: FiniteSemiring | None = None,
                    budget: int = DEFAULT_BUDGET) -> Verdict:
    """Compare two polynomial functions at every point of ``S^n``."""
    p._compatible(q)
    sr = sr or p.sr
    if not isinstance(sr, FiniteSemiring):
        raise TypeError("exhaustive comparison needs a finite semiring")
    if not _check_budget(sr, p.n, budget):
        return inconclusive(f"{sr.order}^{p.n} points exceed budget {budget}")
    return compare_tables(function_table(p, sr), function_table(q, sr), sr, p.n)


def compare_tables(t1: np.ndarray, t2: np.ndarray, sr: FiniteSemiring, n: int) -> Verdict:
    diff = np.flatnonzero(t1 != t2)
    if not len(diff):
        return holds(f"{len(t1)} points")
    idx = int(diff[0])
    point = tuple(int(v) for v in np.unravel_index(idx, (sr.order,) * n)) if n else ()
    return fails((point, int(t1[idx]), int(t2[idx])), ("point", "left", "right"))


# --- segments --------------------------------------------------------------

def as_decreasing(d: Sequence[int], warn: bool = True) -> Exps:
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise ValueError(f"negative entry in {d}")
    s = tuple(sorted(d, reverse=True))
    if s != d and warn:
        warnings.warn(f"exponent profile {d} is not decreasing; using {s}", stacklevel=3)
    return s


def segment_exponents(d: Sequence[int]) -> list[Exps]:
    """Distinct rearrangements of ``d``, in decreasing lexicographic order."""
    return sorted(set(itertools.permutations(d)), reverse=True)


def multiset_permutation_count(d: Sequence[int]) -> int:
    count = math.factorial(len(d))
    for k in Counter(d).values():
        count //= math.factorial(k)
    return count


def segment(d: Sequence[int], sr: Semiring | None = None) -> Polynomial:
    """Minimal symmetric segment: every distinct rearrangement of ``d`` with coefficient one."""
    sr = sr or make_natural()
    d = as_decreasing(d)
    return Polynomial(sr, len(d), {e: sr.one for e in segment_exponents(d)})


def elementary(n: int, k: int, sr: Semiring | None = None) -> Polynomial:
    if not 0 <= k <= n:
        raise ValueError(f"e_{k} needs 0 <= k <= n = {n}")
    return segment((1,) * k + (0,) * (n - k), sr)


class SegmentCombination:
    """``sum a_k * sigma(d_k)`` with distinct decreasing ``d_k``; zeros dropped."""

    def __init__(self, sr: Semiring, n: int, coeffs: dict[Exps, object] | None = None):
        self.sr = sr
        self.n = n
        self.coeffs: dict[Exps, object] = {}
        for d, c in (coeffs or {}).items():
            self.add_term(d, c)

    def add_term(self, d: Sequence[int], c) -> None:
        d = as_decreasing(d)
        if len(d) != self.n:
            raise ValueError(f"profile {d} has wrong length for {self.n} variables")
        sr = self.sr
        new = sr.add(self.coeffs[d], c) if d in self.coeffs else c
        if new == sr.zero:
            self.coeffs.pop(d, None)
        else:
            self.coeffs[d] = new

    def items(self) -> list[tuple[Exps, object]]:
        return sorted(self.coeffs.items(), key=lambda t: t[0], reverse=True)

    def to_polynomial(self) -> Polynomial:
        sr = self.sr
        return Polynomial.from_terms(sr, self.n, ((c, e) for d, c in self.coeffs.items()
                                                  for e in segment_exponents(d)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, SegmentCombination) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return self.sr.token(self.sr.zero)
        parts = []
        for d, c in self.items():
            s = "sigma(" + ",".join(map(str, d)) + ")"
            parts.append(s if c == self.sr.one else f"{self.sr.token(c)}*{s}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SegmentCombination({self})"


class NotSymmetric(ValueError):
    """Raised with an orbit whose coefficients differ."""

    def __init__(self, profile: Exps, exps: tuple[Exps, Exps], coeffs: tuple, sr: Semiring):
        self.profile = profile
        self.exps = exps
        self.coeffs = coeffs
        super().__init__(
            f"not symmetric: orbit of {profile} has coefficient {sr.token(coeffs[0])} at {exps[0]} "
            f"but {sr.token(coeffs[1])} at {exps[1]}")


def detect_symmetric(p: Polynomial) -> SegmentCombination:
    """Rewrite ``p`` as a combination of segments, or raise :class:`NotSymmetric`."""
    sr = p.sr
    orbits: dict[Exps, object] = {}
    for e, c in p.terms.items():
        orbits.setdefault(tuple(sorted(e, reverse=True)), c)
    combo = SegmentCombination(sr, p.n)
    for d in sorted(orbits, reverse=True):
        members = segment_exponents(d)
        coeffs = [p.terms.get(e, sr.zero) for e in members]
        for e, c in zip(members, coeffs):
            if c != coeffs[0]:
                raise NotSymmetric(d, (members[0], e), (coeffs[0], c), sr)
        combo.add_term(d, coeffs[0])
    return combo


def is_symmetric(p: Polynomial) -> bool:
    try:
        detect_symmetric(p)
    except NotSymmetric:
        return False
    return True


def extend_with_zero_variable(combo: SegmentCombination) -> SegmentCombination:
    """Same combination with a trailing zero appended to every profile."""
    return SegmentCombination(combo.sr, combo.n + 1,
                              {d + (0,): c for d, c in combo.coeffs.items()})


# --- segment times elementary ----------------------------------------------

@dataclass(frozen=True)
class ExpansionTerm:
    j: int                  # position (1-based) of the last 1 in alpha
    alpha: Exps
    multiplicity: int
    profile: Exps           # d + alpha


@dataclass
class Expansion:
    d: Exps
    k: int
    raw_products: int
    terms: list[ExpansionTerm]
    combination: SegmentCombination
    raw: Counter

    @property
    def leading(self) -> ExpansionTerm:
        return next(t for t in self.terms if t.j == self.k)


def index_sets(d: Sequence[int], k: int) -> dict[int, list[Exps]]:
    """``I^d_j``: binary ``alpha`` with k ones, last one at ``j``, ``d + alpha`` decreasing."""
    n = len(d)
    out: dict[int, list[Exps]] = {j: [] for j in range(k, n + 1)}
    for ones in itertools.combinations(range(n), k):
        alpha = tuple(1 if i in ones else 0 for i in range(n))
        s = [a + b for a, b in zip(d, alpha)]
        if all(s[i] >= s[i + 1] for i in range(n - 1)):
            j = (max(ones) + 1) if ones else 0
            if j >= k:
                out[j].append(alpha)
    return out


def check_expansion_precondition(d: Sequence[int], k: int) -> Exps:
    d = tuple(int(x) for x in d)
    n = len(d)
    if list(d) != sorted(d, reverse=True):
        raise ValueError(f"{d} is not decreasing")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n = {n}, got k={k}")
    if any(d[k:]):
        raise ValueError(f"nonzero entries of {d} must lie among the first k={k} positions")
    return d


def segment_times_elementary(d: Sequence[int], k: int, sr: Semiring | None = None) -> Expansion:
    """Expand ``sigma(d) * e_k`` by brute force over N and regroup into segments.

    The multiplicities are natural numbers; the returned combination maps
    them into ``sr`` through numerals.  Raises AssertionError if the product
    does not have the structure indexed by the sets ``I^d_j``.
    """
    d = check_expansion_precondition(d, k)
    n = len(d)
    sr = sr or make_natural()
    left = segment_exponents(d)
    right = segment_exponents((1,) * k + (0,) * (n - k))
    raw: Counter = Counter()
    for a in left:
        for b in right:
            raw[tuple(x + y for x, y in zip(a, b))] += 1
    by_profile: dict[Exps, set[int]] = {}
    for e, mult in raw.items():
        by_profile.setdefault(tuple(sorted(e, reverse=True)), set()).add(mult)
    sets = index_sets(d, k)
    expected = {tuple(a + b for a, b in zip(d, alpha)): (j, alpha)
                for j, alphas in sets.items() for alpha in alphas}
    terms = []
    for prof in sorted(by_profile, reverse=True):
        mults = by_profile[prof]
        assert len(mults) == 1, f"orbit {prof} has unequal multiplicities {mults}"
        assert prof in expected, f"profile {prof} is not d + alpha for any alpha in I^d_j"
        # every rearrangement of the profile must occur
        assert sum(1 for e in raw if tuple(sorted(e, reverse=True)) == prof) == \
            multiset_permutation_count(prof)
        j, alpha = expected[prof]
        terms.append(ExpansionTerm(j, alpha, mults.pop(), prof))
    assert len(terms) == len(expected), "some alpha in I^d_j produced no term"
    lead = [t for t in terms if t.j == k]
    assert len(lead) == 1 and lead[0].multiplicity == 1
    assert lead[0].profile == tuple(x + 1 for x in d[:k]) + (0,) * (n - k)
    combo = SegmentCombination(sr, n)
    for t in terms:
        combo.add_term(t.profile, sr.numeral(t.multiplicity))
    return Expansion(d, k, len(left) * len(right), terms, combo, raw)
