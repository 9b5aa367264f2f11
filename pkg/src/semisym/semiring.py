"""Unital commutative semirings: the abstract interface and its two carriers.

Finite semirings are stored as addition / multiplication tables over the
indices ``0..m-1``; elements are plain ints.  The natural numbers are
provided separately with exact big-integer arithmetic and an optional cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Semiring:
    """Base class: subclasses supply ``zero``, ``one``, ``add`` and ``mul``."""

    name: str = "semiring"
    zero = None
    one = None
    carrier_kind = "finite"

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.carrier_kind == "finite"

    def sum(self, xs: Iterable):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def prod(self, xs: Iterable):
        total = self.one
        for x in xs:
            total = self.mul(total, x)
        return total

    def pow(self, x, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, x)
            n >>= 1
            if n:
                x = self.mul(x, x)
        return result

    def numeral(self, n: int):
        """The element ``1 + ... + 1`` (n times), by doubling."""
        if n < 0:
            raise ValueError("numerals are natural numbers")
        result, unit = self.zero, self.one
        while n:
            if n & 1:
                result = self.add(result, unit)
            unit = self.add(unit, unit)
            n >>= 1
        return result

    def token(self, x) -> str:
        raise NotImplementedError

    def parse_token(self, text: str):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class NaturalSemiring(Semiring):
    """(N, +, 0, *, 1) with exact integers.

    With ``cap`` set this is only a window onto N, not a semiring: any result
    above the cap raises OverflowError instead of wrapping.
    """

    carrier_kind = "countably-infinite"
    zero = 0
    one = 1

    def __init__(self, cap: int | None = None):
        if cap is not None and cap < 1:
            raise ValueError("cap must be at least 1")
        self.cap = cap
        self.name = "natural" if cap is None else f"natural<={cap}"

    @property
    def closed(self) -> bool:
        return self.cap is None

    def _check(self, v: int) -> int:
        if self.cap is not None and v > self.cap:
            raise OverflowError(f"{v} exceeds cap {self.cap} of {self.name}")
        return v

    def add(self, a: int, b: int) -> int:
        return self._check(a + b)

    def mul(self, a: int, b: int) -> int:
        return self._check(a * b)

    def numeral(self, n: int) -> int:
        if n < 0:
            raise ValueError("numerals are natural numbers")
        return self._check(n)

    def token(self, x: int) -> str:
        return str(x)

    def parse_token(self, text: str) -> int:
        if not text.isdigit():
            raise KeyError(text)
        return self._check(int(text))

    def elements(self, limit: int) -> range:
        """First ``limit`` naturals, for sampling."""
        top = limit if self.cap is None else min(limit, self.cap + 1)
        return range(top)


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness}"


class AxiomError(ValueError):
    def __init__(self, violation: AxiomViolation, tokens: Sequence[str] | None = None):
        self.violation = violation
        if tokens is not None:
            shown = tuple(tokens[i] for i in violation.witness)
        else:
            shown = violation.witness
        super().__init__(f"axiom {violation.axiom!r} violated, witness {shown}")


class FiniteSemiring(Semiring):
    """A uc-semiring on ``{0, ..., m-1}`` given by its operation tables.

    Construct through :func:`validate_axioms` unless the tables are known to
    be good; the constructor itself only checks shapes.
    """

    carrier_kind = "finite"

    def __init__(self, add, mul, zero: int, one: int,
                 tokens: Sequence[str] | None = None, name: str = "finite"):
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise ValueError(f"tables must both be m x m, got {add.shape} and {mul.shape}")
        m = add.shape[0]
        if m < 1:
            raise ValueError("empty carrier")
        for t in (add, mul):
            if t.min() < 0 or t.max() >= m:
                raise ValueError("table entries out of range")
        if not (0 <= zero < m and 0 <= one < m):
            raise ValueError("zero/one out of range")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add_table = add
        self.mul_table = mul
        self._add = add.tolist()
        self._mul = mul.tolist()
        self.zero = int(zero)
        self.one = int(one)
        self.order = m
        if tokens is None:
            tokens = [str(i) for i in range(m)]
        tokens = [str(t) for t in tokens]
        if len(tokens) != m or len(set(tokens)) != m:
            raise ValueError("element tokens must be m distinct strings")
        self.tokens = tuple(tokens)
        self._index = {t: i for i, t in enumerate(self.tokens)}
        self.name = name

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def elements(self) -> range:
        return range(self.order)

    def token(self, x: int) -> str:
        return self.tokens[x]

    def parse_token(self, text: str) -> int:
        return self._index[text]

    def power_table(self, max_exp: int) -> np.ndarray:
        """``P[x, e] = x**e`` for ``0 <= e <= max_exp``."""
        m = self.order
        table = np.empty((m, max_exp + 1), dtype=np.int64)
        table[:, 0] = self.one
        xs = np.arange(m)
        for e in range(1, max_exp + 1):
            table[:, e] = self.mul_table[table[:, e - 1], xs]
        return table

    def numerals(self, upto: int) -> list[int]:
        out = [self.zero]
        for _ in range(upto):
            out.append(self.add(out[-1], self.one))
        return out

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "FiniteSemiring":
        """Isomorphic copy where old element ``i`` becomes ``perm[i]``."""
        perm = np.asarray(perm)
        inv = np.argsort(perm)
        add = perm[self.add_table[np.ix_(inv, inv)]]
        mul = perm[self.mul_table[np.ix_(inv, inv)]]
        tokens = [self.tokens[i] for i in inv]
        return FiniteSemiring(add, mul, int(perm[self.zero]), int(perm[self.one]),
                              tokens, name or self.name)

    def same_tables(self, other: "FiniteSemiring") -> bool:
        return (self.order == other.order and self.zero == other.zero
                and self.one == other.one
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table))

    def __repr__(self) -> str:
        return f"<FiniteSemiring {self.name} order={self.order}>"


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    if len(hits):
        return tuple(int(i) for i in hits[0])
    return None


def find_axiom_violation(add, mul, zero: int, one: int) -> AxiomViolation | None:
    """First failing uc-semiring axiom, with a lexicographically minimal witness."""
    A = np.asarray(add, dtype=np.int64)
    M = np.asarray(mul, dtype=np.int64)
    m = A.shape[0]
    xs = np.arange(m)
    checks = [
        ("additive identity", A[zero] != xs),
        ("additive commutativity", A != A.T),
        ("additive associativity", A[A[:, :, None], xs[None, None, :]]
         != A[xs[:, None, None], A[None, :, :]]),
        ("absorbing zero", (M[zero] != zero) | (M[:, zero] != zero)),
        ("multiplicative identity", (M[one] != xs) | (M[:, one] != xs)),
        ("multiplicative commutativity", M != M.T),
        ("multiplicative associativity", M[M[:, :, None], xs[None, None, :]]
         != M[xs[:, None, None], M[None, :, :]]),
        ("distributivity", M[xs[:, None, None], A[None, :, :]]
         != A[M[:, :, None], M[:, None, :]]),
    ]
    for name, bad in checks:
        w = _first(bad)
        if w is not None:
            return AxiomViolation(name, w)
    return None


def validate_axioms(add, mul, zero: int = 0, one: int = 1,
                    tokens: Sequence[str] | None = None,
                    name: str = "finite") -> FiniteSemiring:
    """Check every uc-semiring axiom exhaustively and build the semiring.

    Raises ValueError for malformed tables and :class:`AxiomError` (carrying
    the violation) for the first failing axiom.
    """
    sr = FiniteSemiring(add, mul, zero, one, tokens, name)
    v = find_axiom_violation(sr.add_table, sr.mul_table, sr.zero, sr.one)
    if v is not None:
        raise AxiomError(v, sr.tokens)
    return sr
