"""Built-in semirings.

Every finite construction goes through ``validate_axioms`` before it is
returned, so a bad table is caught at build time rather than in a checker.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .semiring import FiniteSemiring, NaturalSemiring, validate_axioms


def _from_ops(values: Sequence, add: Callable, mul: Callable, zero, one,
              tokens: Sequence[str], name: str) -> FiniteSemiring:
    index = {v: i for i, v in enumerate(values)}
    m = len(values)
    A = np.empty((m, m), dtype=np.int64)
    M = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(values):
        for j, b in enumerate(values):
            A[i, j] = index[add(a, b)]
            M[i, j] = index[mul(a, b)]
    return validate_axioms(A, M, index[zero], index[one], tokens, name)


def make_boolean() -> FiniteSemiring:
    return _from_ops([0, 1], lambda a, b: a | b, lambda a, b: a & b, 0, 1,
                     ["0", "1"], "boolean")


def make_natural(cap: int | None = None) -> NaturalSemiring:
    """N with exact arithmetic; a cap turns it into a non-closed sampling window."""
    return NaturalSemiring(cap)


def make_zn(n: int) -> FiniteSemiring:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    vals = list(range(n))
    return _from_ops(vals, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n,
                     0, 1 % n, [str(v) for v in vals], f"Z{n}")


def make_n_quotient(a: int, b: int) -> FiniteSemiring:
    """N modulo the smallest congruence with ``a ~ b``.

    Numbers below ``a`` stay distinct; from ``a`` on they are identified
    modulo ``b - a``.  Carrier ``[0], ..., [b-1]``.
    """
    if not 0 <= a < b:
        raise ValueError(f"need 0 <= a < b, got a={a}, b={b}")
    period = b - a

    def reduce(x: int) -> int:
        return x if x < b else a + (x - a) % period

    vals = list(range(b))
    return _from_ops(vals, lambda x, y: reduce(x + y), lambda x, y: reduce(x * y),
                     0, reduce(1), [f"[{v}]" for v in vals], f"N_{a}={b}")


def make_saturated_natural(k: int) -> FiniteSemiring:
    """``{0..k}`` with ``min(x+y, k)`` and ``min(x*y, k)``."""
    if k < 1:
        raise ValueError("saturation level must be >= 1")
    vals = list(range(k + 1))
    return _from_ops(vals, lambda x, y: min(x + y, k), lambda x, y: min(x * y, k),
                     0, 1, [str(v) for v in vals], f"satN{k}")


NEG_INF = None
NEG_INF_TOKEN = "inf-"


def make_truncated_maxplus(k: int) -> FiniteSemiring:
    """``{-inf, 0..k}`` with max as addition and saturating + as multiplication."""
    if k < 0:
        raise ValueError("truncation level must be >= 0")
    vals = [NEG_INF] + list(range(k + 1))

    def plus(x, y):
        if x is NEG_INF:
            return y
        if y is NEG_INF:
            return x
        return max(x, y)

    def times(x, y):
        if x is NEG_INF or y is NEG_INF:
            return NEG_INF
        return min(x + y, k)

    tokens = [NEG_INF_TOKEN] + [str(v) for v in range(k + 1)]
    return _from_ops(vals, plus, times, NEG_INF, 0, tokens, f"maxplus{k}")


def chain_monoid(length: int) -> np.ndarray:
    """Multiplication of the chain ``0 < 1 < ... < length-1`` under truncated +."""
    g = np.arange(length)
    return np.minimum(g[:, None] + g[None, :], length - 1)


def make_supertropical(base) -> FiniteSemiring:
    """Supertropical semiring over a finite linearly ordered monoid.

    Carrier: ``0``, tangibles ``t0..t{L-1}`` and ghosts ``g0..g{L-1}``; the
    ghost map sends both ``tg`` and ``gg`` to ``gg``.  Sums keep the summand
    with the larger ghost, and equal ghosts collapse to the ghost.

    ``base`` is either a chain length ``L`` or a pair ``(op_table, unit)``
    whose rows are listed in increasing order.  For a chain length the
    monoid is ``{0..L-1}`` under addition; a tangible product that overflows
    the top lands on the top ghost (this is the quotient of the supertropical
    semiring over ``(N, +)`` collapsing everything above ``t{L-1}``, so it is
    distributive).  An explicit table uses the plain rule
    ``tg * th = t(gh)`` and is only accepted if the result validates.
    """
    if isinstance(base, (int, np.integer)):
        L = int(base)
        if L < 1:
            raise ValueError("chain length must be >= 1")
        g = np.arange(L)
        raw = g[:, None] + g[None, :]
        op = np.minimum(raw, L - 1)
        overflow = raw > L - 1
        unit = 0
        name = f"super{L}"
    else:
        op, unit = base
        op = np.asarray(op, dtype=np.int64)
        L = op.shape[0]
        overflow = np.zeros_like(op, dtype=bool)
        name = f"super[{L}]"

    def tangible(i):
        return 1 + i

    def ghost(i):
        return 1 + L + i

    m = 2 * L + 1
    level = np.zeros(m, dtype=np.int64)   # position in the chain; unused for zero
    is_ghost = np.zeros(m, dtype=bool)
    for i in range(L):
        level[tangible(i)] = level[ghost(i)] = i
        is_ghost[ghost(i)] = True
    A = np.zeros((m, m), dtype=np.int64)
    M = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            if a == 0 or b == 0:
                A[a, b] = b if a == 0 else a
                M[a, b] = 0
                continue
            la, lb = level[a], level[b]
            if la != lb:
                A[a, b] = a if la > lb else b
            else:
                A[a, b] = ghost(la)
            p = op[la, lb]
            if is_ghost[a] or is_ghost[b] or overflow[la, lb]:
                M[a, b] = ghost(p)
            else:
                M[a, b] = tangible(p)
    tokens = ["0"] + [f"t{i}" for i in range(L)] + [f"g{i}" for i in range(L)]
    return validate_axioms(A, M, 0, tangible(unit), tokens, name)


_BUILTINS = {
    "boolean": (make_boolean, 0),
    "natural": (make_natural, None),
    "zn": (make_zn, 1),
    "nq": (make_n_quotient, 2),
    "sat": (make_saturated_natural, 1),
    "maxplus": (make_truncated_maxplus, 1),
    "super": (make_supertropical, 1),
}


def builtin(spec: str):
    """Build a semiring from an id like ``sat:3``, ``nq:2:4``, ``super:2``.

    ``quotient:<id>`` wraps another id in the X/~ construction.
    """
    from .finite import make_quotient_by_approx

    head, _, rest = spec.partition(":")
    if head == "quotient":
        return make_quotient_by_approx(builtin(rest))
    if head not in _BUILTINS:
        raise KeyError(f"unknown built-in semiring {head!r}; known: {', '.join(sorted(_BUILTINS))}, quotient")
    fn, arity = _BUILTINS[head]
    args = [int(a) for a in rest.split(":")] if rest else []
    if head == "natural":
        return fn(*args)
    if len(args) != arity:
        raise ValueError(f"{head} takes {arity} integer parameter(s)")
    return fn(*args)
