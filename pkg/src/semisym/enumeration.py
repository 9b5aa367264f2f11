"""Enumeration of small uc-semirings up to isomorphism.

Zero and one are pinned to indices 0 and 1.  The free cells (upper
triangles of both tables outside the rows fixed by the identities) are
filled by backtracking; after every assignment the partially filled tables
are checked for associativity and distributivity on all triples whose
entries are already defined.  A completed pair of tables is kept only if
it is the lexicographically smallest among its relabellings by
permutations fixing 0 and 1.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .semiring import FiniteSemiring, find_axiom_violation

MAX_ORDER = 4
UNDEF = -1


def _partial_ok(A: np.ndarray, M: np.ndarray) -> bool:
    """No violated associativity / distributivity among defined entries.

    Arrays are padded with an extra row and column of ``UNDEF`` so that an
    undefined index (-1) reads back as undefined.
    """
    m = A.shape[0] - 1
    xs = np.arange(m)
    a = xs[:, None, None]
    b = xs[None, :, None]
    c = xs[None, None, :]
    for T in (A, M):
        l = T[T[a, b], c]
        r = T[a, T[b, c]]
        if np.any((l >= 0) & (r >= 0) & (l != r)):
            return False
    l = M[a, A[b, c]]
    r = A[M[a, b], M[a, c]]
    return not np.any((l >= 0) & (r >= 0) & (l != r))


def _canonical(A: np.ndarray, M: np.ndarray, perms: list[np.ndarray]) -> bool:
    """Is ``(A, M)`` the smallest relabelling (by flattened tables)?"""
    key = np.concatenate([A.ravel(), M.ravel()])
    for p in perms:
        inv = np.argsort(p)
        A2 = p[A[np.ix_(inv, inv)]]
        M2 = p[M[np.ix_(inv, inv)]]
        other = np.concatenate([A2.ravel(), M2.ravel()])
        diff = np.flatnonzero(other != key)
        if len(diff) and other[diff[0]] < key[diff[0]]:
            return False
    return True


def enumerate_semirings(order: int, max_order: int = MAX_ORDER) -> Iterator[FiniteSemiring]:
    """Every uc-semiring with ``order`` elements, one per isomorphism class."""
    if order < 1:
        raise ValueError("order must be positive")
    if order > max_order:
        raise ValueError(f"enumeration capped at order {max_order}")
    m = order
    if m == 1:
        yield FiniteSemiring([[0]], [[0]], 0, 0, ["0"], "trivial")
        return
    A = np.full((m + 1, m + 1), UNDEF, dtype=np.int64)
    M = np.full((m + 1, m + 1), UNDEF, dtype=np.int64)
    A[0, :m] = A[:m, 0] = np.arange(m)
    M[0, :m] = M[:m, 0] = 0
    M[1, :m] = M[:m, 1] = np.arange(m)
    cells = [(A, i, j) for i in range(1, m) for j in range(i, m)]
    cells += [(M, i, j) for i in range(2, m) for j in range(i, m)]
    perms = [np.array((0, 1) + p) for p in itertools.permutations(range(2, m))][1:]
    count = 0

    def fill(pos: int):
        nonlocal count
        if pos == len(cells):
            a, mu = A[:m, :m].copy(), M[:m, :m].copy()
            if find_axiom_violation(a, mu, 0, 1) is None and _canonical(a, mu, perms):
                count += 1
                yield FiniteSemiring(a, mu, 0, 1, None, f"E{m}.{count}")
            return
        T, i, j = cells[pos]
        for v in range(m):
            T[i, j] = T[j, i] = v
            if _partial_ok(A, M):
                yield from fill(pos + 1)
        T[i, j] = T[j, i] = UNDEF

    yield from fill(0)


def count_semirings(order: int) -> int:
    return sum(1 for _ in enumerate_semirings(order))
