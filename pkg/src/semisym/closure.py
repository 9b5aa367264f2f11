"""Subalgebras of the function semiring S^(S^n) generated by seed tables.

Every element of the generated subalgebra is a finite sum of finite
products of seeds, so the closure is built in two fixpoints: the
multiplicative semigroup of the seeds, then the additive semigroup of
those products.  The result is closed under pointwise ``*`` as well, by
distributivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .semiring import FiniteSemiring

DEFAULT_CAP = 2_000_000


class _Codec:
    """Injective row -> sortable key.  Base-m integers when they fit in 64 bits."""

    def __init__(self, m: int, width: int):
        self.m = m
        self.width = width
        self.packed = width * np.log2(max(m, 2)) < 63
        if self.packed:
            self.weights = (np.uint64(m) ** np.arange(width, dtype=np.uint64)).astype(np.uint64)

    def keys(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.uint8).reshape(-1, self.width)
        if self.packed:
            return rows.astype(np.uint64) @ self.weights
        return rows.view(np.dtype((np.void, self.width))).ravel()

    def rows(self, keys: np.ndarray) -> np.ndarray:
        if self.packed:
            out = np.empty((len(keys), self.width), dtype=np.uint8)
            k = keys.copy()
            for i in range(self.width):
                out[:, i] = k % np.uint64(self.m)
                k //= np.uint64(self.m)
            return out
        return np.frombuffer(keys.tobytes(), dtype=np.uint8).reshape(-1, self.width)


def _isin_sorted(keys: np.ndarray, sorted_keys: np.ndarray) -> np.ndarray:
    if not len(sorted_keys):
        return np.zeros(len(keys), dtype=bool)
    i = np.searchsorted(sorted_keys, keys)
    i[i == len(sorted_keys)] = 0
    return sorted_keys[i] == keys


@dataclass
class FunctionClosure:
    """Closure of ``seeds`` (flat tables over ``S^n``) under pointwise + and *.

    Tables are compared as raw bytes; the member set is a sorted array of
    byte keys, so membership and set difference are vectorized.
    """

    sr: FiniteSemiring
    n: int
    seeds: list[np.ndarray]
    cap: int = DEFAULT_CAP
    complete: bool = field(default=False, init=False)
    truncated: bool = field(default=False, init=False)

    def __post_init__(self):
        self.width = self.sr.order ** self.n
        self.seeds = [np.asarray(s, dtype=np.uint8).reshape(self.width) for s in self.seeds]
        self.codec = _Codec(self.sr.order, self.width)
        self._keys = self.codec.keys(np.zeros((0, self.width), dtype=np.uint8))
        self.products = np.zeros((0, self.width), dtype=np.uint8)

    def _key(self, table) -> np.ndarray:
        return self.codec.keys(np.asarray(table, dtype=np.uint8))

    def __contains__(self, table) -> bool:
        return bool(_isin_sorted(self._key(table), self._keys)[0])

    def __len__(self) -> int:
        return len(self._keys)

    def tables(self) -> np.ndarray:
        return self.codec.rows(self._keys)

    def _fixpoint(self, known: np.ndarray, frontier: np.ndarray, gens: np.ndarray,
                  op: np.ndarray, stop: np.ndarray | None):
        """Grow ``known`` (sorted keys) by ``op(member, gen)`` until nothing new appears.

        Returns the new key array and ``"target"``, ``"cap"`` or None.
        """
        while len(frontier):
            fresh = []
            for g in gens:
                keys = np.unique(self.codec.keys(op[frontier, g[None, :]]))
                keys = keys[~_isin_sorted(keys, known)]
                for f in fresh:
                    keys = keys[~_isin_sorted(keys, f)]
                if len(keys):
                    fresh.append(keys)
                    if len(known) + sum(map(len, fresh)) >= self.cap:
                        self.truncated = True
                        return np.sort(np.concatenate([known] + fresh)), "cap"
            if not fresh:
                break
            new = np.unique(np.concatenate(fresh))
            known = np.sort(np.concatenate([known, new]))
            if stop is not None and _isin_sorted(stop, new)[0]:
                return known, "target"
            frontier = self.codec.rows(new)
        return known, None

    def run(self, target=None) -> "FunctionClosure":
        """Compute the closure; with ``target`` stop as soon as it is generated."""
        stop = None if target is None else self._key(target)
        mul = self.sr.mul_table.astype(np.uint8)
        add = self.sr.add_table.astype(np.uint8)
        seeds = np.unique(self.codec.keys(np.array(self.seeds, dtype=np.uint8)))
        gens = self.codec.rows(seeds)
        prods, reason = self._fixpoint(seeds, gens, gens, mul, None)
        if reason == "cap":
            self._keys = prods
            return self
        self.products = self.codec.rows(prods)
        self._keys = prods
        if stop is not None and _isin_sorted(stop, prods)[0]:
            return self
        self._keys, reason = self._fixpoint(prods, self.products, self.products, add, stop)
        self.complete = reason is None
        return self


def constant_tables(sr: FiniteSemiring, n: int) -> list[np.ndarray]:
    size = sr.order ** n
    return [np.full(size, c, dtype=np.uint8) for c in range(sr.order)]


def elementary_seed_tables(sr: FiniteSemiring, n: int) -> list[np.ndarray]:
    from .poly import elementary, function_table
    return [function_table(elementary(n, k, sr)).astype(np.uint8) for k in range(1, n + 1)]


def elementary_closure(sr: FiniteSemiring, n: int, cap: int = DEFAULT_CAP,
                       extra: Iterable[np.ndarray] = ()) -> FunctionClosure:
    seeds = constant_tables(sr, n) + elementary_seed_tables(sr, n) + list(extra)
    return FunctionClosure(sr, n, seeds, cap)
