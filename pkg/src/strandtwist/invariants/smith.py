"""
Smith Normal Form
=================

Smith normal form over arbitrary-precision integers and the finitely
generated abelian groups it presents.

This module defines:
- SmithNormalForm: elimination with unimodular row/column transforms
- smith_normal_form: diagonal of the normal form
- AbelianGroup: Z/d1 + ... + Z/dk + Z^r
"""

from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence, Tuple

import numpy as np


class SmithNormalForm:
    """
    D = left @ A @ right with unimodular left, right and D diagonal with
    d1 | d2 | ... . Pivots are the nonzero entries of least absolute value.
    Entries are Python ints held in object arrays.
    """

    def __init__(self, A):
        self.A = np.array(A, dtype=object)
        if self.A.ndim != 2:
            self.A = self.A.reshape(0, 0) if self.A.size == 0 else self.A.reshape(1, -1)
        m, n = self.A.shape
        self.left = np.identity(m, dtype=object)
        self.right = np.identity(n, dtype=object)
        self._done = False

    def _pivot(self, s: int) -> Optional[Tuple[int, int]]:
        best, where = None, None
        m, n = self.A.shape
        for i in range(s, m):
            for j in range(s, n):
                v = abs(self.A[i, j])
                if v and (best is None or v < best):
                    best, where = v, (i, j)
        return where

    def _swap_rows(self, a: int, b: int):
        self.A[[a, b]] = self.A[[b, a]]
        self.left[[a, b]] = self.left[[b, a]]

    def _swap_cols(self, a: int, b: int):
        self.A[:, [a, b]] = self.A[:, [b, a]]
        self.right[:, [a, b]] = self.right[:, [b, a]]

    def _add_row(self, target: int, source: int, k):
        """row[target] += k * row[source]"""
        self.A[target] = self.A[target] + k * self.A[source]
        self.left[target] = self.left[target] + k * self.left[source]

    def _add_col(self, target: int, source: int, k):
        self.A[:, target] = self.A[:, target] + k * self.A[:, source]
        self.right[:, target] = self.right[:, target] + k * self.right[:, source]

    def compute(self) -> "SmithNormalForm":
        if self._done:
            return self
        m, n = self.A.shape
        for s in range(min(m, n)):
            while True:
                where = self._pivot(s)
                if where is None:
                    self._done = True
                    return self
                self._swap_rows(s, where[0])
                self._swap_cols(s, where[1])
                p = self.A[s, s]
                for i in range(s + 1, m):
                    if self.A[i, s]:
                        self._add_row(i, s, -(self.A[i, s] // p))
                for j in range(s + 1, n):
                    if self.A[s, j]:
                        self._add_col(j, s, -(self.A[s, j] // p))
                if any(self.A[i, s] for i in range(s + 1, m)) or \
                        any(self.A[s, j] for j in range(s + 1, n)):
                    continue
                bad = next(((i, j) for i in range(s + 1, m) for j in range(s + 1, n)
                            if self.A[i, j] % p), None)
                if bad is not None:
                    self._add_row(s, bad[0], 1)
                    continue
                if p < 0:
                    self.A[s] = -self.A[s]
                    self.left[s] = -self.left[s]
                break
        self._done = True
        return self

    def diagonal(self) -> Tuple[int, ...]:
        self.compute()
        m, n = self.A.shape
        return tuple(int(self.A[i, i]) for i in range(min(m, n)))


def smith_normal_form(A) -> Tuple[int, ...]:
    """Diagonal entries of the Smith normal form of ``A``."""
    return SmithNormalForm(A).diagonal()


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d1 + ... + Z/dk + Z^free_rank with 1 < d1 | d2 | ... | dk."""

    divisors: Tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        assert all(d > 1 for d in self.divisors), "divisors must exceed 1"
        assert all(b % a == 0 for a, b in zip(self.divisors, self.divisors[1:])), \
            "divisors must form a divisibility chain"
        assert self.free_rank >= 0

    @classmethod
    def presented_by(cls, relations: Sequence[Sequence[int]], generators: Optional[int] = None) -> "AbelianGroup":
        """
        Cokernel of the relation matrix: rows are relations among
        ``generators`` (defaults to the column count).
        """
        rows = [list(r) for r in relations]
        n = generators if generators is not None else (len(rows[0]) if rows else 0)
        if not rows or n == 0:
            return cls((), n)
        diag = smith_normal_form(rows)
        nonzero = [abs(v) for v in diag if v]
        return cls(tuple(v for v in nonzero if v > 1), n - len(nonzero))

    def order(self) -> int:
        """Group order, 0 for infinite groups."""
        return 0 if self.free_rank else prod(self.divisors)

    def is_trivial(self) -> bool:
        return not self.divisors and not self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.divisors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"
