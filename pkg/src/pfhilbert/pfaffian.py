"""Exact Pfaffians of integer skew-symmetric matrices.

Two independent routes: the perfect-matching sum signed by crossing
number, and expansion along the first row.  The determinant (which is
the square of the Pfaffian) is available as a third check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .exact_arith import ParameterError, binomial, int_det
from .params import RingParams

MATCHING_MAX_ORDER = 12


@dataclass(frozen=True)
class SkewSymMatrix:
    """Integer skew-symmetric matrix storing only the strict upper triangle.

    ``upper`` is row-major: a(0,1), a(0,2), ..., a(0,n-1), a(1,2), ...
    Indices in the public API are 0-based.
    """

    n: int
    upper: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("order must be nonnegative")
        if len(self.upper) != self.n * (self.n - 1) // 2:
            raise ParameterError("wrong number of upper-triangle entries")

    def _offset(self, i: int, j: int) -> int:
        # i < j
        return i * self.n - i * (i + 1) // 2 + (j - i - 1)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self.upper[self._offset(i, j)]
        return -self.upper[self._offset(j, i)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SkewSymMatrix":
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise ParameterError("matrix is not square")
            if rows[i][i] != 0:
                raise ParameterError("diagonal must be zero")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ParameterError("matrix is not skew-symmetric")
        return cls(n, tuple(int(rows[i][j]) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def from_function(cls, n: int, f) -> "SkewSymMatrix":
        return cls(n, tuple(int(f(i, j)) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def random(cls, n: int, lo: int = -9, hi: int = 9, rng: random.Random | None = None):
        rng = rng or random.Random()
        return cls(n, tuple(rng.randint(lo, hi) for _ in range(n * (n - 1) // 2)))

    def rows(self) -> list[list[int]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def submatrix(self, idx: Sequence[int]) -> "SkewSymMatrix":
        idx = list(idx)
        return SkewSymMatrix.from_function(len(idx), lambda a, b: self[idx[a], idx[b]])

    def permuted(self, perm: Sequence[int]) -> "SkewSymMatrix":
        """The matrix with rows and columns reordered: new (a, b) = old (perm[a], perm[b])."""
        return self.submatrix(perm)


def perfect_matchings(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of {0..2m-1}, each as a tuple of pairs (i, j), i < j."""

    def rec(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for k in range(1, len(remaining)):
            rest = remaining[1:k] + remaining[k + 1:]
            for tail in rec(rest):
                yield ((first, remaining[k]),) + tail

    yield from rec(tuple(range(2 * m)))


def crossing_number(matching: Sequence[tuple[int, int]]) -> int:
    """Number of edge pairs (i,j), (k,l) of the matching with i < k < j < l."""
    c = 0
    for a in range(len(matching)):
        i, j = matching[a]
        for b in range(len(matching)):
            k, l = matching[b]
            if i < k < j < l:
                c += 1
    return c


def _require_even(A: SkewSymMatrix) -> None:
    if A.n % 2:
        raise ParameterError(f"Pfaffian needs even order, got {A.n}")


def pfaffian_matchings(A: SkewSymMatrix) -> int:
    """Pf(A) = sum over perfect matchings of (-1)^crossings * product of entries."""
    _require_even(A)
    if A.n > MATCHING_MAX_ORDER:
        raise ParameterError(f"matching enumeration capped at order {MATCHING_MAX_ORDER}")
    total = 0
    for pi in perfect_matchings(A.n // 2):
        prod = 1
        for i, j in pi:
            prod *= A[i, j]
            if not prod:
                break
        if prod:
            total += -prod if crossing_number(pi) % 2 else prod
    return total


def pfaffian_expansion(A: SkewSymMatrix) -> int:
    """Pf(A) by expansion along the first remaining row.

    Pf(A) = sum_j (-1)^(j+1) a(1,j) Pf(A without rows/cols 1, j) in 1-based
    terms.  Sub-Pfaffians are memoized on the bitmask of remaining indices,
    so cost is O(2^n * n) rather than (n-1)!!.
    """
    _require_even(A)
    n = A.n

    @lru_cache(maxsize=None)
    def pf(mask: int) -> int:
        if mask == 0:
            return 1
        idx = [i for i in range(n) if mask >> i & 1]
        first = idx[0]
        total = 0
        for pos, j in enumerate(idx[1:]):
            a = A[first, j]
            if a:
                sub = pf(mask & ~(1 << first) & ~(1 << j))
                total += a * sub if pos % 2 == 0 else -a * sub
        return total

    return pf((1 << n) - 1)


def det_skew(A: SkewSymMatrix) -> int:
    """Exact determinant; zero for odd order."""
    if A.n % 2:
        return 0
    return int_det(A.rows())


def generator_count(params: RingParams) -> int:
    """Number of (2r+2)-Pfaffian minors generating I_{r+1}(X)."""
    return binomial(params.n, 2 * params.r + 2)


def block_diagonal(*blocks: SkewSymMatrix) -> SkewSymMatrix:
    offsets = []
    n = 0
    for b in blocks:
        offsets.append(n)
        n += b.n

    def entry(i, j):
        for off, b in zip(offsets, blocks):
            if off <= i < off + b.n:
                if off <= j < off + b.n:
                    return b[i - off, j - off]
                return 0
        return 0

    return SkewSymMatrix.from_function(n, entry)
