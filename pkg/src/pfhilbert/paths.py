"""Combinatorial oracles: lattice paths counted by NE-turns, faces of the
Pfaffian simplicial complex, and the light-and-shadow map between them.

Conventions: a path is a start point plus a word over ``"R"`` (unit step
in +x) and ``"U"`` (unit step in +y).  Faces live in the upper triangular
region ``{(x, y): 1 <= x < y <= n}``; the light-and-shadow map first
sends them to the lower region by ``(x, y) -> (y - 1, x)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exact_arith import IntPolynomial, ParameterError, binomial, int_det
from .params import RingParams

FACES_MAX_N = 8
TRANSFER_MAX_N = 14


class FeasibilityError(RuntimeError):
    """Exhaustive enumeration requested beyond its size cap."""


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LatticePath:
    start: LatticePoint
    steps: str

    def __post_init__(self):
        object.__setattr__(self, "start", LatticePoint(*self.start))
        if set(self.steps) - {"R", "U"}:
            raise ParameterError(f"steps must be over 'R'/'U', got {self.steps!r}")

    @property
    def end(self) -> LatticePoint:
        return LatticePoint(self.start.x + self.steps.count("R"), self.start.y + self.steps.count("U"))

    def points(self) -> list[LatticePoint]:
        x, y = self.start
        out = [LatticePoint(x, y)]
        for s in self.steps:
            if s == "R":
                x += 1
            else:
                y += 1
            out.append(LatticePoint(x, y))
        return out

    def turn_points(self) -> list[LatticePoint]:
        """Points that end an Up step and start a Right step."""
        pts = self.points()
        return [pts[i + 1] for i in range(len(self.steps) - 1) if self.steps[i:i + 2] == "UR"]

    def extend(self, before: int, after: int) -> "LatticePath":
        """Prepend ``before`` Right steps and append ``after`` Up steps."""
        return LatticePath(LatticePoint(self.start.x - before, self.start.y), "R" * before + self.steps + "U" * after)


PathFamily = tuple  # tuple[LatticePath, ...]


def ne_turns(p: LatticePath) -> int:
    return sum(1 for i in range(len(p.steps) - 1) if p.steps[i] == "U" and p.steps[i + 1] == "R")


def family_turns(family: Iterable[LatticePath]) -> int:
    return sum(ne_turns(p) for p in family)


def endpoints(params: RingParams) -> list[tuple[LatticePoint, LatticePoint]]:
    """Start/end pairs (A_i, E_i), i = 1..r."""
    params.require_formula_valid()
    n, r = params.n, params.r
    return [
        (LatticePoint(r + i - 1, r - i + 1), LatticePoint(n - r + i - 1, n - r - i + 1))
        for i in range(1, r + 1)
    ]


def _paths_between(a: LatticePoint, e: LatticePoint, blocked: set, below_diagonal: bool) -> Iterator[str]:
    """Step words from a to e avoiding ``blocked`` (and y > x if requested)."""
    if a in blocked or (below_diagonal and a.y > a.x):
        return
    word: list[str] = []

    def rec(x: int, y: int):
        if x == e.x and y == e.y:
            yield "".join(word)
            return
        if x < e.x:
            p = (x + 1, y)
            if p not in blocked:
                word.append("R")
                yield from rec(x + 1, y)
                word.pop()
        if y < e.y:
            p = (x, y + 1)
            if p not in blocked and not (below_diagonal and y + 1 > x):
                word.append("U")
                yield from rec(x, y + 1)
                word.pop()

    if a.x > e.x or a.y > e.y:
        return
    yield from rec(a.x, a.y)


def enumerate_nonintersecting(
    starts: Sequence[LatticePoint],
    ends: Sequence[LatticePoint],
    below_diagonal: bool = True,
) -> Iterator[tuple[LatticePath, ...]]:
    """Vertex-disjoint families P_i: starts[i] -> ends[i], depth first in index order."""
    starts = [LatticePoint(*a) for a in starts]
    ends = [LatticePoint(*e) for e in ends]
    if len(starts) != len(ends):
        raise ParameterError("starts and ends differ in length")
    occupied: set = set()
    chosen: list[LatticePath] = []

    def rec(i: int):
        if i == len(starts):
            yield tuple(chosen)
            return
        for word in _paths_between(starts[i], ends[i], occupied, below_diagonal):
            path = LatticePath(starts[i], word)
            pts = path.points()
            occupied.update(pts)
            chosen.append(path)
            yield from rec(i + 1)
            chosen.pop()
            occupied.difference_update(pts)

    yield from rec(0)


def enumerate_families(params: RingParams) -> Iterator[tuple[LatticePath, ...]]:
    """Every nonintersecting family A_i -> E_i never passing above x = y."""
    ends = endpoints(params)
    return enumerate_nonintersecting([a for a, _ in ends], [e for _, e in ends])


def turn_gf(params: RingParams) -> IntPolynomial:
    """Generating function of the families by total number of NE-turns."""
    counts = Counter(family_turns(f) for f in enumerate_families(params))
    top = max(counts) if counts else -1
    return IntPolynomial(counts.get(m, 0) for m in range(top + 1))


def shifted_endpoints(params: RingParams, factor: int) -> tuple[list[LatticePoint], list[LatticePoint]]:
    """Endpoints after prepending factor*(i-1) Rights and appending factor*(i-1) Ups to P_i.

    factor=1 gives A'_i=(r, r-i+1), E'_i=(n-r+i-1, n-r); factor=2 gives
    the diagonal endpoints A''_i=(r-i+1, r-i+1), E''_i=(n-r+i-1, n-r+i-1).
    """
    starts, ends = [], []
    for i, (a, e) in enumerate(endpoints(params), start=1):
        k = factor * (i - 1)
        starts.append(LatticePoint(a.x - k, a.y))
        ends.append(LatticePoint(e.x, e.y + k))
    return starts, ends


# --- faces -----------------------------------------------------------------


def region_points(n: int) -> list[LatticePoint]:
    """The upper triangular region {1 <= x < y <= n} in lexicographic order."""
    return [LatticePoint(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]


def longest_chain(points: Iterable[tuple[int, int]]) -> int:
    """Longest sequence with strictly increasing x and strictly decreasing y."""
    # Sorting equal x by increasing y forbids two same-x points in one chain.
    ys = [y for _, y in sorted(points)]
    best: list[int] = []
    for k, y in enumerate(ys):
        best.append(1 + max((best[j] for j in range(k) if ys[j] > y), default=0))
    return max(best, default=0)


def face_is_valid(S: Iterable[tuple[int, int]], params: RingParams) -> bool:
    pts = [LatticePoint(*p) for p in S]
    for x, y in pts:
        if not (1 <= x < y <= params.n):
            raise ParameterError(f"point {(x, y)} outside 1 <= x < y <= {params.n}")
    return longest_chain(pts) <= params.r


def iter_faces(params: RingParams) -> Iterator[tuple[LatticePoint, ...]]:
    """All faces (including the empty one), by pruned subset DFS.

    Points are added in lexicographic order, so a new point can only be the
    last element of a chain; ``best[k]`` tracks the longest chain among the
    chosen points that could precede point k.
    """
    if params.n > FACES_MAX_N:
        raise FeasibilityError(f"face enumeration capped at n <= {FACES_MAX_N}")
    pts = region_points(params.n)
    N, r = len(pts), params.r
    dominated = [
        [k for k in range(j + 1, N) if pts[k].x > pts[j].x and pts[k].y < pts[j].y]
        for j in range(N)
    ]
    best = [0] * N
    chosen: list[LatticePoint] = []

    def rec(start: int):
        yield tuple(chosen)
        for j in range(start, N):
            length = best[j] + 1
            if length > r:
                continue
            saved = [(k, best[k]) for k in dominated[j] if best[k] < length]
            for k, _ in saved:
                best[k] = length
            chosen.append(pts[j])
            yield from rec(j + 1)
            chosen.pop()
            for k, old in saved:
                best[k] = old

    yield from rec(0)


def _f_vector_dfs(params: RingParams) -> list[int]:
    sizes = Counter(len(S) for S in iter_faces(params))
    top = max(sizes)
    return [sizes.get(c, 0) for c in range(1, top + 1)]


def _f_vector_transfer(params: RingParams) -> list[int]:
    """Face counts by a column-by-column transfer computation.

    Points sharing an x-coordinate never chain, so faces can be built one
    column at a time.  The state after a column is g[y] = longest chain
    among chosen points with second coordinate > y.
    """
    n, r = params.n, params.r
    if n > TRANSFER_MAX_N:
        raise FeasibilityError(f"transfer face count capped at n <= {TRANSFER_MAX_N}")
    states: dict[tuple[int, ...], list[int]] = {tuple([0] * (n + 1)): [1]}
    for x in range(1, n):
        ys = list(range(x + 1, n + 1))
        new_states: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for g, poly in states.items():
            for size in range(len(ys) + 1):
                for T in combinations(ys, size):
                    lengths = [g[y] + 1 for y in T]
                    if any(length > r for length in lengths):
                        continue
                    g2 = list(g)
                    for y, length in zip(T, lengths):
                        for yy in range(y):
                            if g2[yy] < length:
                                g2[yy] = length
                    acc = new_states[tuple(g2)]
                    need = len(poly) + size
                    if len(acc) < need:
                        acc.extend([0] * (need - len(acc)))
                    for c, v in enumerate(poly):
                        acc[c + size] += v
        states = new_states
    total: list[int] = []
    for poly in states.values():
        if len(total) < len(poly):
            total.extend([0] * (len(poly) - len(total)))
        for c, v in enumerate(poly):
            total[c] += v
    while total and total[-1] == 0:
        total.pop()
    return total[1:]


def f_vector(params: RingParams, method: str = "transfer") -> list[int]:
    """f_i = number of faces of cardinality i+1, for i = 0, 1, ...

    ``method="dfs"`` enumerates faces one by one (n <= 8);
    ``method="transfer"`` counts them column by column.
    """
    params.require_formula_valid()
    if method == "dfs":
        return _f_vector_dfs(params)
    if method == "transfer":
        return _f_vector_transfer(params)
    raise ParameterError(f"unknown f_vector method {method!r}")


# --- light and shadow ------------------------------------------------------


def reflect(S: Iterable[tuple[int, int]]) -> set[LatticePoint]:
    """(x, y) -> (y - 1, x): upper region to lower region {1 <= y <= x <= n-1}."""
    return {LatticePoint(y - 1, x) for x, y in S}


def in_strip(p: tuple[int, int], params: RingParams) -> bool:
    s = p[0] + p[1]
    return 2 * params.r <= s <= 2 * params.n - 2 * params.r


def _shadow_border(points: set, a: LatticePoint, e: LatticePoint) -> LatticePath:
    """Top-left border of the union of shadows of ``points`` + {a, e}, from a to e."""
    relevant = [p for p in points if p.x <= e.x] + [a, e]
    height = {}
    for x in range(a.x, e.x + 1):
        height[x] = max(p.y for p in relevant if p.x <= x)
    if height[a.x] < a.y or any(p.x < a.x and p.y > a.y for p in relevant):
        raise ParameterError("shadow border does not start at the prescribed point")
    if height[e.x] != e.y:
        raise ParameterError("shadow border does not end at the prescribed point")
    steps = ["U"] * (height[a.x] - a.y)
    for x in range(a.x + 1, e.x + 1):
        steps.append("R")
        steps.extend("U" * (height[x] - height[x - 1]))
    return LatticePath(a, "".join(steps))


def light_shadow(S: Iterable[tuple[int, int]], params: RingParams) -> tuple[LatticePath, ...]:
    """Map a face to a nonintersecting family by iterated shadow borders."""
    S = list(S)
    if not face_is_valid(S, params):
        raise ParameterError("point set violates the chain condition")
    remaining = {p for p in reflect(S) if in_strip(p, params)}
    family = []
    for a, e in endpoints(params):
        path = _shadow_border(remaining, a, e)
        remaining.difference_update(path.points())
        family.append(path)
    if remaining:
        raise ParameterError(f"points left after {params.r} iterations: {sorted(remaining)}")
    return tuple(family)


def fiber_counts(params: RingParams) -> Counter:
    """Counter of (family, |S|) over all faces S under light_shadow."""
    out: Counter = Counter()
    for S in iter_faces(params):
        fam = light_shadow(S, params)
        reflected = reflect(S)
        for p in fam:
            for t in p.turn_points():
                if t not in reflected:
                    raise AssertionError(f"turn {t} of image family not covered by face {S}")
        out[tuple(p.steps for p in fam), len(S)] += 1
    return out


def fiber_size_check(params: RingParams) -> bool:
    """Every family with m turns is hit by exactly C(d-m, c-m) faces of size c."""
    params.require_formula_valid()
    d = params.d
    counts = fiber_counts(params)
    families = {tuple(p.steps for p in f): family_turns(f) for f in enumerate_families(params)}
    if any(key not in families for key, _ in counts):
        return False
    for key, m in families.items():
        for c in range(d + 1):
            if counts.get((key, c), 0) != binomial(d - m, c - m):
                return False
    return True


# --- Catalan / Hankel ------------------------------------------------------


def catalan(k: int) -> int:
    if k < 0:
        raise ParameterError("catalan index must be nonnegative")
    return binomial(2 * k, k) // (k + 1)


def lgv_hankel(params: RingParams) -> int:
    """det_{1<=i,j<=r} C_{n-2r+i+j-2}: number of families (turns ignored)."""
    params.require_formula_valid()
    n, r = params.n, params.r
    return int_det([[catalan(n - 2 * r + i + j - 2) for j in range(1, r + 1)] for i in range(1, r + 1)])
