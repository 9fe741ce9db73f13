"""Static 2d point/rectangle structures. All intervals are closed.

Rectangles are ``((x1, x2), (y1, y2))``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

import numpy as np

Rect = tuple[tuple[int, int], tuple[int, int]]


def _check_rect(r: Rect):
    (x1, x2), (y1, y2) = r
    if x1 > x2 or y1 > y2:
        raise ValueError(f"inverted rectangle {r}")


class RangeEmptiness:
    """Range tree over x with sorted y lists: O(n log n) build, O(log^2 n) query."""

    def __init__(self, points: Sequence[tuple[int, int]]):
        pts = sorted(points)
        self.xs = [p[0] for p in pts]
        n = len(pts)
        size = 1
        while size < max(n, 1):
            size *= 2
        self._size = size
        ys: list[list[int]] = [[] for _ in range(2 * size)]
        for i, (_, y) in enumerate(pts):
            ys[size + i] = [y]
        for v in range(size - 1, 0, -1):
            a, b = ys[2 * v], ys[2 * v + 1]
            ys[v] = sorted(a + b) if a and b else (a or b)
        self._ys = ys

    def is_empty(self, rect: Rect) -> bool:
        _check_rect(rect)
        (x1, x2), (y1, y2) = rect
        lo = bisect_left(self.xs, x1) + self._size
        hi = bisect_right(self.xs, x2) + self._size
        ys = self._ys
        while lo < hi:
            if lo & 1:
                col = ys[lo]
                if bisect_right(col, y2) > bisect_left(col, y1):
                    return False
                lo += 1
            if hi & 1:
                hi -= 1
                col = ys[hi]
                if bisect_right(col, y2) > bisect_left(col, y1):
                    return False
            lo >>= 1
            hi >>= 1
        return True


def emptiness_build(points) -> RangeEmptiness:
    return RangeEmptiness(points)


def emptiness_query(structure: RangeEmptiness, rect: Rect) -> bool:
    return structure.is_empty(rect)


class RectStabbing:
    """Segment tree over the elementary x-slots of the rectangles; each node
    keeps the union of the y-intervals assigned to it as sorted disjoint runs.
    O(r log r) build, O(log^2 r) query.
    """

    def __init__(self, rects: Sequence[Rect]):
        for r in rects:
            _check_rect(r)
        # slot k is the half-open x-range [xs[k], xs[k+1])
        xs = sorted({r[0][0] for r in rects} | {r[0][1] + 1 for r in rects})
        self.xs = xs
        size = 1
        while size < max(len(xs) - 1, 1):
            size *= 2
        self._size = size
        raw: dict[int, list[tuple[int, int]]] = {}
        for (x1, x2), yr in rects:
            lo = bisect_left(xs, x1) + size
            hi = bisect_left(xs, x2 + 1) + size
            while lo < hi:
                if lo & 1:
                    raw.setdefault(lo, []).append(yr)
                    lo += 1
                if hi & 1:
                    hi -= 1
                    raw.setdefault(hi, []).append(yr)
                lo >>= 1
                hi >>= 1
        self._starts: dict[int, list[int]] = {}
        self._ends: dict[int, list[int]] = {}
        for v, ivs in raw.items():
            ivs.sort()
            st, en = [ivs[0][0]], [ivs[0][1]]
            for a, b in ivs[1:]:
                if a <= en[-1] + 1:
                    if b > en[-1]:
                        en[-1] = b
                else:
                    st.append(a)
                    en.append(b)
            self._starts[v], self._ends[v] = st, en

    def stabs(self, x: int, y: int) -> bool:
        k = bisect_right(self.xs, x) - 1
        if k < 0 or k >= len(self.xs) - 1:
            return False
        v = k + self._size
        starts, ends = self._starts, self._ends
        while v >= 1:
            st = starts.get(v)
            if st is not None:
                i = bisect_right(st, y) - 1
                if i >= 0 and ends[v][i] >= y:
                    return True
            v >>= 1
        return False


def stabbing_build(rects) -> RectStabbing:
    return RectStabbing(rects)


def stabbing_query(structure: RectStabbing, point: tuple[int, int]) -> bool:
    return structure.stabs(*point)


class GridStabber:
    """Counts of covering rectangles on the grid [1, m]^2 via 2d prefix sums.

    Each rectangle adds +1/-1 at its four corners of an (m+2)^2 array;
    summing along both axes leaves the containment count in every cell.
    """

    def __init__(self, rects: Sequence[Rect], m: int):
        self.m = m
        g = np.zeros((m + 2, m + 2), dtype=np.int32)
        if rects:
            arr = np.asarray(rects, dtype=np.int64).reshape(-1, 4)
            x1, x2, y1, y2 = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
            if (x1 > x2).any() or (y1 > y2).any():
                raise ValueError("inverted rectangle")
            if arr.min() < 1 or arr.max() > m:
                raise ValueError(f"rectangle coordinate outside [1, {m}]")
            np.add.at(g, (x1, y1), 1)
            np.add.at(g, (x1, y2 + 1), -1)
            np.add.at(g, (x2 + 1, y1), -1)
            np.add.at(g, (x2 + 1, y2 + 1), 1)
            g = g.cumsum(axis=0).cumsum(axis=1)
        self.counts = g

    def count(self, x: int, y: int) -> int:
        if not (1 <= x <= self.m and 1 <= y <= self.m):
            raise ValueError(f"point ({x}, {y}) outside [1, {self.m}]^2")
        return int(self.counts[x, y])

    def stabs(self, x: int, y: int) -> bool:
        return self.count(x, y) > 0


def grid_stab_build(rects, m: int) -> GridStabber:
    return GridStabber(rects, m)


def grid_stab_query(grid: GridStabber, point: tuple[int, int]) -> bool:
    return grid.stabs(*point)


def nested_stab_offline(points: Sequence[tuple[int, int]], rects: Sequence[Rect],
                        h: int | None = None) -> list[bool]:
    """Which points stab some rectangle of a nested family, in O(h + r).

    Points form a permutation pairing on [1, h]. Rectangle t has an
    x-interval inside that of t-1 and a y-interval containing that of t-1.
    A point (x, y) is inside rectangle t iff t <= last(x) and t >= first(y),
    where last(x) is the last rectangle whose x-interval holds x and
    first(y) the first whose y-interval holds y. Both tables are filled by
    sweeping the rectangles and setting each cell once.
    """
    if h is None:
        h = len(points)
    for t in range(1, len(rects)):
        (a1, b1), (c1, d1) = rects[t - 1]
        (a2, b2), (c2, d2) = rects[t]
        if not (a1 <= a2 and b2 <= b1 and c2 <= c1 and d1 <= d2):
            raise ValueError(f"rectangles {t - 1} and {t} are not nested")
    for r in rects:
        _check_rect(r)
    last = [-1] * (h + 2)
    first = [len(rects)] * (h + 2)
    # x-intervals shrink: walking backwards they grow, so each new cell of
    # the larger interval gets the current index and is never touched again
    lo, hi = 1, 0
    for t in range(len(rects) - 1, -1, -1):
        (a, b), _ = rects[t]
        a, b = max(a, 1), min(b, h)
        if lo > hi:
            for x in range(a, b + 1):
                last[x] = t
            lo, hi = a, b
            continue
        for x in range(a, lo):
            last[x] = t
        for x in range(hi + 1, b + 1):
            last[x] = t
        lo, hi = min(lo, a), max(hi, b)
    lo, hi = 1, 0
    for t, (_, (c, d)) in enumerate(rects):
        c, d = max(c, 1), min(d, h)
        if lo > hi:
            for y in range(c, d + 1):
                first[y] = t
            lo, hi = c, d
            continue
        for y in range(c, lo):
            first[y] = t
        for y in range(hi + 1, d + 1):
            first[y] = t
        lo, hi = min(lo, c), max(hi, d)
    return [first[y] <= last[x] for x, y in points]
