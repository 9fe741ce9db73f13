"""Exact matching across segments: active prefixes and their extension.

Prefix sets are Python ints used as bit vectors over [0, m]: bit j set
means the pattern prefix of length j is in the set.
"""
from __future__ import annotations

from .eds import as_pattern, segment_strings


def bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def from_bits(items) -> int:
    v = 0
    for j in items:
        v |= 1 << j
    return v


def failure_function(p: str) -> list[int]:
    """fail[k] = length of the longest proper border of p[:k]."""
    m = len(p)
    fail = [0] * (m + 1)
    k = 0
    for i in range(1, m):
        while k and p[i] != p[k]:
            k = fail[k]
        if p[i] == p[k]:
            k += 1
        fail[i + 1] = k
    return fail


class PatternIndex:
    """Per-pattern tables reused by every segment: automata for both
    directions and a memo of per-string masks.
    """

    def __init__(self, pattern):
        p = as_pattern(pattern)
        self.p = p
        self.m = m = len(p)
        self.rp = p[::-1]
        self.full = (1 << (m + 1)) - 1
        self.fail = failure_function(p)
        self.rfail = failure_function(self.rp)
        self.border_mask = self._border_masks(self.fail)
        self.rborder_mask = self._border_masks(self.rfail)
        self._memo: dict[str, tuple] = {}
        self.cache: dict = {}

    def _border_masks(self, fail: list[int]) -> list[int]:
        bm = [0] * (self.m + 1)
        for k in range(1, self.m + 1):
            bm[k] = (1 << k) | bm[fail[k]]
        return bm

    @staticmethod
    def _run(p: str, fail: list[int], s: str) -> int:
        """Longest prefix of p that is a suffix of s."""
        m = len(p)
        k = 0
        for c in s[-m:] if len(s) > m else s:
            if k == m:
                k = fail[k]
            while k and c != p[k]:
                k = fail[k]
            if c == p[k]:
                k += 1
        return k

    def occurrence_mask(self, s: str) -> int:
        """Bit i set iff s occurs in the pattern starting right after prefix i."""
        if not s:
            return self.full
        p = self.p
        mask = 0
        i = p.find(s)
        while i >= 0:
            mask |= 1 << i
            i = p.find(s, i + 1)
        return mask

    def suffix_prefix_mask(self, s: str) -> int:
        """Bit j (j >= 1) set iff the prefix of length j is a suffix of s."""
        if not s:
            return 0
        return self.border_mask[self._run(self.p, self.fail, s)]

    def completion_mask(self, s: str) -> int:
        """Bit l (l < m) set iff the suffix after prefix l is a prefix of s."""
        if not s:
            return 0
        m = self.m
        k = self._run(self.rp, self.rfail, s[:m][::-1])
        out = 0
        while k:
            out |= 1 << (m - k)
            k = self.rfail[k]
        return out

    def masks(self, s: str) -> tuple[int, int, int, bool]:
        """(occurrence, suffix-prefix, completion, contains-pattern) for s, memoized."""
        r = self._memo.get(s)
        if r is None:
            r = (self.occurrence_mask(s), self.suffix_prefix_mask(s),
                 self.completion_mask(s), self.p in s)
            self._memo[s] = r
        return r


def pattern_index(pattern) -> PatternIndex:
    return pattern if isinstance(pattern, PatternIndex) else PatternIndex(pattern)


class SegmentMasks:
    """Everything exact matching needs about one segment, computed once."""

    __slots__ = ("by_len", "has_empty", "start", "completion", "contains", "strings")

    def __init__(self, idx: PatternIndex, segment):
        strings = segment_strings(segment)
        by_len: dict[int, int] = {}
        start = comp = 0
        contains = False
        has_empty = False
        nonempty = []
        for s in strings:
            if not s:
                has_empty = True
                continue
            nonempty.append(s)
            if len(s) > idx.m:
                _, sp, cp, ct = idx.masks(s)
            else:
                occ, sp, cp, ct = idx.masks(s)
                if occ:
                    by_len[len(s)] = by_len.get(len(s), 0) | occ
            start |= sp
            comp |= cp
            contains = contains or ct
        if has_empty:
            by_len[0] = idx.full
        self.by_len = by_len
        self.has_empty = has_empty
        self.start = start
        self.completion = comp
        self.contains = contains
        self.strings = nonempty


def extend(u: int, sm: SegmentMasks, full: int) -> int:
    v = 0
    for length, occ in sm.by_len.items():
        w = u & occ
        if w:
            v |= w << length
    return v & full


def ape(pattern, u: int, segment, reference: bool = False) -> int:
    """Extend every prefix in ``u`` by any whole string of the segment that
    continues the pattern.
    """
    idx = pattern_index(pattern)
    if reference:
        p, m = idx.p, idx.m
        v = 0
        for s in segment_strings(segment):
            for i in bits(u):
                if i + len(s) <= m and p[i:i + len(s)] == s:
                    v |= 1 << (i + len(s))
        return v
    return extend(u, SegmentMasks(idx, segment), idx.full)


def start_new_prefixes(pattern, segment) -> int:
    idx = pattern_index(pattern)
    out = 0
    for s in segment_strings(segment):
        out |= idx.suffix_prefix_mask(s)
    return out


def exact_step(idx: PatternIndex, ap_prev: int, sm: SegmentMasks) -> tuple[int, bool]:
    m = idx.m
    ap = (extend(ap_prev, sm, idx.full) | sm.start) & ~1
    end = (sm.contains or bool(ap_prev & sm.completion)
           or (sm.has_empty and bool(ap_prev >> m & 1)))
    return ap, end


def propagate_exact(ap_prev: int, pattern, segment) -> tuple[int, bool]:
    """Active prefixes after the segment and whether an exact occurrence ends in it."""
    idx = pattern_index(pattern)
    return exact_step(idx, ap_prev, SegmentMasks(idx, segment))


def exact_ends(pattern, text) -> list[int]:
    idx = pattern_index(pattern)
    ap = 0
    out = []
    for i, seg in enumerate(text, start=1):
        ap, end = exact_step(idx, ap, SegmentMasks(idx, seg))
        if end:
            out.append(i)
    return out
