"""Brute-force reference for small instances.

Nothing here is shared with the matching code: distances come from the
textbook DP, occurrences from exhaustive enumeration of alignments, and the
per-segment prefix sets from a letter-by-letter simulation of all partial
alignments.

Conventions (the matcher follows the same ones):

* an occurrence inside one segment is any substring of one of its
  strings, the empty substring included;
* an occurrence spanning segments j < j' takes a suffix of a string of
  segment j, whole strings in between and a non-empty prefix of a string of
  segment j', unless that string is the empty string itself.
"""
from __future__ import annotations

from functools import lru_cache

from .eds import EDString, as_pattern, as_edstring

LIMITS = dict(n=8, strings=4, length=5, m=12)

BUDGET = {"exact": 0, "hamming1": 1, "edit1": 1}


def _mode(mode) -> str:
    mode = getattr(mode, "value", mode)
    if mode not in BUDGET:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


@lru_cache(maxsize=1 << 16)
def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance by the full quadratic DP."""
    prev = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        cur = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] != b[j - 1]))
        prev = cur
    return prev[-1]


def hamming_distance(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError("Hamming distance needs equal lengths")
    return sum(x != y for x, y in zip(a, b))


def _accepts(p: str, w: str, mode: str) -> bool:
    if mode == "exact":
        return w == p
    if mode == "hamming1":
        return len(w) == len(p) and hamming_distance(p, w) <= 1
    return abs(len(w) - len(p)) <= 1 and edit_distance(p, w) <= 1


def check_desk_scale(p: str, text: EDString, limits=None):
    lim = dict(LIMITS, **(limits or {}))
    if len(p) > lim["m"] or text.n > lim["n"]:
        raise ValueError("instance exceeds oracle limits")
    for seg in text.segments:
        if len(seg.strings) > lim["strings"] or max(len(s) for s in seg.strings) > lim["length"]:
            raise ValueError("instance exceeds oracle limits")


def enumerate_occurrences(pattern, text, mode, limits=None) -> set[tuple[int, int]]:
    """All (j, j') such that some alignment from segment j to j' is within budget."""
    p = as_pattern(pattern)
    text = as_edstring(text)
    mode = _mode(mode)
    check_desk_scale(p, text, limits)
    m = len(p)
    segs = [seg.strings for seg in text.segments]
    n = len(segs)
    found: set[tuple[int, int]] = set()

    def grow(j: int, k: int, built: str):
        if len(built) > m + 1:
            return
        if k > n:
            return
        for s in segs[k - 1]:
            if s == "":
                if _accepts(p, built, mode):
                    found.add((j, k))
            else:
                for b in range(1, len(s) + 1):
                    if _accepts(p, built + s[:b], mode):
                        found.add((j, k))
            grow(j, k + 1, built + s)

    for j in range(1, n + 1):
        for s in segs[j - 1]:
            for a in range(len(s) + 1):
                for b in range(a, len(s) + 1):
                    if _accepts(p, s[a:b], mode):
                        found.add((j, j))
                grow(j, j + 1, s[a:])
    return found


def oracle_end_positions(pattern, text, mode, limits=None) -> set[int]:
    return {e for _, e in enumerate_occurrences(pattern, text, mode, limits)}


def oracle_ap_sets(pattern, text, mode, limits=None):
    """Per segment i (in order): (AP_i, one-error AP_i, occurrence ends at i).

    Simulates every partial alignment of a pattern prefix against a
    non-empty text suffix, one letter at a time. A state is
    (prefix length, errors, consumed at least one letter).
    """
    p = as_pattern(pattern)
    text = as_edstring(text)
    mode = _mode(mode)
    check_desk_scale(p, text, limits)
    m = len(p)
    budget = BUDGET[mode] if mode != "exact" else 0
    # the one-error sets use the mode's own error model (exact mode: edits)
    err_mode = "hamming1" if mode == "hamming1" else "edit1"
    out = []
    carried: set[tuple[int, int, int]] = set()

    def close(states):
        res = set(states)
        if err_mode == "edit1":
            for j, e, ne in states:
                if e == 0 and j < m:
                    res.add((j + 1, 1, ne))
        return res

    def step(states, c):
        res = set()
        for j, e, ne in states:
            if j < m:
                if p[j] == c:
                    res.add((j + 1, e, 1))
                elif e == 0:
                    res.add((j + 1, 1, 1))
            if err_mode == "edit1" and e == 0:
                res.add((j, 1, 1))
        return close(res)

    def hit(states):
        return any(j == m and e <= budget for j, e, _ in states)

    for seg in text.segments:
        after: set[tuple[int, int, int]] = set()
        end = mode == "edit1" and m == 1
        for s in seg.strings:
            states = close(carried | {(0, 0, 0)})
            if s == "":
                if hit(close(carried)):
                    end = True
            for c in s:
                states = step(states | close({(0, 0, 0)}), c)
                if hit(states):
                    end = True
            after |= {st for st in states if st[2]}
        carried = after
        ap = {j for j, e, _ in carried if e == 0 and j >= 1}
        ap1 = {j for j, e, _ in carried if e <= 1 and j >= 1}
        out.append((ap, ap1, end))
    return out
