"""Error strictly inside one segment, with exact pattern parts on both sides.

A segment string S sits between an active prefix of length l (matched
before the segment) and a pattern part matched after it. The pattern
fragment facing S is ``P[l : l + mu]``. Fragments of one length ``mu`` are
stored in a trie and in a trie of their reversals; a fragment becomes the
point (rank in the trie, rank in the reversed trie).

For a string S and a split (h, k), spelling ``S[:h]`` in the trie and the
reversed last k letters of S in the reversed trie gives two leaf
intervals, i.e. a rectangle. A fragment point inside the rectangle agrees
with S outside one position, which is exactly one error:

==========  =========  ==========  =================================
subcase     len(S)     h + k       skipped
==========  =========  ==========  =================================
mismatch    mu         mu - 1      S[h] against fragment[h]
deletion    mu - 1     len(S)      fragment[h] (a pattern letter)
insertion   mu + 1     mu          S[h] (a text letter)
==========  =========  ==========  =================================

The decision variant asks whether any rectangle holds a point; the
reporting variant asks which points are stabbed and turns each into the
prefix length ``l + mu``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .eds import as_pattern, segment_strings
from .exact import bits, pattern_index
from .geometry import GridStabber, RangeEmptiness, RectStabbing
from .strings import CompactedTrie


class Subcase(enum.Enum):
    MISMATCH = "mismatch"
    DELETION = "deletion"      # a pattern letter has no counterpart in S
    INSERTION = "insertion"    # S carries one extra letter

    def string_length(self, mu: int) -> int:
        return mu + {"mismatch": 0, "deletion": -1, "insertion": 1}[self.value]

    def group_for(self, length: int) -> int:
        return length - {"mismatch": 0, "deletion": -1, "insertion": 1}[self.value]

    def split_sum(self, mu: int) -> int:
        return {"mismatch": mu - 1, "deletion": mu - 1, "insertion": mu}[self.value]


HAMMING_SUBCASES = (Subcase.MISMATCH,)
EDIT_SUBCASES = (Subcase.MISMATCH, Subcase.DELETION, Subcase.INSERTION)


@dataclass
class MuGroup:
    mu: int
    pairs: list[tuple[int, int]]
    fragments: dict[str, list[int]]          # fragment -> starting prefix lengths
    trie: CompactedTrie
    rtrie: CompactedTrie
    points: dict[str, tuple[int, int]]
    starts: dict[str, int] = field(default_factory=dict)   # fragment -> bitmask of l

    @property
    def size(self) -> int:
        return len(self.fragments)


@dataclass(frozen=True)
class Rectangle:
    subcase: Subcase
    string: str
    head: str        # S[:h]
    tail: str        # reversed last k letters of S
    rect: tuple[tuple[int, int], tuple[int, int]]


def build_mu_groups(pattern, lambda_set, rho_set) -> list[MuGroup]:
    """Group the pairs (l, r) with l + r < m by mu = m - l - r.

    ``lambda_set`` and ``rho_set`` are bit masks or iterables of lengths:
    l counts matched prefix letters, r matched suffix letters.
    """
    p = as_pattern(pattern)
    m = len(p)
    lams = bits(lambda_set) if isinstance(lambda_set, int) else sorted(set(lambda_set))
    rhos = bits(rho_set) if isinstance(rho_set, int) else sorted(set(rho_set))
    by_mu: dict[int, list[tuple[int, int]]] = {}
    for lam in lams:
        for rho in rhos:
            if 0 <= lam and 0 <= rho and lam + rho < m:
                by_mu.setdefault(m - lam - rho, []).append((lam, rho))
    return [_make_group(p, mu, pairs) for mu, pairs in sorted(by_mu.items())]


def _make_group(p: str, mu: int, pairs) -> MuGroup:
    frags: dict[str, list[int]] = {}
    for lam, _ in pairs:
        frags.setdefault(p[lam:lam + mu], []).append(lam)
    for lst in frags.values():
        lst.sort()
    trie = CompactedTrie(frags)
    rtrie = CompactedTrie(f[::-1] for f in frags)
    points = {f: (trie.leaf_rank(f), rtrie.leaf_rank(f[::-1])) for f in frags}
    starts = {}
    for f, lst in frags.items():
        v = 0
        for lam in lst:
            v |= 1 << lam
        starts[f] = v
    return MuGroup(mu, sorted(pairs), frags, trie, rtrie, points, starts)


def full_groups(pattern) -> dict[int, MuGroup]:
    """Every fragment of every length, built once per pattern."""
    idx = pattern_index(pattern)
    g = idx.cache.get("mu_groups")
    if g is None:
        g = {grp.mu: grp for grp in build_mu_groups(idx.p, range(idx.m + 1), range(idx.m + 1))}
        idx.cache["mu_groups"] = g
    return g


def collect_rectangles(group: MuGroup, s: str, subcase: Subcase) -> list[Rectangle]:
    """All rectangles of one string for one subcase, from two incremental spells."""
    mu = group.mu
    if len(s) != subcase.string_length(mu) or not s:
        return []
    total = subcase.split_sum(mu)
    fw = group.trie.spell(s[:mu])
    rs = s[::-1]
    bw = group.rtrie.spell(rs[:mu])
    out = []
    for h in range(min(len(fw) - 1, total) + 1):
        k = total - h
        if k < len(bw):
            out.append(Rectangle(subcase, s, s[:h], rs[:k], (fw[h], bw[k])))
    return out


def _rects(group: MuGroup, strings, subcases):
    rects = []
    for sub in subcases:
        want = sub.string_length(group.mu)
        for s in strings:
            if len(s) == want:
                for r in collect_rectangles(group, s, sub):
                    rects.append(r.rect)
    return rects


def _by_length(strings) -> dict[int, list[str]]:
    d: dict[int, list[str]] = {}
    for s in strings:
        if s:
            d.setdefault(len(s), []).append(s)
    return d


def anchor_decision(group: MuGroup, strings, subcase: Subcase) -> bool:
    """Does some string of the subcase's length match some fragment of the group?"""
    rects = _rects(group, segment_strings(strings), (subcase,))
    if not rects:
        return False
    em = RangeEmptiness(list(group.points.values()))
    return any(not em.is_empty(r) for r in rects)


def anchor_reporting(groups, segment, ap_prev: int | None = None, hamming: bool = False,
                     grid: bool = False, m: int | None = None) -> int:
    """Prefix lengths reachable with one error located inside this segment.

    ``groups`` maps mu to groups holding fragments for every start of
    interest (see :func:`full_groups`); only starts in ``ap_prev`` are
    queried. With ``grid`` the stabbing structure is the prefix-sum grid.
    """
    if isinstance(groups, dict):
        groups = groups.values()
    groups = list(groups)
    strings = [s for s in segment_strings(segment) if s]
    if not strings or not groups:
        return 0
    if ap_prev is None:
        ap_prev = 0
        for g in groups:
            for v in g.starts.values():
                ap_prev |= v
    if m is None:
        m = max(g.size for g in groups)
    subcases = HAMMING_SUBCASES if hamming else EDIT_SUBCASES
    lengths = _by_length(strings)
    out = 0
    if not hamming and 1 in lengths:
        # an inserted single letter between the active prefix and the rest
        out |= ap_prev
    for g in groups:
        live = [(f, v & ap_prev) for f, v in g.starts.items() if v & ap_prev]
        if not live:
            continue
        cand = []
        for sub in subcases:
            cand.extend(lengths.get(sub.string_length(g.mu), ()))
        if not cand:
            continue
        rects = _rects(g, cand, subcases)
        if not rects:
            continue
        st = GridStabber(rects, m) if grid else RectStabbing(rects)
        for f, v in live:
            if st.stabs(*g.points[f]):
                out |= v << g.mu
    return out


def anchor_reporting_grid(groups, segment, ap_prev: int | None = None, hamming: bool = False,
                          m: int | None = None) -> int:
    return anchor_reporting(groups, segment, ap_prev, hamming, grid=True, m=m)
