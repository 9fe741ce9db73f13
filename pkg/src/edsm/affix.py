"""Error in the last segment of an occurrence, and its mirror image.

Prefix case: an active prefix of length l is followed by a prefix X of a
segment string with ``d(P[l:], X) <= 1``; the occurrence ends here.
Segment-string prefixes of one length form a group with a trie and a
reversed trie. For each l the pattern side spells ``P[l:l+h]`` forward
and the last k pattern letters backward; with h growing the forward
intervals shrink and the backward ones grow, so the rectangles are nested
and one linear sweep (:func:`nested_stab_offline`) settles the batch.

Suffix case: the same computation on the reversed pattern and reversed
strings yields pattern prefixes that end, with one error, at the end of a
segment string.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .eds import as_pattern, segment_strings
from .exact import bits
from .geometry import nested_stab_offline
from .strings import CompactedTrie


@dataclass
class PrefixGroup:
    mu: int
    members: list[str]
    trie: CompactedTrie
    rtrie: CompactedTrie
    points: list[tuple[int, int]]
    _tails: dict = field(default_factory=dict, repr=False)

    def tail_intervals(self, rp: str) -> list[tuple[int, int]]:
        """Reversed-trie intervals for the reversed pattern's first k letters."""
        r = self._tails.get(rp)
        if r is None:
            r = self._tails[rp] = self.rtrie.spell(rp[:self.mu])
        return r


def build_prefix_groups(segment, max_len: int) -> dict[int, PrefixGroup]:
    """Distinct length-mu prefixes of the segment strings, mu in [1, max_len]."""
    strings = [s for s in segment_strings(segment) if s]
    groups = {}
    top = min(max_len, max((len(s) for s in strings), default=0))
    for mu in range(1, top + 1):
        members = sorted({s[:mu] for s in strings if len(s) >= mu})
        trie = CompactedTrie(members)
        rtrie = CompactedTrie(x[::-1] for x in members)
        pts = [(trie.leaf_rank(x), rtrie.leaf_rank(x[::-1])) for x in members]
        groups[mu] = PrefixGroup(mu, members, trie, rtrie, pts)
    return groups


# (group-size offset from the remaining pattern length, split-sum offset from the group size)
_MISMATCH = (0, -1)
_DELETION = (-1, 0)
_INSERTION = (1, -1)


def prefix_case_hits(starts, groups: dict[int, PrefixGroup], pattern, hamming: bool = False) -> int:
    """Bit mask of the starts l for which ``P[l:]`` is within one error of
    some non-empty prefix of a segment string.
    """
    p = as_pattern(pattern)
    m = len(p)
    rp = p[::-1]
    kinds = (_MISMATCH,) if hamming else (_MISMATCH, _DELETION, _INSERTION)
    hits = 0
    for lam in (bits(starts) if isinstance(starts, int) else starts):
        for dg, ds in kinds:
            mu = m - lam + dg
            g = groups.get(mu)
            if g is None:
                continue
            total = mu + ds
            fw = g.trie.spell(p[lam:lam + min(mu, total)])
            bw = g.tail_intervals(rp)
            rects = []
            for h in range(min(len(fw) - 1, total) + 1):
                k = total - h
                if k < len(bw):
                    rects.append((fw[h], bw[k]))
            if rects and any(nested_stab_offline(g.points, rects, len(g.members))):
                hits |= 1 << lam
                break
    return hits


def prefix_case_report(ap_prev: int, groups: dict[int, PrefixGroup], pattern,
                       hamming: bool = False) -> bool:
    """Does an occurrence with its error in this (final) segment end here?"""
    return bool(prefix_case_hits(ap_prev, groups, pattern, hamming))


def suffix_case_contribution(segment, pattern, hamming: bool = False,
                             groups: dict[int, PrefixGroup] | None = None) -> int:
    """Pattern prefixes within one error of a non-empty suffix of a segment string.

    ``groups`` may carry prebuilt groups of the reversed strings.
    """
    p = as_pattern(pattern)
    m = len(p)
    if groups is None:
        groups = build_prefix_groups([s[::-1] for s in segment_strings(segment)], m + 1)
    hits = prefix_case_hits(range(m), groups, p[::-1], hamming)
    out = 0
    for lam in bits(hits):
        out |= 1 << (m - lam)
    return out
