"""Hamming anchor case through a one-mismatch errata tree.

The base tree holds the active pattern suffixes ``P[j:]`` (j an active
prefix length) and the segment strings, each labelled with its source and
the marker ``#`` (stored as ``pos=None``). The errata tree adds, for every
labelled node v hanging off a heavy path at node w, a copy of v's string
with the letter after w replaced by the heavy path's letter, labelled with
that 1-based position. Two strings are then within one mismatch (segment
string against a prefix of a pattern suffix) exactly when a pattern-suffix
label sits below a segment-string label with an equal position or with a
``#`` on either side.

:func:`search_t1` finds all such pairs in one depth-first traversal and
returns the reachable prefix lengths as a bit mask.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .eds import as_pattern, segment_strings
from .exact import bits
from .strings import CompactedTrie, HeavyLightDecomposition, heavy_light


class ErrataLabel(NamedTuple):
    kind: str             # "p" for a pattern suffix, "t" for a segment string
    ident: int            # 1-based start in the pattern, or index in the segment
    pos: Optional[int]    # mismatch position, None for the unmodified string


@dataclass
class ErrataTree:
    trie: CompactedTrie
    m: int
    sources: dict[tuple[str, int], str]
    hld: Optional[HeavyLightDecomposition] = None

    @property
    def label_count(self) -> int:
        return sum(len(x) for x in self.trie.payloads)

    def nodes_with(self, kind: str, ident: int) -> list[tuple[int, Optional[int]]]:
        out = []
        for v, labs in enumerate(self.trie.payloads):
            for lab in labs:
                if lab.kind == kind and lab.ident == ident:
                    out.append((v, lab.pos))
        return out


def build_t0(pattern, ap_prev: int, segment) -> ErrataTree:
    p = as_pattern(pattern)
    m = len(p)
    items = []
    sources = {}
    for j in bits(ap_prev):
        if 1 <= j < m:
            x = p[j:]
            items.append((x, ErrataLabel("p", j + 1, None)))
            sources[("p", j + 1)] = x
    for t, y in enumerate(segment_strings(segment), start=1):
        if 1 <= len(y) <= m:
            items.append((y, ErrataLabel("t", t, None)))
            sources[("t", t)] = y
    trie = CompactedTrie(items)
    return ErrataTree(trie, m, sources, heavy_light(trie))


def errata_items(t0: ErrataTree) -> list[tuple[str, ErrataLabel]]:
    """Labelled strings of the errata tree: the base ones plus one modified
    copy per (labelled node, light ancestor edge).
    """
    trie = t0.trie
    hld = t0.hld if t0.hld is not None else heavy_light(trie)
    depth, children, payloads = trie.depth, trie.children, trie.payloads
    tin, tout = trie.tin, trie.tout
    by_tin = [0] * len(depth)
    for v, t in enumerate(tin):
        by_tin[t] = v
    items = []
    for v, labs in enumerate(payloads):
        if labs:
            s = trie.node_string(v)
            items.extend((s, lab) for lab in labs)
    for u in range(len(depth)):
        if hld.head[u] != u:
            continue
        x = trie.node_string(hld.path_leaf[u])
        w = u
        while hld.heavy[w] >= 0:
            hv = hld.heavy[w]
            p = depth[w] + 1
            letter = x[p - 1]
            for c in children[w].values():
                if c == hv:
                    continue
                for t in range(tin[c], tout[c] + 1):
                    v = by_tin[t]
                    labs = payloads[v]
                    if not labs:
                        continue
                    y = trie.node_string(v)
                    y2 = y[:p - 1] + letter + y[p:]
                    for lab in labs:
                        items.append((y2, ErrataLabel(lab.kind, lab.ident, p)))
            w = hv
    return items


def build_t1(t0: ErrataTree) -> ErrataTree:
    trie = CompactedTrie(errata_items(t0))
    return ErrataTree(trie, t0.m, t0.sources, t0.hld)


def search_t1(t1: ErrataTree, pattern=None, segment=None, check_clean: bool = False) -> int:
    """Prefix lengths reached by a segment string within one mismatch of
    the text following an active prefix.

    Entering a node records its segment-string labels in per-position
    vectors (indexed by string length); a pattern-suffix label of length
    |X| then collects every recorded length shifted by m - |X|. Leaving a
    node erases what it recorded.
    """
    trie = t1.trie
    m = t1.m
    depth, payloads, tin, tout = trie.depth, trie.payloads, trie.tin, trie.tout
    order = sorted(range(len(depth)), key=tin.__getitem__)
    vp: dict[Optional[int], int] = {}
    vany = 0
    res = 0
    stack: list[int] = []

    def leave(v):
        nonlocal vany
        b = 1 << depth[v]
        for lab in payloads[v]:
            if lab.kind == "t":
                vp[lab.pos] &= ~b
                vany &= ~b

    for v in order:
        while stack and tout[stack[-1]] < tin[v]:
            leave(stack.pop())
        labs = payloads[v]
        if labs:
            d = depth[v]
            b = 1 << d
            for lab in labs:
                if lab.kind == "t":
                    vp[lab.pos] = vp.get(lab.pos, 0) | b
                    vany |= b
            for lab in labs:
                if lab.kind == "p":
                    if lab.pos is None:
                        res |= vany << (m - d)
                    else:
                        res |= (vp.get(lab.pos, 0) | vp.get(None, 0)) << (m - d)
        stack.append(v)
    while stack:
        leave(stack.pop())
    if check_clean and (vany or any(vp.values())):
        raise AssertionError("scratch vectors not cleared")
    return res & ((1 << (m + 1)) - 1)


def errata_anchor(pattern, ap_prev: int, segment) -> int:
    """Hamming anchor-case contribution of one segment via the errata tree."""
    return search_t1(build_t1(build_t0(pattern, ap_prev, segment)))


def node_pair_condition(t1: ErrataTree, x_ident: int, y_ident: int) -> bool:
    """Is some (pattern x, p) node below some (segment y, p') node with
    p = p' a position, or p or p' equal to '#'?
    """
    trie = t1.trie
    xs = t1.nodes_with("p", x_ident)
    ys = t1.nodes_with("t", y_ident)
    for u, p in xs:
        for v, q in ys:
            if trie.is_ancestor(v, u) and (p is None or q is None or p == q):
                return True
    return False


def label_bound(m: int, n_i: int) -> float:
    s = m + n_i
    return s * (math.log2(s) + 1)
