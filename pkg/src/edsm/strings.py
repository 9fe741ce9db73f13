"""String machinery shared by the matching cases.

* :class:`LceIndex` answers longest-common-extension queries between two
  strings with a suffix array, an LCP array and a sparse table.
* :func:`one_sm` finds every end position of a substring within one
  substitution/insertion/deletion of the pattern, combining forward and
  backward extensions computed with the Z-algorithm.
* :class:`CompactedTrie` is built by sorting the keys and walking the
  adjacent-LCP stack. Leaves are ranked left to right so every node owns a
  closed leaf interval; :meth:`CompactedTrie.spell` reports the interval
  after each consumed letter.
* :func:`heavy_light` decomposes a trie into heavy paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


def lcp_len(a: str, b: str, i: int = 0, j: int = 0) -> int:
    n = min(len(a) - i, len(b) - j)
    k = 0
    while k < n and a[i + k] == b[j + k]:
        k += 1
    return k


# ------------------------------------------------------------------ LCE

def suffix_array(s: Sequence[int]) -> list[int]:
    """Prefix doubling, O(n log^2 n)."""
    n = len(s)
    if n == 0:
        return []
    rank = list(s)
    sa = list(range(n))
    k = 1
    while True:
        key = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new = [0] * n
        for t in range(1, n):
            new[sa[t]] = new[sa[t - 1]] + (key[sa[t]] != key[sa[t - 1]])
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        k <<= 1


def lcp_array(s: Sequence[int], sa: list[int]) -> list[int]:
    """Kasai et al.; lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0."""
    n = len(s)
    rank = [0] * n
    for r, p in enumerate(sa):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


class LceIndex:
    """LCE queries between positions of ``a`` and ``b`` (1-based).

    ``lcp(i, j)`` compares ``a[i..]`` with ``b[j..]``; ``lcp_aa`` and
    ``lcp_bb`` compare two suffixes of the same string.
    """

    def __init__(self, a: str, b: str):
        self.a, self.b = a, b
        # letters shifted by 2 so that 1 is the separator and no suffix
        # comparison runs across it
        codes = [ord(c) + 2 for c in a] + [1] + [ord(c) + 2 for c in b]
        self._off = len(a) + 1
        sa = suffix_array(codes)
        lcp = lcp_array(codes, sa)
        n = len(codes)
        self._rank = [0] * n
        for r, p in enumerate(sa):
            self._rank[p] = r
        self._n = n
        table = [lcp]
        k = 1
        while 2 * k <= n:
            prev = table[-1]
            table.append([min(prev[i], prev[i + k]) for i in range(n - 2 * k + 1)])
            k *= 2
        self._table = table

    def _raw(self, p: int, q: int) -> int:
        if p == q:
            return self._n - p
        r1, r2 = self._rank[p], self._rank[q]
        if r1 > r2:
            r1, r2 = r2, r1
        lo, hi = r1 + 1, r2
        k = (hi - lo + 1).bit_length() - 1
        row = self._table[k]
        return min(row[lo], row[hi - (1 << k) + 1])

    def _clip(self, p: int, q: int) -> int:
        return min(self._raw(p, q), self._remain(p), self._remain(q))

    def _remain(self, p: int) -> int:
        return len(self.a) - p if p < self._off else self._n - p

    def lcp(self, i: int, j: int) -> int:
        self._check(i, self.a)
        self._check(j, self.b)
        if i > len(self.a) or j > len(self.b):
            return 0
        return self._clip(i - 1, self._off + j - 1)

    def lcp_aa(self, i: int, j: int) -> int:
        self._check(i, self.a)
        self._check(j, self.a)
        if i > len(self.a) or j > len(self.a):
            return 0
        return self._clip(i - 1, j - 1)

    def lcp_bb(self, i: int, j: int) -> int:
        self._check(i, self.b)
        self._check(j, self.b)
        if i > len(self.b) or j > len(self.b):
            return 0
        return self._clip(self._off + i - 1, self._off + j - 1)

    @staticmethod
    def _check(i: int, s: str):
        if not 1 <= i <= len(s) + 1:
            raise IndexError(f"position {i} outside [1, {len(s) + 1}]")


def build_lce(a: str, b: str) -> LceIndex:
    return LceIndex(a, b)


# --------------------------------------------------------------- 1-SM

def z_array(s: str) -> list[int]:
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    l = r = 0
    for i in range(1, n):
        if i < r:
            k = z[i - l]
            if k < r - i:
                z[i] = k
                continue
            k = r - i
        else:
            k = 0
        while i + k < n and s[k] == s[i + k]:
            k += 1
        z[i] = k
        if i + k > r:
            l, r = i, i + k
    return z


def _forward_ext(p: str, t: str) -> list[int]:
    """f[s] = lcp(p, t[s:]) for s in [0, len(t)]."""
    sep = "\uffff" if "\uffff" not in p and "\uffff" not in t else None
    if sep is None:
        return [lcp_len(p, t, 0, s) for s in range(len(t) + 1)]
    z = z_array(p + sep + t)
    m = len(p)
    return z[m + 1:] + [0]


def one_sm(pattern, text: str, hamming: bool = False, prefilter: bool = True) -> set[int]:
    """End positions (1-based) of substrings of ``text`` within distance 1 of the pattern.

    Edit distance by default, Hamming distance when ``hamming`` is set.
    Exact occurrences are included. An empty substring at position s is
    reported as ending at s, which only matters when m = 1.
    """
    p = getattr(pattern, "letters", pattern)
    m, L = len(p), len(text)
    if L < m - (0 if hamming else 1):
        return set()
    if prefilter and m >= 2:
        h = m // 2
        if text.find(p[:h]) < 0 and text.find(p[h:]) < 0:
            return set()
    fwd = _forward_ext(p, text)
    bwd_r = _forward_ext(p[::-1], text[::-1])
    # bwd[e] = longest common suffix of p and text[:e]
    bwd = bwd_r[::-1]
    ends = set()
    for s in range(L + 1):
        f = fwd[s]
        e = s + m
        if e <= L and f + bwd[e] >= m - 1:
            ends.add(e)
        if hamming:
            continue
        e = s + m - 1
        if 1 <= e <= L and min(f, m - 1) + min(bwd[e], m - 1) >= m - 1:
            ends.add(e)
        e = s + m + 1
        if e <= L and f + bwd[e] >= m:
            ends.add(e)
    return ends


# ------------------------------------------------------ sorting substrings

def sorted_substrings(x: str, intervals: Sequence[tuple[int, int]]) -> list[int]:
    """Dense lexicographic ranks (1-based, ties share a rank) of ``x[i..j]``.

    Intervals are 1-based and closed; ``(i, i-1)`` denotes the empty
    substring at i.
    """
    subs = []
    for i, j in intervals:
        if not (1 <= i <= j + 1 and j <= len(x)):
            raise ValueError(f"interval ({i}, {j}) outside string of length {len(x)}")
        subs.append(x[i - 1:j])
    order = sorted(set(subs))
    rank = {s: r for r, s in enumerate(order, start=1)}
    return [rank[s] for s in subs]


# -------------------------------------------------------- compacted trie

class CompactedTrie:
    """Compacted trie over a set of keys, each carrying a list of payloads.

    Nodes are integers; node 0 is the root. A node's string is
    ``keys[rep[v]][:depth[v]]``. ``lo[v]..hi[v]`` is the closed range of
    leaf ranks (1-based, left to right) below ``v``.
    """

    __slots__ = ("keys", "depth", "parent", "rep", "children", "payloads",
                 "lo", "hi", "node_of", "tin", "tout", "leaf_count")

    def __init__(self, items: Iterable = ()):
        bag: dict[str, list] = {}
        for it in items:
            if isinstance(it, str):
                bag.setdefault(it, [])
            else:
                key, payload = it
                bag.setdefault(key, []).append(payload)
        keys = sorted(bag)
        self.keys = keys
        depth, parent, rep, children = [0], [-1], [0], [{}]
        self.node_of: dict[str, int] = {}
        payloads: list[list] = [[]]
        stack = [0]
        prev = None
        for idx, s in enumerate(keys):
            l = 0 if prev is None else lcp_len(prev, s)
            last = -1
            while depth[stack[-1]] > l:
                last = stack.pop()
            top = stack[-1]
            if depth[top] < l:
                mid = len(depth)
                depth.append(l)
                parent.append(top)
                rep.append(idx)
                children.append({})
                payloads.append([])
                letter = s[depth[top]]
                children[top][letter] = mid
                children[mid][keys[rep[last]][l]] = last
                parent[last] = mid
                stack.append(mid)
                top = mid
            if len(s) == depth[top]:
                v = top
            else:
                v = len(depth)
                depth.append(len(s))
                parent.append(top)
                rep.append(idx)
                children.append({})
                payloads.append([])
                children[top][s[depth[top]]] = v
                stack.append(v)
            payloads[v].extend(bag[s])
            self.node_of[s] = v
            prev = s
        self.depth, self.parent, self.rep = depth, parent, rep
        self.children, self.payloads = children, payloads
        self._number()

    def _number(self):
        n = len(self.depth)
        lo, hi = [0] * n, [0] * n
        tin, tout = [0] * n, [0] * n
        leaf_count = [0] * n
        rank = 0
        clock = 0
        stack = [(0, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock - 1
                hi[v] = rank
                kids = self.children[v]
                leaf_count[v] = sum(leaf_count[c] for c in kids.values()) if kids else 1
                continue
            tin[v] = clock
            clock += 1
            kids = self.children[v]
            if not kids:
                rank += 1
                lo[v] = rank
            else:
                lo[v] = rank + 1
            stack.append((v, True))
            for c in reversed(list(kids.values())):
                stack.append((c, False))
        self.lo, self.hi, self.tin, self.tout = lo, hi, tin, tout
        self.leaf_count = leaf_count

    def __len__(self):
        return len(self.depth)

    @property
    def num_leaves(self) -> int:
        return self.hi[0]

    def node_string(self, v: int) -> str:
        return self.keys[self.rep[v]][:self.depth[v]] if v else ""

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when u is v or an ancestor of v."""
        return self.tin[u] <= self.tin[v] <= self.tout[u]

    def locate(self, s: str) -> Optional[int]:
        return self.node_of.get(s)

    def leaf_rank(self, s: str) -> int:
        v = self.node_of[s]
        if self.children[v]:
            raise ValueError(f"{s!r} is not a leaf")
        return self.lo[v]

    def spell(self, s: str) -> list[tuple[int, int]]:
        """Leaf intervals after consuming 0, 1, 2, ... letters of ``s``.

        The list stops at the first letter that falls off the trie, so its
        length minus one is the longest spelled prefix.
        """
        out = [(self.lo[0], self.hi[0])]
        children, depth, keys, rep = self.children, self.depth, self.keys, self.rep
        lo, hi = self.lo, self.hi
        v = 0
        pos = 0
        n = len(s)
        while pos < n:
            c = children[v].get(s[pos])
            if c is None:
                break
            key = keys[rep[c]]
            end = depth[c]
            iv = (lo[c], hi[c])
            out.append(iv)
            pos += 1
            while pos < end and pos < n:
                if key[pos] != s[pos]:
                    return out
                out.append(iv)
                pos += 1
            v = c
            if pos < end:
                break
        return out

    def dfs_order(self) -> list[int]:
        order = sorted(range(len(self.depth)), key=self.tin.__getitem__)
        return order


def build_trie(items: Iterable) -> CompactedTrie:
    return CompactedTrie(items)


def spell(trie: CompactedTrie, s: str) -> list[tuple[int, int]]:
    return trie.spell(s)


# ------------------------------------------------------- heavy-light

@dataclass
class HeavyLightDecomposition:
    heavy: list[int]       # heavy child or -1
    head: list[int]        # first node of the heavy path containing v
    path_leaf: list[int]   # leaf reached from v by following heavy children

    def is_light(self, v: int) -> bool:
        return self.head[v] == v

    def light_depth(self, trie: CompactedTrie, v: int) -> int:
        """Number of light edges on the root-to-v path."""
        k = 0
        while v > 0:
            if self.head[v] == v:
                k += 1
            v = trie.parent[v]
        return k


def heavy_light(trie: CompactedTrie) -> HeavyLightDecomposition:
    """Heavy child = most leaves below it; ties go to the smallest edge letter."""
    n = len(trie.depth)
    heavy = [-1] * n
    for v in range(n):
        best = -1
        for c in trie.children[v].values():  # sorted by letter
            if best < 0 or trie.leaf_count[c] > trie.leaf_count[best]:
                best = c
        heavy[v] = best
    head = [0] * n
    path_leaf = [0] * n
    for v in trie.dfs_order():
        p = trie.parent[v]
        head[v] = head[p] if p >= 0 and heavy[p] == v else v
    for v in reversed(trie.dfs_order()):
        path_leaf[v] = v if heavy[v] < 0 else path_leaf[heavy[v]]
    return HeavyLightDecomposition(heavy, head, path_leaf)
