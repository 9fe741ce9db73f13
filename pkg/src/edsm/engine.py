"""Segment-by-segment matching pipelines.

Reporting is on-line: segments are consumed in order and every occurrence
ending in segment i is reported before segment i+1 is read. Per segment the
pipeline keeps

* the exact active prefixes,
* the prefixes reachable with at most one error, as the union of the
  exact ones, those whose error sits at the start (suffix case), those
  extended without error from the previous segment, and those whose error
  sits inside this segment (anchor case),

and reports an end when the pattern fits inside one string (easy case), a
one-error prefix is completed exactly, an exact prefix is completed with
one error (prefix case), or the whole pattern becomes reachable.

The decision pipeline is off-line: it also sweeps the reversed text to
know which pattern suffixes can follow each segment, and then asks each
case for a yes/no answer.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .affix import build_prefix_groups, prefix_case_report, suffix_case_contribution
from .anchor import EDIT_SUBCASES, HAMMING_SUBCASES, anchor_decision, anchor_reporting, build_mu_groups, full_groups
from .eds import EDString, MatchKind, OccurrenceReport, Pattern, as_edstring, remap_alphabet, reverse
from .errata import errata_anchor
from .exact import PatternIndex, SegmentMasks, exact_step, extend, pattern_index
from .strings import one_sm


class Task(str, enum.Enum):
    REPORT = "report"
    DECIDE = "decide"


class AnchorAlgo(str, enum.Enum):
    AUTO = "auto"
    GEOM = "geom"
    GRID = "grid"
    ERRATA = "errata"


@dataclass(frozen=True)
class EngineConfig:
    mode: MatchKind = MatchKind.EDIT1
    task: Task = Task.REPORT
    anchor_algo: AnchorAlgo = AnchorAlgo.AUTO

    def __post_init__(self):
        object.__setattr__(self, "mode", MatchKind(self.mode))
        object.__setattr__(self, "task", Task(self.task))
        object.__setattr__(self, "anchor_algo", AnchorAlgo(self.anchor_algo))
        if self.anchor_algo is AnchorAlgo.ERRATA and self.mode is not MatchKind.HAMMING1:
            raise ValueError("the errata tree handles the hamming1 mode only")

    def pick(self, m: int, n_i: int, hamming: bool) -> AnchorAlgo:
        if self.anchor_algo is not AnchorAlgo.AUTO:
            return self.anchor_algo
        if n_i >= m ** 3:
            return AnchorAlgo.GRID
        return AnchorAlgo.ERRATA if hamming else AnchorAlgo.GEOM


class _Segment:
    """Per-segment data shared by the exact and one-error trackers."""

    __slots__ = ("idx", "seg", "masks", "strings", "size", "_fwd", "_rev", "_easy")

    def __init__(self, idx: PatternIndex, seg):
        self.idx = idx
        self.seg = seg
        self.masks = SegmentMasks(idx, seg)
        self.strings = self.masks.strings
        self.size = sum(len(s) or 1 for s in seg)
        self._fwd = None
        self._rev = None
        self._easy = {}

    def forward_groups(self):
        if self._fwd is None:
            self._fwd = build_prefix_groups(self.strings, self.idx.m + 1)
        return self._fwd

    def reversed_groups(self):
        if self._rev is None:
            self._rev = build_prefix_groups([s[::-1] for s in self.strings], self.idx.m + 1)
        return self._rev

    def easy(self, hamming: bool) -> bool:
        r = self._easy.get(hamming)
        if r is None:
            r = self._easy[hamming] = _easy_case(self.idx, self.strings, hamming)
        return r


def _easy_case(idx: PatternIndex, strings, hamming: bool) -> bool:
    m = idx.m
    if m == 1 and not hamming:
        return True
    need = m if hamming else m - 1
    memo = idx.cache.setdefault("easy", {})
    for s in strings:
        if len(s) < need:
            continue
        key = (s, hamming)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = bool(one_sm(idx.p, s, hamming))
        if hit:
            return True
    return False


class _OneErrorTracker:
    def __init__(self, idx: PatternIndex, config: EngineConfig, hamming: bool):
        self.idx = idx
        self.config = config
        self.hamming = hamming
        self.u = 0

    def step(self, ctx: _Segment, ap_prev: int, ap_next: int, exact_end: bool) -> bool:
        idx, m, ham = self.idx, self.idx.m, self.hamming
        sm = ctx.masks
        u_prev = self.u
        u = ap_next | extend(u_prev, sm, idx.full)
        if ctx.strings:
            u |= suffix_case_contribution(ctx.strings, idx.p, ham, ctx.reversed_groups())
            if ap_prev:
                algo = self.config.pick(m, ctx.size, ham)
                if algo is AnchorAlgo.ERRATA:
                    u |= errata_anchor(idx.p, ap_prev, ctx.strings)
                else:
                    u |= anchor_reporting(full_groups(idx), ctx.strings, ap_prev, ham,
                                          grid=algo is AnchorAlgo.GRID, m=m)
        u &= idx.full & ~1
        self.u = u
        if exact_end or (u >> m) & 1 or (u_prev & sm.completion):
            return True
        if ctx.easy(ham):
            return True
        if ap_prev and ctx.strings and prefix_case_report(ap_prev, ctx.forward_groups(), idx.p, ham):
            return True
        return False


def _prepare(pattern, text):
    if isinstance(pattern, PatternIndex):
        return pattern, text
    if not isinstance(pattern, Pattern):
        pattern = Pattern(pattern)
    return PatternIndex(pattern), text


def run_reporting(pattern, text: Iterable, config: EngineConfig | None = None) -> Iterator[OccurrenceReport]:
    """Yield one report per end segment, labelled with the tightest kind.

    ``text`` may be any iterable of segments; it is consumed lazily.
    """
    config = config or EngineConfig()
    idx, text = _prepare(pattern, text)
    if isinstance(text, (str, bytes)):
        text = as_edstring(text)
    mode = config.mode
    trackers = []
    if mode is not MatchKind.EXACT:
        trackers.append((MatchKind.HAMMING1, _OneErrorTracker(idx, config, True)))
    if mode is MatchKind.EDIT1:
        trackers.append((MatchKind.EDIT1, _OneErrorTracker(idx, config, False)))
    ap = 0
    for i, seg in enumerate(text, start=1):
        ctx = _Segment(idx, seg)
        ap_next, exact_end = exact_step(idx, ap, ctx.masks)
        kind = MatchKind.EXACT if exact_end else None
        for k, tr in trackers:
            if tr.step(ctx, ap, ap_next, exact_end) and kind is None:
                kind = k
        ap = ap_next
        if kind is not None:
            yield OccurrenceReport(i, kind)


def _ap_sweep(idx: PatternIndex, segments) -> list[int]:
    aps = [0]
    for seg in segments:
        ap, _ = exact_step(idx, aps[-1], SegmentMasks(idx, seg))
        aps.append(ap)
    return aps


def run_decision(pattern, text, config: EngineConfig | None = None) -> bool:
    """Is there any occurrence within the mode's budget?"""
    config = config or EngineConfig(task=Task.DECIDE)
    idx, text = _prepare(pattern, text)
    text = as_edstring(text)
    segs = list(text.segments)
    n, m, p = len(segs), idx.m, idx.p
    mode = config.mode
    if mode is MatchKind.EXACT:
        ap = 0
        for seg in segs:
            ap, end = exact_step(idx, ap, SegmentMasks(idx, seg))
            if end:
                return True
        return False
    hamming = mode is MatchKind.HAMMING1
    if m == 1 and not hamming:
        return True
    subcases = HAMMING_SUBCASES if hamming else EDIT_SUBCASES
    ridx = PatternIndex(idx.rp)
    ap = _ap_sweep(idx, segs)
    # rap[t] holds reversed-pattern prefixes after t reversed segments, i.e.
    # lengths of pattern suffixes that start within the last t segments
    rap = _ap_sweep(ridx, [reverse(s) for s in reversed(segs)])
    for i in range(1, n + 1):
        strings = [s for s in segs[i - 1] if s]
        if not strings:
            continue
        if _easy_case(idx, strings, hamming):
            return True
        lam = ap[i - 1]
        rho = rap[n - i]
        if lam and prefix_case_report(lam, build_prefix_groups(strings, m + 1), p, hamming):
            return True
        if rho and prefix_case_report(rho, build_prefix_groups([s[::-1] for s in strings], m + 1),
                                      idx.rp, hamming):
            return True
        if not (lam and rho):
            continue
        if not hamming and any(len(s) == 1 for s in strings):
            # a single inserted letter between the two exact parts
            for l in range(1, m):
                if lam >> l & 1 and rho >> (m - l) & 1:
                    return True
        by_len: dict[int, list[str]] = {}
        for s in strings:
            by_len.setdefault(len(s), []).append(s)
        for g in build_mu_groups(p, lam, rho):
            for sub in subcases:
                cand = by_len.get(sub.string_length(g.mu))
                if cand and anchor_decision(g, cand, sub):
                    return True
    return False


def find_occurrences(pattern, text, mode="edit1", algo="auto") -> list[OccurrenceReport]:
    """Remap the alphabet, then collect the full report stream."""
    p = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
    t = as_edstring(text)
    p, t = remap_alphabet(p, t)
    return list(run_reporting(p, t, EngineConfig(mode, Task.REPORT, algo)))


def decide(pattern, text, mode="edit1", algo="auto") -> bool:
    p = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
    t = as_edstring(text)
    p, t = remap_alphabet(p, t)
    return run_decision(p, t, EngineConfig(mode, Task.DECIDE, algo))
