"""Seeded random ED texts, optionally with a planted pattern occurrence."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .eds import EDString, Segment


@dataclass(frozen=True)
class GenParams:
    n: int = 8
    max_alts: int = 3
    max_len: int = 4
    alphabet: str = "ACGT"
    eps_prob: float = 0.1

    def validate(self):
        if self.n < 1 or self.max_alts < 1 or self.max_len < 0:
            raise ValueError("n and max_alts must be positive, max_len non-negative")
        if not self.alphabet:
            raise ValueError("empty alphabet")
        if not 0.0 <= self.eps_prob <= 1.0:
            raise ValueError("eps_prob must lie in [0, 1]")


def random_string(rng: random.Random, alphabet: str, lo: int, hi: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def random_segments(rng: random.Random, prm: GenParams) -> list[list[str]]:
    segs = []
    for _ in range(prm.n):
        strings = []
        for _ in range(rng.randint(1, prm.max_alts)):
            if prm.max_len == 0 or rng.random() < prm.eps_prob:
                strings.append("")
            else:
                strings.append(random_string(rng, prm.alphabet, 1, prm.max_len))
        segs.append(strings)
    return segs


def inject_error(rng: random.Random, p: str, alphabet: str) -> str:
    """Apply one random substitution, insertion or deletion."""
    op = rng.choice(("sub", "ins", "del") if len(p) > 1 else ("sub", "ins"))
    q = rng.randrange(len(p) + (op == "ins"))
    if op == "sub":
        other = [c for c in alphabet if c != p[q]] or [p[q]]
        return p[:q] + rng.choice(other) + p[q + 1:]
    if op == "ins":
        return p[:q] + rng.choice(alphabet) + p[q:]
    return p[:q] + p[q + 1:]


def plant(rng: random.Random, segs: list[list[str]], word: str, prm: GenParams) -> bool:
    """Spread ``word`` over consecutive segments, respecting max_len and
    max_alts. Returns False when it cannot fit.
    """
    n, L = len(segs), prm.max_len
    if not word:
        return False
    min_pieces = -(-len(word) // L) if L else n + 1
    if min_pieces > n:
        return False
    k = rng.randint(min_pieces, min(n, len(word)))
    # cut into k non-empty pieces of length <= L
    while True:
        cuts = sorted(rng.sample(range(1, len(word)), k - 1)) if k > 1 else []
        bounds = [0] + cuts + [len(word)]
        pieces = [word[a:b] for a, b in zip(bounds, bounds[1:])]
        if all(len(x) <= L for x in pieces):
            break
    j = rng.randrange(n - k + 1)
    for t, piece in enumerate(pieces):
        room = L - len(piece)
        if k == 1:
            a = rng.randint(0, room)
            s = random_string(rng, prm.alphabet, a, a) + piece + random_string(rng, prm.alphabet, 0, room - a)
        elif t == 0:
            s = random_string(rng, prm.alphabet, 0, room) + piece
        elif t == k - 1:
            s = piece + random_string(rng, prm.alphabet, 0, room)
        else:
            s = piece
        seg = segs[j + t]
        if len(seg) >= prm.max_alts:
            seg[rng.randrange(len(seg))] = s
        else:
            seg.append(s)
    return True


def generate(prm: GenParams, seed: int, plant_pattern: str | None = None,
             with_error: bool = False) -> EDString:
    """Deterministic for a fixed seed."""
    prm.validate()
    rng = random.Random(seed)
    segs = random_segments(rng, prm)
    if plant_pattern:
        word = inject_error(rng, plant_pattern, prm.alphabet) if with_error else plant_pattern
        if not plant(rng, segs, word, prm):
            raise ValueError("pattern too long to plant with these parameters")
    return EDString(tuple(Segment(tuple(s)) for s in segs))


def random_instance(rng: random.Random, n_max=6, alts_max=3, len_max=4, m_max=10,
                    sigma_max=4, eps_prob=0.15, plant_prob=0.5) -> tuple[str, EDString]:
    """A random (pattern, text) pair; about half carry a planted near-occurrence."""
    alphabet = "abcd"[:rng.randint(2, sigma_max)]
    prm = GenParams(rng.randint(1, n_max), alts_max, len_max, alphabet, eps_prob)
    m = rng.randint(1, m_max)
    p = random_string(rng, alphabet, m, m)
    segs = random_segments(rng, prm)
    if rng.random() < plant_prob:
        word = inject_error(rng, p, alphabet) if rng.random() < 0.6 else p
        plant(rng, segs, word, prm)
    return p, EDString(tuple(Segment(tuple(s)) for s in segs))


def scaling_text(N: int, pattern: str, seed: int, seg_size: int = 64,
                 alphabet: str = "ACGT", borrow_prob: float = 0.2) -> EDString:
    """Text of size exactly N (a multiple of ``seg_size``) in N / seg_size segments.

    Each segment splits ``seg_size`` letters evenly over 1, 2 or 4 strings.
    With probability ``borrow_prob`` a string copies a window of the pattern
    (possibly with one error), so partial matches keep flowing.
    """
    if N % seg_size:
        raise ValueError("N must be a multiple of seg_size")
    rng = random.Random(seed)
    segs = []
    for _ in range(N // seg_size):
        k = rng.choice((1, 2, 4))
        ln = seg_size // k
        strings = set()
        while len(strings) < k:
            if rng.random() < borrow_prob and ln <= len(pattern):
                a = rng.randrange(len(pattern) - ln + 1)
                s = pattern[a:a + ln]
                if rng.random() < 0.5:
                    q = rng.randrange(ln)
                    s = s[:q] + rng.choice(alphabet) + s[q + 1:]
            else:
                s = random_string(rng, alphabet, ln, ln)
            strings.add(s)
        segs.append(Segment(tuple(strings)))
    return EDString(tuple(segs))
