"""Elastic-degenerate strings: data model, `.eds` text format and helpers.

An ED string is a sequence of segments. Each segment is a non-empty set of
alternative strings, one of which may be the empty string. The size of a
segment counts every letter, plus one for the empty string if present.

Strings are plain Python ``str`` objects. Input bytes are decoded as
latin-1 so every byte is one symbol. After :func:`remap_alphabet` each
symbol is ``chr(rank)`` with rank in ``[1, m+1]``; :meth:`Pattern.codes`
and :meth:`Segment.codes` expose the integer view.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union


class EDSSyntaxError(ValueError):
    """Malformed `.eds` input. ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class MatchKind(str, enum.Enum):
    EXACT = "exact"
    HAMMING1 = "hamming1"
    EDIT1 = "edit1"


@dataclass(frozen=True)
class Pattern:
    letters: str

    def __post_init__(self):
        if not isinstance(self.letters, str):
            object.__setattr__(self, "letters", _as_text(self.letters))
        if len(self.letters) < 1:
            raise ValueError("pattern must be non-empty")

    @property
    def m(self) -> int:
        return len(self.letters)

    def codes(self) -> list[int]:
        return [ord(c) for c in self.letters]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters


@dataclass(frozen=True)
class Segment:
    """One set of alternative strings, stored sorted and deduplicated."""

    strings: tuple[str, ...]

    def __post_init__(self):
        uniq = tuple(sorted(set(_as_text(s) for s in self.strings)))
        if not uniq:
            raise ValueError("segment must contain at least one string")
        object.__setattr__(self, "strings", uniq)

    @property
    def has_empty(self) -> bool:
        return self.strings[0] == ""

    @property
    def size(self) -> int:
        return sum(len(s) or 1 for s in self.strings)

    def codes(self) -> list[list[int]]:
        return [[ord(c) for c in s] for s in self.strings]

    def __iter__(self) -> Iterator[str]:
        return iter(self.strings)

    def __len__(self):
        return len(self.strings)


@dataclass(frozen=True)
class EDString:
    segments: tuple[Segment, ...]
    N: int = field(init=False)

    def __post_init__(self):
        segs = tuple(s if isinstance(s, Segment) else Segment(tuple(s)) for s in self.segments)
        if not segs:
            raise ValueError("ED string must have at least one segment")
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "N", sum(s.size for s in segs))

    @classmethod
    def of(cls, *segments: Iterable[str]) -> "EDString":
        return cls(tuple(Segment(tuple(s)) for s in segments))

    @property
    def n(self) -> int:
        return len(self.segments)

    def __len__(self):
        return len(self.segments)

    def __getitem__(self, i):
        return self.segments[i]

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __str__(self):
        return serialize_eds(self)


@dataclass(frozen=True)
class OccurrenceReport:
    end_segment: int
    kind: MatchKind


def _as_text(s) -> str:
    if isinstance(s, str):
        return s
    if isinstance(s, (bytes, bytearray)):
        return bytes(s).decode("latin-1")
    return "".join(chr(c) for c in s)


# ---------------------------------------------------------------- parsing

_SPECIAL = "{},"
_WS = " \t\r\n\v\f"


def parse_eds(data: Union[bytes, str]) -> EDString:
    """Parse `.eds` text: ``{alt,alt,...}`` groups and bare letter runs.

    An empty alternative is the empty string. ASCII whitespace is skipped
    everywhere, so letters cannot be whitespace.
    """
    text = data.decode("latin-1") if isinstance(data, (bytes, bytearray)) else data
    segments: list[Segment] = []
    i, n = 0, len(text)
    run: list[str] = []

    def flush():
        if run:
            segments.append(Segment(("".join(run),)))
            run.clear()

    while i < n:
        c = text[i]
        if c in _WS:
            i += 1
            continue
        if c == "{":
            flush()
            start = i
            alts: list[str] = []
            cur: list[str] = []
            i += 1
            while True:
                if i >= n:
                    raise EDSSyntaxError("unterminated group", start)
                c = text[i]
                if c == "{":
                    raise EDSSyntaxError("nested '{'", i)
                if c == ",":
                    alts.append("".join(cur))
                    cur = []
                elif c == "}":
                    alts.append("".join(cur))
                    break
                elif c not in _WS:
                    cur.append(c)
                i += 1
            if alts == [""]:
                raise EDSSyntaxError("empty group", start)
            segments.append(Segment(tuple(alts)))
            i += 1
            continue
        if c in "},":
            raise EDSSyntaxError(f"unexpected {c!r}", i)
        run.append(c)
        i += 1
    flush()
    if not segments:
        raise EDSSyntaxError("no segments", 0)
    return EDString(tuple(segments))


def serialize_eds(text: EDString) -> str:
    """Canonical `.eds` form.

    A singleton segment is written as a bare run unless it is empty or
    would merge with a preceding bare run.
    """
    out = []
    prev_bare = False
    for seg in text.segments:
        if len(seg.strings) == 1 and seg.strings[0] and not prev_bare and not _has_special(seg.strings[0]):
            out.append(seg.strings[0])
            prev_bare = True
        elif seg.strings == ("",):
            out.append("{,}")   # `{}` is reserved as a syntax error
            prev_bare = False
        else:
            out.append("{" + ",".join(seg.strings) + "}")
            prev_bare = False
    return "".join(out)


def _has_special(s: str) -> bool:
    return any(c in _SPECIAL or c in _WS for c in s)


# ------------------------------------------------------------- transforms

def reverse(x):
    """Reverse a pattern, a segment or an ED string (segment order and letters)."""
    if isinstance(x, EDString):
        return EDString(tuple(reverse(s) for s in reversed(x.segments)))
    if isinstance(x, Segment):
        return Segment(tuple(s[::-1] for s in x.strings))
    if isinstance(x, Pattern):
        return Pattern(x.letters[::-1])
    if isinstance(x, str):
        return x[::-1]
    raise TypeError(f"cannot reverse {type(x).__name__}")


def remap_alphabet(pattern: Pattern, text: EDString) -> tuple[Pattern, EDString]:
    """Rank-encode the pattern letters and send every other letter to m+1.

    Ranks are dense over the distinct pattern letters in sorted order, so
    they lie in ``[1, m]``.
    """
    p = pattern.letters if isinstance(pattern, Pattern) else _as_text(pattern)
    rank = {c: chr(r) for r, c in enumerate(sorted(set(p)), start=1)}
    sentinel = chr(len(p) + 1)

    def enc(s: str) -> str:
        return "".join(rank.get(c, sentinel) for c in s)

    new_text = EDString(tuple(Segment(tuple(enc(s) for s in seg.strings)) for seg in text.segments))
    return Pattern(enc(p)), new_text


def as_pattern(p) -> str:
    """Plain string view of a pattern given as Pattern, str, bytes or codes."""
    if isinstance(p, Pattern):
        return p.letters
    return _as_text(p)


def as_edstring(t) -> EDString:
    if isinstance(t, EDString):
        return t
    if isinstance(t, (str, bytes, bytearray)):
        return parse_eds(t)
    return EDString.of(*t)


def segment_strings(seg) -> Sequence[str]:
    return seg.strings if isinstance(seg, Segment) else tuple(seg)
