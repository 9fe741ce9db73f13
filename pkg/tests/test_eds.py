import random

import pytest

from edsm import EDSSyntaxError, EDString, Pattern, Segment, parse_eds, remap_alphabet, reverse, serialize_eds
from edsm.generate import GenParams, generate


def test_parse_runs_and_groups():
    t = parse_eds(b"AC{G,T}A")
    assert [s.strings for s in t] == [("AC",), ("G", "T"), ("A",)]
    assert (t.n, t.N) == (3, 5)


def test_empty_alternative_counts_one():
    t = parse_eds("{AT,,G}")
    assert t.n == 1
    assert set(t[0].strings) == {"AT", "", "G"}
    assert t.N == 4


def test_nested_brace_offset():
    with pytest.raises(EDSSyntaxError) as e:
        parse_eds("{A,{B}")
    assert e.value.offset == 3


@pytest.mark.parametrize("bad", ["{}", "{A", "A}", "A,B", ""])
def test_syntax_errors(bad):
    with pytest.raises(EDSSyntaxError):
        parse_eds(bad)


def test_whitespace_between_units():
    assert parse_eds("AC {G,T}\nA\n") == parse_eds("AC{G,T}A")


def test_duplicates_dropped():
    assert parse_eds("{A,A,C}")[0].strings == ("A", "C")


def test_segment_invariants():
    with pytest.raises(ValueError):
        Segment(())
    with pytest.raises(ValueError):
        EDString(())
    with pytest.raises(ValueError):
        Pattern("")


def test_reverse_examples(tta_text):
    t = EDString.of(["ab"], ["c", ""])
    assert reverse(t) == EDString.of(["c", ""], ["ba"])
    one = EDString.of(["a"])
    assert reverse(one) == one
    r = reverse(tta_text)
    assert (r.n, r.N) == (7, 20)
    assert reverse(Pattern("abc")) == Pattern("cba")


def test_reverse_involution_and_counts():
    rng = random.Random(3)
    for seed in range(200):
        t = generate(GenParams(n=rng.randint(1, 8), eps_prob=0.3), seed)
        r = reverse(t)
        assert reverse(r) == t
        assert (r.n, r.N) == (t.n, t.N)
        assert t.N == sum(sum(len(s) or 1 for s in seg) for seg in t)


def test_serialize_roundtrip():
    for seed in range(200):
        t = generate(GenParams(n=6, eps_prob=0.3), seed)
        s = serialize_eds(t)
        assert parse_eds(s) == t
        assert serialize_eds(parse_eds(s)) == s


def test_remap_ranks_and_sentinel():
    p, t = remap_alphabet(Pattern("ba"), EDString.of(["cab"]))
    assert p.codes() == [2, 1]
    assert t[0].codes() == [[3, 1, 2]]


def test_remap_tta(tta_text):
    p, t = remap_alphabet(Pattern("TTA"), tta_text)
    assert p.codes() == [2, 2, 1]
    codes = {c for seg in t for s in seg.codes() for c in s}
    assert codes == {1, 2, 4}
    # G and C both collapse to the sentinel
    assert t[0].codes() == [[4, 2, 1]]
    assert tta_text[0].strings == ("GTA",)


def test_remap_single_letter():
    p, t = remap_alphabet(Pattern("aaaa"), EDString.of(["aaa"]))
    assert p.codes() == [1, 1, 1, 1]
    assert t[0].codes() == [[1, 1, 1]]
