import itertools
import random

import pytest

from edsm import EDString
from edsm.generate import random_instance
from edsm.oracle import (edit_distance, enumerate_occurrences, hamming_distance, oracle_ap_sets,
                         oracle_end_positions)


def test_edit_distance_examples():
    assert edit_distance("abc", "abc") == 0
    assert edit_distance("abc", "axc") == 1
    assert edit_distance("kitten", "sitting") == 3
    assert edit_distance("", "ab") == 2


def test_edit_distance_metric():
    ws = ["".join(w) for n in range(4) for w in itertools.product("ab", repeat=n)]
    for a, b in itertools.product(ws, repeat=2):
        assert edit_distance(a, b) == edit_distance(b, a)
        assert (edit_distance(a, b) == 0) == (a == b)
    rng = random.Random(0)
    for _ in range(500):
        a, b, c = (rng.choice(ws) for _ in range(3))
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


def test_hamming_needs_equal_lengths():
    assert hamming_distance("abc", "abd") == 1
    with pytest.raises(ValueError):
        hamming_distance("a", "ab")


def test_tta_exact(tta_text):
    assert {j2 for _, j2 in enumerate_occurrences("TTA", tta_text, "exact")} == {6, 7}


def test_single_segment_pattern():
    assert enumerate_occurrences("abc", EDString.of(["abc"]), "exact") == {(1, 1)}


def test_desk_scale_guard():
    with pytest.raises(ValueError):
        oracle_end_positions("a" * 13, EDString.of(["a"]), "exact")
    with pytest.raises(ValueError):
        oracle_end_positions("a", EDString.of(*[["a"]] * 9), "exact")
    with pytest.raises(ValueError):
        oracle_end_positions("a", EDString.of(["a"]), "fuzzy")


def test_epsilon_segment_propagates():
    t = EDString.of(["ab"], [""])
    sets = oracle_ap_sets("abc", t, "edit1")
    assert sets[1][0] == sets[0][0] == {2}
    assert sets[1][1] == sets[0][1]


def test_mode_chain_and_projection():
    rng = random.Random(17)
    for _ in range(400):
        p, t = random_instance(rng)
        occ = {md: enumerate_occurrences(p, t, md) for md in ("exact", "hamming1", "edit1")}
        assert occ["exact"] <= occ["hamming1"] <= occ["edit1"]
        for md, o in occ.items():
            ends = {j2 for _, j2 in o}
            assert ends == {i for i, (_, _, e) in enumerate(oracle_ap_sets(p, t, md), start=1) if e}
            assert all(1 <= j <= j2 <= t.n for j, j2 in o)
