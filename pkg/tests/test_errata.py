import random

from edsm.anchor import anchor_reporting, full_groups
from edsm.errata import (ErrataLabel, build_t0, build_t1, errata_anchor, errata_items, label_bound,
                         node_pair_condition, search_t1)
from edsm.exact import PatternIndex, bits, from_bits

from conftest import GROUP_AP, GROUP_P, GROUP_SEG


def labels(tree):
    return {(lab.kind, lab.ident, lab.pos) for labs in tree.trie.payloads for lab in labs}


def base_tree():
    return build_t0(GROUP_P, from_bits(GROUP_AP), GROUP_SEG)


def test_t0_labels():
    t0 = base_tree()
    want = {("t", 1, None), ("t", 2, None)} | {("p", j, None) for j in (2, 3, 5, 8, 9, 10)}
    assert labels(t0) == want
    for (kind, ident), s in t0.sources.items():
        assert t0.trie.node_string(t0.nodes_with(kind, ident)[0][0]) == s


def test_t0_small_cases():
    t0 = build_t0("ab", 0, ["a"])
    assert len(t0.trie) == 2 and t0.label_count == 1
    t0 = build_t0("ab", from_bits([1]), ["b"])
    (v,) = {n for n, _ in t0.nodes_with("p", 2)}
    assert {lab.kind for lab in t0.trie.payloads[v]} == {"p", "t"}


def test_t1_modified_labels():
    got = labels(build_t1(base_tree()))
    for lab in [("p", 10, 2), ("t", 2, 1), ("p", 2, 1), ("t", 2, 2), ("p", 9, 3)]:
        assert lab in got


def test_t1_of_path_is_t0():
    t0 = build_t0("aaaa", from_bits([1, 2, 3]), ["a"])
    assert labels(build_t1(t0)) == labels(t0)


def test_t1_labels_reconstruct():
    rng = random.Random(50)
    for _ in range(300):
        m = rng.randint(1, 9)
        p = "".join(rng.choice("abc") for _ in range(m))
        seg = list({"".join(rng.choice("abc") for _ in range(rng.randint(1, 5))) for _ in range(rng.randint(1, 4))})
        t0 = build_t0(p, rng.getrandbits(m + 1) & ~1, seg)
        for s, lab in errata_items(t0):
            src = t0.sources[(lab.kind, lab.ident)]
            if lab.pos is None:
                assert s == src
            else:
                q = lab.pos - 1
                assert len(s) == len(src) and s[q] != src[q]
                assert s[:q] == src[:q] and s[q + 1:] == src[q + 1:]


def test_search_example():
    t1 = build_t1(base_tree())
    res = search_t1(t1, check_clean=True)
    assert bits(res) == [4, 5, 7, 10]
    assert res == anchor_reporting(full_groups(PatternIndex(GROUP_P)), GROUP_SEG, from_bits(GROUP_AP), True)


def test_search_without_segment_labels():
    t1 = build_t1(build_t0("abcd", from_bits([1, 2]), ["abcdefg"]))
    assert search_t1(t1) == 0


def test_search_hand_trace():
    # suffix "bcd" (|X| = 3) sits below the segment string "bc" (length 2)
    t1 = build_t1(build_t0("abcd", from_bits([1]), ["bc"]))
    assert search_t1(t1) == 1 << ((4 - 3) + 2)


def test_search_matches_geometric_route():
    rng = random.Random(51)
    for _ in range(500):
        m = rng.randint(1, 10)
        p = "".join(rng.choice("ab") for _ in range(m))
        seg = list({"".join(rng.choice("ab") for _ in range(rng.randint(1, 5))) for _ in range(rng.randint(1, 4))})
        ap = rng.getrandbits(m + 1) & ~1
        want = anchor_reporting(full_groups(PatternIndex(p)), seg, ap, True, m=m)
        t1 = build_t1(build_t0(p, ap, seg))
        assert search_t1(t1, check_clean=True) == want == errata_anchor(p, ap, seg)


def test_node_pair_condition_small():
    t1 = build_t1(base_tree())
    # bba against suffix P[10..12] = abb: two mismatches
    assert not node_pair_condition(t1, 10, 2)
    # aaa against P[3..5] = aaa, and bba against P[2..4] = baa
    assert node_pair_condition(t1, 3, 1)
    assert node_pair_condition(t1, 2, 2)


def test_label_bound_random():
    rng = random.Random(52)
    for _ in range(300):
        m = rng.randint(1, 12)
        p = "".join(rng.choice("abcd") for _ in range(m))
        seg = list({"".join(rng.choice("abcd") for _ in range(rng.randint(1, 6))) for _ in range(rng.randint(1, 5))})
        t1 = build_t1(build_t0(p, rng.getrandbits(m + 1) & ~1, seg))
        assert t1.label_count <= label_bound(m, sum(map(len, seg)))


def test_label_type():
    lab = ErrataLabel("p", 3, None)
    assert lab.kind == "p" and lab.pos is None
