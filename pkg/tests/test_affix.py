import random

from edsm import EDString
from edsm.affix import build_prefix_groups, prefix_case_hits, prefix_case_report, suffix_case_contribution
from edsm.exact import from_bits
from edsm.oracle import edit_distance, hamming_distance, oracle_end_positions


def close(a, b, hamming):
    if hamming:
        return len(a) == len(b) and hamming_distance(a, b) <= 1
    return edit_distance(a, b) <= 1


def brute_prefix(p, starts, seg, hamming):
    out = 0
    for lam in starts:
        if any(close(p[lam:], s[:k], hamming) for s in seg for k in range(1, len(s) + 1)):
            out |= 1 << lam
    return out


def brute_suffix(p, seg, hamming):
    out = 0
    for j in range(1, len(p) + 1):
        if any(close(p[:j], s[k:], hamming) for s in seg for k in range(len(s))):
            out |= 1 << j
    return out


def rand_seg(rng, alpha="abc", maxlen=6):
    return list({"".join(rng.choice(alpha) for _ in range(rng.randint(0, maxlen))) for _ in range(rng.randint(1, 4))})


def test_groups_examples():
    g = build_prefix_groups(["abc", "ab"], 4)
    assert {mu: grp.members for mu, grp in g.items()} == {1: ["a"], 2: ["ab"], 3: ["abc"]}
    assert build_prefix_groups([""], 5) == {}
    assert set(build_prefix_groups(["abcdef"], 3)) == {1, 2, 3}


def test_groups_random_members():
    rng = random.Random(40)
    for _ in range(300):
        seg = rand_seg(rng)
        groups = build_prefix_groups(seg, 8)
        for mu, g in groups.items():
            assert g.members == sorted({s[:mu] for s in seg if len(s) >= mu})
            assert len(g.points) == len(g.members)
        assert sum(len(g.members) for g in groups.values()) <= sum(len(s) for s in seg)


def test_prefix_case_examples():
    groups = build_prefix_groups(["bxc"], 4)
    for ham in (True, False):
        assert prefix_case_report(from_bits([1]), groups, "abc", ham)
        assert oracle_end_positions("abc", EDString.of(["a"], ["bxc"]), "hamming1" if ham else "edit1") == {2}
    assert not prefix_case_report(0, groups, "abc")


def test_prefix_case_random():
    rng = random.Random(41)
    for _ in range(600):
        m = rng.randint(1, 9)
        p = "".join(rng.choice("abc") for _ in range(m))
        seg = rand_seg(rng)
        groups = build_prefix_groups(seg, m + 1)
        starts = range(m)
        for ham in (True, False):
            assert prefix_case_hits(starts, groups, p, ham) == brute_prefix(p, starts, seg, ham), (p, seg, ham)


def test_suffix_examples():
    assert suffix_case_contribution([""], "abc") == 0
    assert suffix_case_contribution(["x"], "yab") & 0b10
    assert suffix_case_contribution(["x"], "yab", hamming=True) == 0b10


def test_suffix_case_random():
    rng = random.Random(42)
    for _ in range(600):
        m = rng.randint(1, 9)
        p = "".join(rng.choice("abc") for _ in range(m))
        seg = rand_seg(rng)
        for ham in (True, False):
            assert suffix_case_contribution(seg, p, ham) == brute_suffix(p, seg, ham), (p, seg, ham)


def test_suffix_is_mirrored_prefix_case():
    rng = random.Random(43)
    for _ in range(300):
        m = rng.randint(1, 8)
        p = "".join(rng.choice("ab") for _ in range(m))
        seg = rand_seg(rng, "ab")
        rseg = [s[::-1] for s in seg]
        hits = prefix_case_hits(range(m), build_prefix_groups(rseg, m + 1), p[::-1])
        mirrored = sum(1 << (m - l) for l in range(m) if hits >> l & 1)
        assert suffix_case_contribution(seg, p) == mirrored
