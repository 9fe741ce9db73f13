import random

import pytest

from edsm import EngineConfig, run_reporting
from edsm.generate import GenParams, generate, inject_error, random_instance, scaling_text
from edsm.oracle import edit_distance, oracle_end_positions


def test_deterministic():
    prm = GenParams(n=6)
    assert str(generate(prm, 1)) == str(generate(prm, 1))
    assert str(generate(prm, 1)) != str(generate(prm, 2))


def test_eps_prob_one():
    t = generate(GenParams(n=5, eps_prob=1.0), 3)
    assert all(seg.has_empty for seg in t)


def test_bad_params():
    for prm in (GenParams(n=0), GenParams(alphabet=""), GenParams(eps_prob=1.5)):
        with pytest.raises(ValueError):
            generate(prm, 0)
    with pytest.raises(ValueError):
        generate(GenParams(n=1, max_len=2), 0, plant_pattern="ACGTACGT")


def test_plant_guarantees_report():
    prm = GenParams(n=6, max_alts=3, max_len=4)
    rng = random.Random(70)
    for seed in range(200):
        p = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 10)))
        t = generate(prm, seed, plant_pattern=p)
        assert any(True for _ in run_reporting(p, t, EngineConfig("exact")))
        assert oracle_end_positions(p, t, "exact")
        t = generate(prm, seed, plant_pattern=p, with_error=True)
        assert oracle_end_positions(p, t, "edit1")


def test_inject_error_distance():
    rng = random.Random(71)
    for _ in range(500):
        p = "".join(rng.choice("ab") for _ in range(rng.randint(1, 8)))
        assert edit_distance(p, inject_error(rng, p, "ab")) == 1


def test_random_instance_bounds():
    rng = random.Random(72)
    for _ in range(500):
        p, t = random_instance(rng)
        assert 1 <= len(p) <= 10 and 1 <= t.n <= 6
        assert all(len(seg) <= 3 and all(len(s) <= 4 for s in seg) for seg in t)


def test_scaling_text_size():
    t = scaling_text(4096, "ACGT" * 8, 5)
    assert t.N == 4096 and t.n == 64
    with pytest.raises(ValueError):
        scaling_text(100, "ACGT", 0)
