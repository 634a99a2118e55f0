import pytest

from szq.mat4 import det
from szq.randgen import RNG_ID, PrOracle, pr_init, pr_next
from szq.slp import eval_matrices
from szq.szstd import standard_generators


def test_rng_id():
    assert RNG_ID == "mt19937"


def test_slps_track_matrices(F8):
    gens = standard_generators(F8)
    oracle = PrOracle(gens, F8, seed=11)
    for _ in range(50):
        mat, slp = oracle.next()
        assert det(F8, mat) != 0
        assert eval_matrices(slp, gens, F8) == mat


def test_determinism(F8):
    gens = standard_generators(F8)
    o1, o2 = pr_init(gens, F8, seed=5), PrOracle(gens, F8, seed=5)
    for _ in range(20):
        assert pr_next(o1)[0] == o2.next()[0]
    o3 = PrOracle(gens, F8, seed=6)
    assert [o1.next()[0] for _ in range(5)] != [o3.next()[0] for _ in range(5)]


def test_draws_spread_over_group(F8, sz8_set):
    gens = standard_generators(F8)
    oracle = PrOracle(gens, F8, seed=1)
    seen = set()
    for _ in range(400):
        mat, _ = oracle.next()
        assert mat in sz8_set
        seen.add(mat)
    # far more distinct values than any small subgroup could hold
    assert len(seen) > 300


def test_rejects_bad_generators(F8):
    with pytest.raises(ValueError):
        PrOracle([], F8, seed=0)
    singular = (0,) * 16
    with pytest.raises(ValueError):
        PrOracle([singular], F8, seed=0)


def test_slot_count(F8):
    gens = standard_generators(F8)
    oracle = PrOracle(gens, F8, seed=0)
    assert len(oracle.slots) == 10
    oracle = PrOracle(gens * 3, F8, seed=0)  # 9 generators -> 14 slots
    assert len(oracle.slots) == 14
