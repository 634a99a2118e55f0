import random

import pytest

from szq.mat4 import IDENT, det, mat_inv, mat_mul, random_invertible, vec_mat
from szq.szstd import (POINT_INF, BruhatForm, gen_M, gen_T, gen_U,
                       group_order, is_on_ovoid, normalize_point, ovoid_point,
                       ovoid_points, random_sigma_element, sigma_decompose,
                       sigma_membership, standard_generators, u_inverse)


def test_unipotent_group_law_exhaustive(F8):
    for a in range(8):
        for b in range(8):
            U1 = gen_U(F8, a, b)
            assert u_inverse(F8, a, b) == mat_inv(F8, U1)
            for c in range(8):
                for d in range(8):
                    lhs = mat_mul(F8, U1, gen_U(F8, c, d))
                    rhs = gen_U(F8, a ^ c, b ^ d ^ F8.mul(a, F8.twist(c)))
                    assert lhs == rhs


def test_unipotent_group_law_sampled(F32, rng):
    for _ in range(300):
        a, b, c, d = (rng.randrange(32) for _ in range(4))
        lhs = mat_mul(F32, gen_U(F32, a, b), gen_U(F32, c, d))
        assert lhs == gen_U(F32, a ^ c, b ^ d ^ F32.mul(a, F32.twist(c)))


def test_generator_shapes(F8):
    assert gen_U(F8, 0, 0) == IDENT
    assert gen_M(F8, 1) == IDENT
    T = gen_T()
    assert mat_mul(F8, T, T) == IDENT
    # T inverts the torus
    for lam in range(2, 8):
        M = gen_M(F8, lam)
        assert mat_mul(F8, mat_mul(F8, T, M), T) == mat_inv(F8, M)
    # M(lam) M(mu) = M(lam mu)
    for lam in range(1, 8):
        for mu in range(1, 8):
            assert mat_mul(F8, gen_M(F8, lam), gen_M(F8, mu)) == gen_M(F8, F8.mul(lam, mu))
    with pytest.raises(ZeroDivisionError):
        gen_M(F8, 0)


def test_torus_normalises_unipotent(F8):
    # U(a,b)^M(lam) = U(lam^... ) stays unitriangular; check via membership
    for lam in range(2, 8):
        M = gen_M(F8, lam)
        Minv = mat_inv(F8, M)
        for a in range(8):
            for b in range(8):
                C = mat_mul(F8, mat_mul(F8, Minv, gen_U(F8, a, b)), M)
                bf = sigma_decompose(F8, C)
                assert bf is not None and bf.lam == 1 and bf.tail is None


def test_group_order_and_element_count(F8, sz8, sz8_set):
    assert group_order(F8) == 29120
    assert len(sz8) == 29120
    assert len(sz8_set) == 29120
    assert all(det(F8, g) != 0 for g in random.Random(0).sample(sz8, 200))


def test_standard_generators_in_group(F8, sz8_set):
    for g in standard_generators(F8):
        assert g in sz8_set


def test_ovoid_points(F8):
    pts = ovoid_points(F8)
    assert len(pts) == 65
    assert len(set(pts)) == 65
    assert pts[0] == POINT_INF
    for p in pts:
        assert is_on_ovoid(F8, p)
    assert not is_on_ovoid(F8, (0, 1, 0, 0))
    assert not is_on_ovoid(F8, (1, 1, 1, 1)) or ovoid_point(F8, 1, 1) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        is_on_ovoid(F8, (0, 0, 0, 0))


def test_group_preserves_ovoid(F8, sz8, rng):
    pts = ovoid_points(F8)
    for g in rng.sample(sz8, 100):
        for p in rng.sample(pts, 8):
            assert is_on_ovoid(F8, vec_mat(F8, p, g))


def test_normalize_point(F8):
    assert normalize_point(F8, (3, 0, 0, 0)) == POINT_INF
    p = ovoid_point(F8, 3, 5)
    scaled = tuple(F8.mul(6, x) for x in p)
    assert normalize_point(F8, scaled) == p
    with pytest.raises(ValueError):
        normalize_point(F8, (0, 0, 0, 0))


def test_sigma_decompose_roundtrip_exhaustive(F8, sz8):
    """Every group element decomposes and reassembles exactly."""
    big = small = 0
    for h in sz8:
        bf = sigma_decompose(F8, h)
        assert bf is not None
        assert bf.to_matrix(F8) == h
        if bf.in_big_cell:
            big += 1
        else:
            small += 1
    q = 8
    assert small == q * q * (q - 1)
    assert big == q ** 4 * (q - 1)


def test_sigma_membership_rejects_outsiders(F8, sz8_set, rng):
    hits = 0
    for _ in range(300):
        A = random_invertible(F8, rng)
        assert sigma_membership(F8, A) == (A in sz8_set)
        hits += A in sz8_set
    assert hits <= 2  # |Sz(8)| / |GL(4,8)| is about 2e-9


def test_sigma_decompose_none_paths(F8):
    assert sigma_decompose(F8, (0,) * 16) is None
    # first row pattern off the ovoid
    bad = (1, 1, 1, 1) + IDENT[4:]
    assert sigma_decompose(F8, bad) is None


def test_bruhat_serialize(F8):
    bf = BruhatForm(lam=3, c=10 % 8, d=7)
    assert bf.serialize() == "FH 3 2 7"
    bf = BruhatForm(lam=1, c=0, d=0, tail=(5, 6))
    assert bf.serialize() == "FHTF 1 0 0 5 6"
    assert bf.in_big_cell


def test_random_sigma_element_distribution(F8, sz8_set):
    rng = random.Random(42)
    cells = [0, 0]
    for _ in range(400):
        h = random_sigma_element(F8, rng)
        assert h in sz8_set
        cells[sigma_decompose(F8, h).in_big_cell] += 1
    # big cell has q^2/(q^2+1) of the mass
    assert cells[1] > 350


def test_sigma_decompose_large_field(rng):
    from szq import build_field
    F = build_field(4)
    for _ in range(50):
        h = random_sigma_element(F, rng)
        bf = sigma_decompose(F, h)
        assert bf is not None and bf.to_matrix(F) == h
