import random

import pytest

from szq.field import peval, build_field
from szq.mat4 import (IDENT, char_poly, comm, conj, det, diag,
                      diagonalise_torus, half_power, left_nullspace, mat_inv,
                      mat_mul, mat_pow, nullspace_chain, order_class,
                      proportional, random_invertible, right_kernel,
                      row_space_intersection, rref_rows, trace, transpose,
                      vec_mat)
from szq.szstd import gen_M, gen_U


def _rand_mat(F, rng):
    return tuple(rng.randrange(F.q) for _ in range(16))


def test_mul_identity_and_associativity(F8, rng):
    for _ in range(100):
        A, B, C = (_rand_mat(F8, rng) for _ in range(3))
        assert mat_mul(F8, A, IDENT) == A
        assert mat_mul(F8, IDENT, A) == A
        assert mat_mul(F8, A, mat_mul(F8, B, C)) == mat_mul(F8, mat_mul(F8, A, B), C)


def test_vec_mat_is_row_action(F8, rng):
    for _ in range(50):
        A, B = _rand_mat(F8, rng), _rand_mat(F8, rng)
        v = tuple(rng.randrange(8) for _ in range(4))
        assert vec_mat(F8, vec_mat(F8, v, A), B) == vec_mat(F8, v, mat_mul(F8, A, B))


def test_inverse_and_det(F8, rng):
    for _ in range(60):
        A = random_invertible(F8, rng)
        assert mat_mul(F8, A, mat_inv(F8, A)) == IDENT
        B = random_invertible(F8, rng)
        assert det(F8, mat_mul(F8, A, B)) == F8.mul(det(F8, A), det(F8, B))
    singular = (1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1)
    assert det(F8, singular) == 0
    with pytest.raises(ZeroDivisionError):
        mat_inv(F8, singular)


def test_mat_pow(F8, rng):
    for _ in range(20):
        A = random_invertible(F8, rng)
        P = IDENT
        for n in range(8):
            assert mat_pow(F8, A, n) == P
            P = mat_mul(F8, P, A)
        assert mat_pow(F8, A, -3) == mat_inv(F8, mat_pow(F8, A, 3))


def test_transpose_trace_diag(F8, rng):
    A = _rand_mat(F8, rng)
    assert transpose(transpose(A)) == A
    assert trace(A) == trace(transpose(A))
    assert diag(F8, 1, 2, 3, 4)[5] == 2


def test_char_poly_against_pointwise_det(F8, rng):
    for _ in range(30):
        A = _rand_mat(F8, rng)
        cp = char_poly(F8, A)
        for x in range(8):
            shifted = tuple(A[i] ^ (x if i % 5 == 0 else 0) for i in range(16))
            assert peval(F8, cp, x) == det(F8, shifted)


def test_kernels(F8, rng):
    for _ in range(40):
        A = _rand_mat(F8, rng)
        for v in right_kernel(F8, A):
            assert vec_mat(F8, v, transpose(A)) == (0, 0, 0, 0)
        for v in left_nullspace(F8, A):
            assert vec_mat(F8, v, A) == (0, 0, 0, 0)


def test_row_space_intersection_against_bruteforce(F8, rng):
    def span(vs):
        out = {(0, 0, 0, 0)}
        for v in vs:
            for c in range(1, 8):
                scaled = tuple(F8.mul(c, x) for x in v)
                out |= {tuple(a ^ b for a, b in zip(scaled, w)) for w in out}
        return out

    for _ in range(15):
        U = rref_rows(F8, [tuple(rng.randrange(8) for _ in range(4)) for _ in range(2)])
        W = rref_rows(F8, [tuple(rng.randrange(8) for _ in range(4)) for _ in range(2)])
        got = span(row_space_intersection(F8, U, W))
        assert got == span(list(U)) & span(list(W))


def test_order_class(F8, sz8, rng):
    assert order_class(F8, IDENT) == "identity"
    assert order_class(F8, gen_U(F8, 0, 1)) == "order2"
    assert order_class(F8, gen_U(F8, 1, 0)) == "order4"
    assert order_class(F8, gen_M(F8, 2)) == "divides_qm1"
    seen = set()
    for A in rng.sample(sz8, 300):
        n, P = 1, A
        while P != IDENT:
            P = mat_mul(F8, P, A)
            n += 1
        cls = order_class(F8, A)
        seen.add(cls)
        if n == 1:
            assert cls == "identity"
        elif n == 2:
            assert cls == "order2"
        elif n == 4:
            assert cls == "order4"
        elif (F8.q - 1) % n == 0:
            assert cls == "divides_qm1"
        else:
            assert cls == "other"
    assert "other" in seen  # orders 5 and 13 dominate Sz(8)


def test_half_power_squares_to_inverse_on_odd_order(F8, rng):
    # for |A| odd, A * half_power(A)^2 = 1
    for lam in range(2, 8):
        A = gen_M(F8, lam)  # order divides 7, odd
        H = half_power(F8, A)
        assert mat_mul(F8, A, mat_mul(F8, H, H)) == IDENT


def test_nullspace_chain_on_unipotent(F8):
    for a in range(1, 8):
        for b in range(8):
            U = gen_U(F8, a, b)
            chain = nullspace_chain(F8, U)
            assert tuple(len(c) for c in chain) == (1, 2, 3)
            N = tuple(x ^ y for x, y in zip(U, IDENT))
            Np = N
            for i, basis in enumerate(chain):
                for v in basis:
                    assert vec_mat(F8, v, Np) == (0, 0, 0, 0)
                Np = mat_mul(F8, Np, N)
    with pytest.raises(ValueError):
        nullspace_chain(F8, gen_U(F8, 0, 1))  # order 2, wrong dims


def test_proportional(F8):
    assert proportional(F8, (1, 2, 3, 0), (5, F8.mul(5, 2), F8.mul(5, 3), 0))
    assert not proportional(F8, (1, 2, 3, 0), (1, 2, 4, 0))
    assert not proportional(F8, (1, 0, 0, 0), (0, 0, 0, 0))


@pytest.mark.parametrize("m", [1, 2])
def test_diagonalise_torus(m, rng):
    F = build_field(m)
    for lam in (2, 3, F.q - 1):
        M = gen_M(F, lam)
        C = random_invertible(F, rng)
        g = conj(F, M, C)
        u, c, lam2 = diagonalise_torus(F, g)
        assert conj(F, g, c) == u
        assert u == gen_M(F, lam2)
        assert lam2 == min(lam, F.inv(lam))
    with pytest.raises(ValueError):
        diagonalise_torus(F, IDENT)


def test_conj_and_comm(F8, rng):
    for _ in range(20):
        A = random_invertible(F8, rng)
        B = random_invertible(F8, rng)
        assert conj(F8, A, B) == mat_mul(F8, mat_mul(F8, mat_inv(F8, B), A), B)
        assert comm(F8, A, A) == IDENT
        assert mat_mul(F8, B, mat_mul(F8, A, comm(F8, A, B))) == mat_mul(F8, A, B)
