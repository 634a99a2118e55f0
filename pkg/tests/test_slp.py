import pytest

from szq.mat4 import IDENT, mat_inv, mat_mul, mat_pow
from szq.slp import (Slp, deserialize, eval_matrices, evaluate, length,
                     mul_opt, serialize, substitute, topo_order)
from szq.szstd import gen_M, gen_U, gen_T


def _eval_int(s, images):
    """Evaluate in the additive group of integers (mul=+, inv=-)."""
    return evaluate(s, images, mul=lambda a, b: a + b, inv=lambda a: -a, one=0)


def test_basic_evaluation():
    x, y = Slp.gen(0), Slp.gen(1)
    assert _eval_int(x * y, [3, 5]) == 8
    assert _eval_int(x.inv(), [3]) == -3
    assert _eval_int(x ** 7, [3]) == 21
    assert _eval_int(x ** -2, [3]) == -6
    assert _eval_int(Slp.one(), [3]) == 0
    assert _eval_int((x * y.inv()) ** 3, [2, 1]) == 3


def test_matrix_evaluation(F8):
    U, M, T = gen_U(F8, 1, 0), gen_M(F8, 2), gen_T()
    s = (Slp.gen(0) * Slp.gen(1).inv()) ** 3 * Slp.gen(2)
    expected = mat_mul(F8, mat_pow(F8, mat_mul(F8, U, mat_inv(F8, M)), 3), T)
    assert eval_matrices(s, [U, M, T], F8) == expected
    assert eval_matrices(Slp.one(), [U], F8) == IDENT


def test_generator_index_bounds():
    with pytest.raises(IndexError):
        _eval_int(Slp.gen(2), [1, 2])


def test_shared_subterms_counted_once():
    x = Slp.gen(0)
    sub = x * x.inv()
    s = sub * sub * sub
    # nodes: gen, inv, inner mul, two outer muls = 4 costed ops
    assert length(s) == 4
    assert len(topo_order(s)) == 5


def test_length_cost_model():
    x = Slp.gen(0)
    assert length(x) == 0
    assert length(x * x) == 1
    assert length(x.inv()) == 1
    assert length(x ** 1) == 0
    assert length(x ** 4) == 2        # two squarings
    assert length(x ** 5) == 3        # two squarings + one multiply
    assert length(x ** -5) == 4       # plus one inversion
    assert length(x ** 0) == 0


def test_serialize_roundtrip(F8):
    U, M, T = gen_U(F8, 3, 5), gen_M(F8, 4), gen_T()
    s = ((Slp.gen(0) ** 5) * Slp.gen(1).inv() * Slp.gen(2)) ** -3
    text = serialize(s)
    s2 = deserialize(text)
    assert eval_matrices(s, [U, M, T], F8) == eval_matrices(s2, [U, M, T], F8)
    assert serialize(s2) == text
    lines = text.splitlines()
    assert lines[0].startswith("G")
    assert lines[-1].startswith("R ")


def test_serialize_format_frozen():
    s = Slp.gen(0) * Slp.gen(1).inv()
    assert serialize(s) == "G 0\nG 1\nI 1\nM 0 2\nR 3"
    assert serialize(Slp.gen(0) ** 5) == "G 0\nP 0 5\nR 1"


def test_deserialize_errors():
    with pytest.raises(ValueError):
        deserialize("G 0\nQ 1")
    with pytest.raises(ValueError):
        deserialize("G 0")  # no root line


def test_substitute(F8):
    U, M = gen_U(F8, 1, 0), gen_M(F8, 2)
    inner0 = Slp.gen(0) * Slp.gen(1)           # U M
    inner1 = Slp.gen(1) ** 2                   # M^2
    outer = Slp.gen(0).inv() * Slp.gen(1)      # symbols to be replaced
    s = substitute(outer, [inner0, inner1])
    got = eval_matrices(s, [U, M], F8)
    expected = mat_mul(F8, mat_inv(F8, mat_mul(F8, U, M)), mat_pow(F8, M, 2))
    assert got == expected


def test_mul_opt():
    x = Slp.gen(0)
    assert mul_opt(None, None) is None
    assert mul_opt(x, None) is x
    assert mul_opt(None, x) is x
    assert _eval_int(mul_opt(x, x), [2]) == 4
