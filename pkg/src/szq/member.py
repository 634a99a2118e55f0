"""Deterministic membership testing and rewriting after recognition.

With a conjugating matrix g in hand, membership of h reduces to decomposing
h^g in the standard copy.  Rewriting expresses h^g as a short word in the
conjugated rewriting triple (e, f, z) = (h1^g, alpha^g, gamma^g), using two
GF(2)-linear bases precomputed once per recognition; substituting the
stored input-generator SLPs of the triple then yields h as an SLP in the
original generators.
"""

from dataclasses import dataclass

from .field import BinMat, SingularMatrix, bin_invert, bin_vecmat
from .mat4 import IDENT, conj, mat_inv, mat_mul
from .slp import Slp, eval_matrices, mul_opt, substitute
from .szstd import gen_T, sigma_decompose


class TablesError(Exception):
    """The recognition output violates a rewriting invariant; re-recognize."""


@dataclass
class RewriteTables:
    F: object
    g: tuple
    ginv: tuple
    e: tuple           # h1^g = M(mu) U(a2, b2)
    f: tuple           # alpha^g = U(a1, b1)
    z: tuple           # gamma^g = T
    mu: int
    a1: int
    basis_a_inv: BinMat   # inverts bits n -> sum n_i mu^(it) a1
    basis_b_inv: BinMat   # inverts bits p -> sum p_i mu^((t+2)i) a1^(t+1)
    triple_slps: tuple    # input-generator SLPs of (h1, alpha, gamma)


def precompute_tables(out):
    """Build rewriting tables from a RecognitionOutput.

    One-time cost: two (2m+1) x (2m+1) GF(2) matrix inversions.  Raises
    TablesError if the recognition output is malformed.
    """
    F = out.F
    g = out.g
    ginv = mat_inv(F, g)
    f = conj(F, out.rw.alpha[0], g)
    e = conj(F, out.rw.h[0], g)
    z = conj(F, out.rw.gamma[0], g)
    if z != gen_T():
        raise TablesError("third rewriting generator does not standardise to T")
    bf = sigma_decompose(F, f)
    if bf is None or bf.tail is not None or bf.lam != 1:
        raise TablesError("order-4 generator does not standardise to U(a, b)")
    a1 = bf.c
    if a1 == 0:
        raise TablesError("order-4 generator degenerated to the centre of U")
    be = sigma_decompose(F, e)
    if be is None or be.tail is not None or be.lam == 1:
        raise TablesError("stabiliser generator lacks a nontrivial torus part")
    mu = be.lam
    n = F.n
    mut = F.twist(mu)                       # mu^t
    mut2 = F.mul(mut, F.mul(mu, mu))        # mu^(t+2)
    rows_a = []
    x = a1
    for _ in range(n):
        rows_a.append(x)
        x = F.mul(x, mut)
    rows_b = []
    y = F.mul(F.twist(a1), a1)              # a1^(t+1)
    for _ in range(n):
        rows_b.append(y)
        y = F.mul(y, mut2)
    try:
        basis_a_inv = bin_invert(BinMat(rows_a, n))
        basis_b_inv = bin_invert(BinMat(rows_b, n))
    except SingularMatrix:
        raise TablesError("rewriting basis is singular; re-recognize")
    return RewriteTables(F=F, g=g, ginv=ginv, e=e, f=f, z=z, mu=mu, a1=a1,
                         basis_a_inv=basis_a_inv, basis_b_inv=basis_b_inv,
                         triple_slps=(out.rw.h[1], out.rw.alpha[1],
                                      out.rw.gamma[1]))


# SLP generator symbols used by the rewriting stage
E_SYM, F_SYM, Z_SYM = 0, 1, 2


def _chain(bits, n, f_exp):
    """f^(x0 e) e^-1 f^(x1 e) ... e^-1 f^(x_(2m) e) e^(2m), x_i = bits>>i & 1.

    The f factor is f**f_exp when the bit is set.  Returns None when the
    whole chain collapses to the identity (all bits zero).
    """
    if bits == 0:
        return None
    e = Slp.gen(E_SYM)
    e_inv = e.inv()
    fpart = Slp.gen(F_SYM) if f_exp == 1 else Slp.gen(F_SYM) ** f_exp
    cur = None
    for i in range(n):
        if i > 0:
            cur = mul_opt(cur, e_inv)
        if bits >> i & 1:
            cur = mul_opt(cur, fpart)
    if n > 1:
        cur = mul_opt(cur, e ** (n - 1))
    return cur


def _write_unipotent_opt(tables, a, b):
    F = tables.F
    n = F.n
    nbits = bin_vecmat(a, tables.basis_a_inv)
    j1 = _chain(nbits, n, 1)
    if j1 is None:
        star = 0
    else:
        star = eval_matrices(j1, [tables.e, tables.f], F)[13]
    beta = b ^ star
    pbits = bin_vecmat(beta, tables.basis_b_inv)
    j2 = _chain(pbits, n, 2)
    return mul_opt(j1, j2)


def write_unipotent(tables, a, b):
    """An SLP over (e, f) evaluating to U(a, b); length <= 10(2m+1) + 2.

    First the additive bases express a through powers of f interleaved with
    torus twists by e, then the leftover second coordinate is corrected by
    a chain of f^2 factors (which keep the first coordinate zero).
    """
    slp = _write_unipotent_opt(tables, a, b)
    return slp if slp is not None else Slp.one()


def write_torus(tables, lam):
    """An SLP over (e, f, z) evaluating to M(lam), lam != 0.

    Uses the triple-transvection identity
    M(lam) = z U(0, lam^(1+t/2)) z U(lam^(-t/2), lam^(-1-t/2)) z U(lam^(t/2), 0).
    """
    F = tables.F
    if lam == 0:
        raise ZeroDivisionError("lam must be nonzero")
    ht = F.half_twist(lam)                  # lam^(t/2)
    z = Slp.gen(Z_SYM)
    parts = [z, _write_unipotent_opt(tables, 0, F.mul(lam, ht)),
             z, _write_unipotent_opt(tables, F.inv(ht),
                                     F.inv(F.mul(lam, ht))),
             z, _write_unipotent_opt(tables, ht, 0)]
    cur = None
    for p in parts:
        cur = mul_opt(cur, p)
    return cur


def is_member(tables, h):
    """Deterministic membership test for the recognized group."""
    return sigma_decompose(tables.F, _standardise(tables, h)) is not None


def _standardise(tables, h):
    return mat_mul(tables.F, mat_mul(tables.F, tables.ginv, h), tables.g)


def express_in_rewriting_generators(tables, h):
    """SLP over (e, f, z) evaluating to h^g, or None if h is not a member.

    At most five write_unipotent invocations (three inside the torus word),
    so the length is bounded by 5(10(2m+1) + 2) plus constant glue.
    """
    F = tables.F
    bf = sigma_decompose(F, _standardise(tables, h))
    if bf is None:
        return None
    cur = None
    if bf.lam != 1:
        cur = mul_opt(cur, write_torus(tables, bf.lam))
    if bf.c or bf.d:
        cur = mul_opt(cur, _write_unipotent_opt(tables, bf.c, bf.d))
    if bf.tail is not None:
        cur = mul_opt(cur, Slp.gen(Z_SYM))
        a, b = bf.tail
        if a or b:
            cur = mul_opt(cur, _write_unipotent_opt(tables, a, b))
    return cur if cur is not None else Slp.one()


def express(tables, h):
    """SLP over the ORIGINAL generators evaluating to h, or None.

    Conjugation is a homomorphism, so substituting the stored SLPs of the
    rewriting triple into the (e, f, z)-word for h^g yields a word equal
    to h itself.
    """
    word = express_in_rewriting_generators(tables, h)
    if word is None:
        return None
    return substitute(word, list(tables.triple_slps))
