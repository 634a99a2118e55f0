"""Constructive recognition of conjugates of the standard Suzuki copy.

Given generators X of a GL(4, q)-conjugate of the standard copy, this
module finds an order-4 element (random torus element + companion, solved
through a degree-<=4 trace equation and one discrete logarithm), builds a
point-stabiliser pair from it, and assembles a conjugating matrix g with
<X>^g equal to the standard copy.  Everything probabilistic is Las Vegas:
each stage re-verifies its postcondition before returning, so no
unverified output ever escapes.
"""

import math
import random
import time
from dataclasses import dataclass, field as dc_field

from .field import NotInSubgroup, _factorint, poly_roots
from .mat4 import (IDENT, ORDER4, conj, comm, diag, diagonalise_torus,
                   half_power_exponent, mat_inv, mat_mul, mat_pow,
                   nullspace_chain, order_class, proportional,
                   row_space_intersection, transpose, vec_mat)
from .randgen import PrOracle
from .slp import Slp, serialize
from .szstd import gen_T, sigma_decompose, sigma_membership

DEFAULT_STRATEGY = "default"
FACTORED_STRATEGY = "factored"


class RecognitionError(Exception):
    """A Las Vegas stage exhausted its retry budget."""


class DegenerateSystem(Exception):
    """All four diagonal entries vanish: the companion is a torus-inverting
    involution and the trace system carries no information."""


@dataclass
class RecogStats:
    draws: int = 0
    iterations: int = 0
    dlog_calls: int = 0
    dlog_time: float = 0.0
    restarts: int = 0

    def as_dict(self):
        return {"draws": self.draws, "iterations": self.iterations,
                "dlog_calls": self.dlog_calls, "dlog_time": self.dlog_time,
                "restarts": self.restarts}


class GroupHandle:
    """A generating set with its random-element oracle and local RNG."""

    def __init__(self, gens, F, seed=0, **oracle_kw):
        self.gens = list(gens)
        self.F = F
        self.gen_slps = [Slp.gen(i) for i in range(len(gens))]
        self.oracle = PrOracle(gens, F, seed, **oracle_kw)
        self.rng = random.Random(seed ^ 0x9E3779B97F4A7C15)


@dataclass
class RewritingGenerators:
    """(alpha, h, gamma): order 4, odd order avoiding subfields, involution."""
    alpha: tuple   # (Mat4, Slp)
    h: tuple
    gamma: tuple


@dataclass
class RecognitionOutput:
    g: tuple                       # the conjugating matrix
    rw: RewritingGenerators
    stats: RecogStats
    F: object = None
    gens: list = dc_field(default_factory=list)

    def serialize(self):
        from .szstd import BruhatForm  # noqa: F401  (format documented there)
        lines = [" ".join(f"{x:x}" for x in self.g)]
        for name, (mat, slp) in (("alpha", self.rw.alpha), ("h", self.rw.h),
                                 ("gamma", self.rw.gamma)):
            lines.append(f"[{name}]")
            lines.append(serialize(slp))
        lines.append(f"[stats] {self.stats.as_dict()}")
        return "\n".join(lines)


def default_iteration_cap(F):
    return 64 * math.ceil(math.log2(F.n))


# ---------------------------------------------------------------------------
# The trace equation
# ---------------------------------------------------------------------------

def solve_trace_system(F, diag_entries):
    """All r in F* such that trace(diag(r^(t+1), r, r^-1, r^(-t-1)) B) = 0,
    where (a, b, c, d) are the diagonal entries of B.

    Degenerate cases with two vanishing pairs are solved directly; otherwise
    the two twisted trace equations combine into a single polynomial of
    degree <= 4 in y = r^t, whose roots are filtered back through the
    original equation with r = y^(t/2).  Raises DegenerateSystem when all
    four entries vanish.
    """
    a, b, c, d = diag_entries
    if a == b == c == d == 0:
        raise DegenerateSystem("companion inverts the torus")
    mul, twist = F.mul, F.twist
    if a == 0 and b == 0:
        if c == 0 or d == 0:
            return []
        ys = [F.div(d, c)]
    elif c == 0 and d == 0:
        if a == 0 or b == 0:
            return []
        ys = [F.div(b, a)]
    else:
        at, bt, ct, dt = twist(a), twist(b), twist(c), twist(d)
        c4 = mul(mul(a, bt), c)
        c3 = mul(mul(a, a), dt) ^ mul(mul(a, bt), d) ^ mul(at, mul(c, c)) ^ mul(mul(b, bt), c)
        c2 = mul(a, mul(c, ct)) ^ mul(mul(b, bt), d)
        c1 = mul(mul(a, ct), d) ^ mul(at, mul(d, d)) ^ mul(mul(b, b), dt) ^ mul(b, mul(c, ct))
        c0 = mul(mul(b, ct), d)
        ys = [y for y in poly_roots(F, [c0, c1, c2, c3, c4]) if y]
    out = []
    for y in ys:
        x = F.half_twist(y)
        if x == 0:
            continue
        x2 = mul(x, x)
        if mul(a, mul(x2, mul(y, y))) ^ mul(b, mul(x2, y)) ^ mul(c, y) ^ d == 0:
            out.append(x)
    return sorted(set(out))


def check_inverts(F, u, B):
    """True iff B^-1 u B = u^-1 (the excluded torus-inverting case)."""
    return conj(F, u, B) == mat_inv(F, u)


# ---------------------------------------------------------------------------
# Finding an element of order 4
# ---------------------------------------------------------------------------

def order4_element(G, strategy=DEFAULT_STRATEGY, max_iters=None, stats=None):
    """(f, slp) with f^4 = 1 != f^2 and slp evaluating to f over G.gens.

    One iteration draws (or retains) a torus element g and a companion h,
    solves the trace system for the companion conjugated alongside g's
    diagonalisation, and closes with a discrete logarithm.  Retry policy:
    a wrong-order g or a failed discrete log redraws g (retaining h); every
    other failure retains g and redraws h.  The "factored" strategy insists
    on |g| = q - 1 so the discrete logarithm is called exactly once.
    """
    F = G.F
    if stats is None:
        stats = RecogStats()
    if max_iters is None:
        max_iters = default_iteration_cap(F)
    qm1 = F.q - 1
    g = slp_g = None
    h = slp_h = None
    g_data = None  # (c, c^-1, lam) for the retained diagonalised g
    redraw_g = True
    redraw_h = True
    for _ in range(max_iters):
        stats.iterations += 1
        if redraw_g:
            g, slp_g = G.oracle.next()
            stats.draws += 1
            g_data = None
        if redraw_h:
            h, slp_h = G.oracle.next()
            stats.draws += 1
        if g_data is None:
            ok = g != IDENT and mat_pow(F, g, qm1) == IDENT
            if ok and strategy == FACTORED_STRATEGY:
                ok = all(mat_pow(F, g, qm1 // p) != IDENT
                         for p, _ in F.factor_qm1())
            if not ok:
                redraw_g, redraw_h = True, False
                continue
            _, cmat, lam = diagonalise_torus(F, g)
            g_data = (cmat, mat_inv(F, cmat), lam)
        cmat, cinv, lam = g_data
        B = mat_mul(F, mat_mul(F, cinv, h), cmat)
        try:
            sols = solve_trace_system(F, (B[0], B[5], B[10], B[15]))
        except DegenerateSystem:
            sols = []
        if not sols:
            redraw_g, redraw_h = False, True
            continue
        r = sols[G.rng.randrange(len(sols))] if len(sols) > 1 else sols[0]
        fhat = mat_mul(F, diag(F, F.mul(F.twist(r), r), r,
                               F.inv(r), F.inv(F.mul(F.twist(r), r))), B)
        if order_class(F, fhat) != ORDER4:
            redraw_g, redraw_h = False, True
            continue
        t0 = time.perf_counter()
        try:
            i = F.discrete_log(lam, r)
        except NotInSubgroup:
            stats.dlog_calls += 1
            stats.dlog_time += time.perf_counter() - t0
            redraw_g, redraw_h = True, False
            continue
        stats.dlog_calls += 1
        stats.dlog_time += time.perf_counter() - t0
        f = mat_mul(F, mat_pow(F, g, i), h)
        slp_f = (slp_g ** i) * slp_h
        if order_class(F, f) != ORDER4:
            redraw_g, redraw_h = False, True
            continue
        return f, slp_f
    raise RecognitionError(f"order-4 search exceeded {max_iters} iterations")


# ---------------------------------------------------------------------------
# Point stabiliser
# ---------------------------------------------------------------------------

def bray_centraliser_involution(G, f2, slp_f2, max_iters=None):
    """An involution j != f2 centralising the involution f2, with SLP.

    Commutator trick: for random c, w = [f2, c] either has even order
    (then a power of w already centralises) or odd order 2k+1 (then
    c w^k centralises); the exponent k is reached through the universal
    odd-order multiple (q^2+1)(q-1).
    """
    F = G.F
    if max_iters is None:
        max_iters = default_iteration_cap(F)
    K = half_power_exponent(F)
    for _ in range(max_iters):
        c, slp_c = G.oracle.next()
        w = mat_mul(F, mat_mul(F, f2, mat_inv(F, c)), mat_mul(F, f2, c))
        slp_w = slp_f2 * slp_c.inv() * slp_f2 * slp_c
        if w == IDENT:
            gmat, slp_gm = c, slp_c
        else:
            w2 = mat_mul(F, w, w)
            if w2 == IDENT:
                j, slp_j = w, slp_w
                if _involution_ok(F, j, f2):
                    return j, slp_j
                continue
            if mat_mul(F, w2, w2) == IDENT:
                j, slp_j = w2, slp_w ** 2
                if _involution_ok(F, j, f2):
                    return j, slp_j
                continue
            gmat = mat_mul(F, c, mat_pow(F, w, K))
            slp_gm = slp_c * (slp_w ** K)
        g2 = mat_mul(F, gmat, gmat)
        if g2 == IDENT:
            j, slp_j = gmat, slp_gm
        elif mat_mul(F, g2, g2) == IDENT:
            j, slp_j = g2, slp_gm ** 2
        else:
            continue
        if _involution_ok(F, j, f2):
            return j, slp_j
    raise RecognitionError("centraliser involution search exhausted")


def _involution_ok(F, j, f2):
    return (j != IDENT and j != f2 and mat_mul(F, j, j) == IDENT
            and comm(F, j, f2) == IDENT)


def _conjugating_candidates(G, extra=16):
    yield from zip(G.gens, G.gen_slps)
    for _ in range(extra):
        yield G.oracle.next()


def subfield_exponents(F):
    """a_p = 2^((2m+1)/p) - 1 for each prime p dividing 2m+1."""
    return [(1 << (F.n // p)) - 1 for p in _factorint(F.n)]


def stabilizer_pair(G, f, slp_f, max_iters=None):
    """(h, slp) completing f to a point-stabiliser pair.

    h conjugates a fresh centralising involution back onto f^2, hence fixes
    the same ovoid point as f; its order is verified odd and large enough
    to avoid every proper subfield.
    """
    F = G.F
    if max_iters is None:
        max_iters = default_iteration_cap(F)
    f2 = mat_mul(F, f, f)
    slp_f2 = slp_f ** 2
    K = half_power_exponent(F)
    aps = subfield_exponents(F)
    for _ in range(max_iters):
        j, slp_j = bray_centraliser_involution(G, f2, slp_f2)
        hmat = None
        for c, slp_c in _conjugating_candidates(G):
            jc = conj(F, j, c)
            if comm(F, f2, jc) == IDENT:
                continue
            w = mat_mul(F, f2, jc)
            if mat_pow(F, w, 4) == IDENT:
                continue  # not odd order: j^c unexpectedly parabolic-close
            hmat = mat_mul(F, c, mat_pow(F, w, K))
            slp_h = slp_c * ((slp_f2 * slp_c.inv() * slp_j * slp_c) ** K)
            break
        if hmat is None:
            continue
        if conj(F, j, hmat) != f2:
            continue
        if hmat == IDENT or mat_pow(F, hmat, 4) == IDENT:
            continue
        if any(mat_pow(F, hmat, ap) == IDENT for ap in aps):
            continue
        return hmat, slp_h
    raise RecognitionError("stabiliser pair search exhausted")


# ---------------------------------------------------------------------------
# The conjugating matrix
# ---------------------------------------------------------------------------

class NoNontrivialEquation(Exception):
    pass


def solve_form_scalar(F, w1, w2):
    """The scalar s != 0 with w K w^T = K, K = antidiag(1, s, s, 1), for
    both w = w1 and w = w2.

    Each matrix entry of the constraint is affine in s; the first
    nontrivial equation is solved and all 32 are re-verified.
    """
    J0 = (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)
    J1 = (0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0)
    eqns = []
    for w in (w1, w2):
        wt = transpose(w)
        A = tuple(x ^ y for x, y in zip(mat_mul(F, mat_mul(F, w, J0), wt), J0))
        Bm = tuple(x ^ y for x, y in zip(mat_mul(F, mat_mul(F, w, J1), wt), J1))
        eqns.extend(zip(A, Bm))
    s = None
    for a, b in eqns:
        if b:
            s = F.div(a, b)
            break
    if s is None:
        raise NoNontrivialEquation("both matrices already preserve the split form")
    if s == 0:
        raise RecognitionError("form scalar degenerated to zero")
    for a, b in eqns:
        if a ^ F.mul(s, b):
            raise RecognitionError("inconsistent form equations")
    return s


def conjugator(G, strategy=DEFAULT_STRATEGY, max_restarts=16):
    """Recognition output (g, rewriting generators, stats) for G = <X>.

    Las Vegas: any failed internal verification restarts the whole
    construction with fresh randomness from G's oracle.
    """
    F = G.F
    stats = RecogStats()
    last_exc = None
    for restart in range(max_restarts):
        stats.restarts = restart
        try:
            return _conjugator_once(G, strategy, stats)
        except RecognitionError as exc:
            last_exc = exc
    raise RecognitionError(f"recognition failed after {max_restarts} restarts: {last_exc}")


def _conjugator_once(G, strategy, stats):
    F = G.F
    f, slp_f = order4_element(G, strategy, stats=stats)
    h1, slp_h1 = stabilizer_pair(G, f, slp_f)
    v_p = nullspace_chain(F, f)
    beta = slp_beta = None
    for b, slp_b in _conjugating_candidates(G):
        if not proportional(F, vec_mat(F, v_p[0][0], b), v_p[0][0]):
            beta, slp_beta = b, slp_b
            break
    if beta is None:
        raise RecognitionError("no generator moves the fixed point")
    f2 = mat_mul(F, f, f)
    gamma = conj(F, f2, beta)
    slp_gamma = slp_beta.inv() * (slp_f ** 2) * slp_beta
    alpha2 = conj(F, f, gamma)
    try:
        v_q = nullspace_chain(F, alpha2)
    except ValueError as exc:
        raise RecognitionError(str(exc))
    u_mid_23 = row_space_intersection(F, v_p[1], v_q[2])
    u_mid_32 = row_space_intersection(F, v_p[2], v_q[1])
    if len(u_mid_23) != 1 or len(u_mid_32) != 1:
        raise RecognitionError("flag intersections are not lines")
    u1 = v_p[0][0]
    u2 = u_mid_23[0]
    u3 = vec_mat(F, u2, gamma)
    u4 = vec_mat(F, u1, gamma)
    if not proportional(F, u3, u_mid_32[0]) or not proportional(F, u4, v_q[0][0]):
        raise RecognitionError("involution does not swap the four lines")
    basis = u1 + u2 + u3 + u4
    try:
        k = mat_inv(F, basis)
    except ZeroDivisionError:
        raise RecognitionError("line basis is singular")
    if conj(F, gamma, k) != gen_T():
        raise RecognitionError("partial standardisation missed the antidiagonal")
    try:
        s = solve_form_scalar(F, conj(F, f, k), conj(F, h1, k))
    except NoNontrivialEquation:
        s = 1
    d2 = F.sqrt(s)
    g = mat_mul(F, k, diag(F, 1, d2, d2, 1))
    out = RecognitionOutput(
        g=g,
        rw=RewritingGenerators(alpha=(f, slp_f), h=(h1, slp_h1),
                               gamma=(gamma, slp_gamma)),
        stats=stats, F=F, gens=G.gens)
    if not verify_recognition(F, G.gens, out):
        raise RecognitionError("final verification failed")
    return out


def verify_recognition(F, gens, out):
    """Full postcondition check of a recognition output."""
    g = out.g
    for x in gens:
        if not sigma_membership(F, conj(F, x, g)):
            return False
    if conj(F, out.rw.gamma[0], g) != gen_T():
        return False
    bf = sigma_decompose(F, conj(F, out.rw.alpha[0], g))
    if bf is None or bf.tail is not None or bf.lam != 1:
        return False
    bh = sigma_decompose(F, conj(F, out.rw.h[0], g))
    if bh is None or bh.tail is not None:
        return False
    # the SLPs must evaluate to their matrices over the input generators
    from .slp import eval_matrices
    for mat, slp in (out.rw.alpha, out.rw.h, out.rw.gamma):
        if eval_matrices(slp, gens, F) != mat:
            return False
    return True
