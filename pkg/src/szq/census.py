"""Census of small-order elements across torus cosets.

For each coset of the cyclic torus <M(omega)> in the standard copy, count
how many of its q - 1 elements have order 1, 2 and 4; the distribution of
these count vectors collapses to nine values with closed-form frequencies.
The scan exploits that an element of the standard copy has order in
{1, 2, 4} exactly when its trace vanishes, and that the trace of
M(x) * rep is a 4-term twisted linear form in x (four field
multiplications per element), so full matrix work happens only on hits.
"""

from .field import build_field
from .mat4 import IDENT, mat_mul
from .szstd import gen_T, gen_U

SUPPORTED_Q = (8, 32)


def conjectured_counts(q):
    """The nine (v1, v2, v4) -> coset-count values as exact integers."""
    table = {
        (0, 0, 0): (q - 1) * (3 * q ** 3 + 2 * q ** 2 - 8 * q + 16) * 3,
        (0, 0, 1): (q - 1) * q * (2 * q ** 2 + q + 20) * 4,
        (0, 0, 2): (q - 1) * q ** 2 * (q - 2) * 6,
        (0, 0, 3): (q - 1) * q * (q - 2) * 12,
        (0, 0, 4): (q - 1) * q * (q - 2) * (q - 8),
        (0, 1, 0): (q - 1) * q * (q + 2) * 12,
        (0, 1, 2): (q - 1) * q * (q - 2) * 12,
        (0, q - 1, 0): 24,
        (1, 0, 0): 24,
    }
    out = {}
    for key, num in table.items():
        if num % 24:
            raise ArithmeticError(f"count for {key} is not integral at q={q}")
        out[key] = num // 24
    return {k: v for k, v in out.items() if v}


def small_order_proportion(q):
    """Exact proportion of cosets containing an order-4 element, as a pair
    (numerator, denominator)."""
    return 5 * q ** 3 - 3 * q ** 2 + 14 * q - 16, 8 * q * (q ** 2 + 1)


def _classify(F, E, counts):
    if E == IDENT:
        counts[0] += 1
        return
    E2 = mat_mul(F, E, E)
    if E2 == IDENT:
        counts[1] += 1
    elif mat_mul(F, E2, E2) == IDENT:
        counts[2] += 1


def coset_census(F, force=False):
    """Map (v1, v2, v4) -> number of torus cosets, by exhaustive scan.

    Coset representatives are U(c, d) for the stabiliser cell and
    U(c, d) T U(a, b) for the big cell.  Refuses q outside {8, 32} unless
    force is set (q = 128 takes hours in pure Python).
    """
    q = F.q
    if q not in SUPPORTED_Q and not force:
        raise ValueError(f"census supports q in {SUPPORTED_Q}; "
                         "pass force=True to override")
    mul = F.mul
    torus = []
    for x in range(1, q):
        xt1 = mul(F.twist(x), x)
        torus.append((xt1, x, F.inv(x), F.inv(xt1)))
    us = [[gen_U(F, c, d) for d in range(q)] for c in range(q)]
    # column-reversed U(c, d), i.e. U(c, d) * T, for the big cell
    uts = [[tuple(u[4 * i + (3 - j)] for i in range(4) for j in range(4))
            for u in row] for row in us]
    result = {}

    def scan(rep_diag, rep_full):
        counts = [0, 0, 0]
        full = None
        for xt1, x, xi, xt1i in torus:
            if mul(xt1, rep_diag[0]) ^ mul(x, rep_diag[1]) \
                    ^ mul(xi, rep_diag[2]) ^ mul(xt1i, rep_diag[3]):
                continue
            if full is None:
                full = rep_full()
            E = (mul(xt1, full[0]), mul(xt1, full[1]), mul(xt1, full[2]), mul(xt1, full[3]),
                 mul(x, full[4]), mul(x, full[5]), mul(x, full[6]), mul(x, full[7]),
                 mul(xi, full[8]), mul(xi, full[9]), mul(xi, full[10]), mul(xi, full[11]),
                 mul(xt1i, full[12]), mul(xt1i, full[13]), mul(xt1i, full[14]), mul(xt1i, full[15]))
            _classify(F, E, counts)
        key = tuple(counts)
        result[key] = result.get(key, 0) + 1

    # stabiliser cell: reps U(c, d), diagonal is all ones
    for c in range(q):
        for d in range(q):
            u = us[c][d]
            scan((1, 1, 1, 1), lambda u=u: u)
    # big cell: reps L * W with L = U(c, d) T, W = U(a, b)
    for a in range(q):
        wa = us[a]
        for b in range(q):
            w = wa[b]
            w_cols = [(w[i], w[i + 4], w[i + 8], w[i + 12]) for i in range(4)]
            for crow in uts:
                for L in crow:
                    dgs = tuple(
                        mul(L[4 * i], w_cols[i][0]) ^ mul(L[4 * i + 1], w_cols[i][1])
                        ^ mul(L[4 * i + 2], w_cols[i][2]) ^ mul(L[4 * i + 3], w_cols[i][3])
                        for i in range(4))
                    scan(dgs, lambda L=L, w=w: mat_mul(F, L, w))
    total = sum(result.values())
    if total != q * q * (q * q + 1):
        raise ArithmeticError(f"census covered {total} cosets, "
                              f"expected {q * q * (q * q + 1)}")
    return result


def census_matches_conjecture(F, observed=None, force=False):
    """(observed, conjectured, match) for the field F."""
    if observed is None:
        observed = coset_census(F, force=force)
    conjectured = conjectured_counts(F.q)
    return observed, conjectured, observed == conjectured


def census_for_m(m, force=False):
    F = build_field(m)
    return coset_census(F, force=force)
