"""Exact 4x4 linear algebra over GF(2^(2m+1)).

A matrix is a flat tuple of 16 field elements, row-major.  A vector is a
tuple of 4 elements and acts as a ROW vector: the group acts on points by
v -> v*M.  Everything here is a pure function of immutable values.
"""

import itertools

from .field import poly_roots

IDENT = (1, 0, 0, 0,
         0, 1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1)

# order_class results
IDENTITY = "identity"
ORDER2 = "order2"
ORDER4 = "order4"
DIVIDES_QM1 = "divides_qm1"
OTHER = "other"


def mat_mul(F, A, B):
    mul = F.mul
    return tuple(
        mul(A[r], B[c]) ^ mul(A[r + 1], B[c + 4])
        ^ mul(A[r + 2], B[c + 8]) ^ mul(A[r + 3], B[c + 12])
        for r in (0, 4, 8, 12) for c in (0, 1, 2, 3)
    )


def vec_mat(F, v, A):
    mul = F.mul
    return tuple(
        mul(v[0], A[c]) ^ mul(v[1], A[c + 4]) ^ mul(v[2], A[c + 8]) ^ mul(v[3], A[c + 12])
        for c in (0, 1, 2, 3)
    )


def transpose(A):
    return tuple(A[4 * (i % 4) + i // 4] for i in range(16))


def diag(F, d1, d2, d3, d4):
    return (d1, 0, 0, 0, 0, d2, 0, 0, 0, 0, d3, 0, 0, 0, 0, d4)


def trace(A):
    return A[0] ^ A[5] ^ A[10] ^ A[15]


def mat_inv(F, A):
    """Gauss-Jordan inverse; ZeroDivisionError if singular."""
    rows = [list(A[4 * i:4 * i + 4]) + [int(j == i) for j in range(4)] for i in range(4)]
    mul, inv = F.mul, F.inv
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        pinv = inv(rows[col][col])
        rows[col] = [mul(pinv, x) for x in rows[col]]
        for r in range(4):
            if r != col and rows[r][col]:
                c = rows[r][col]
                rows[r] = [x ^ mul(c, y) for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][4 + j] for i in range(4) for j in range(4))


def det(F, A):
    rows = [list(A[4 * i:4 * i + 4]) for i in range(4)]
    mul, inv = F.mul, F.inv
    d = 1
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            return 0
        rows[col], rows[piv] = rows[piv], rows[col]
        d = mul(d, rows[col][col])
        pinv = inv(rows[col][col])
        for r in range(col + 1, 4):
            if rows[r][col]:
                c = mul(rows[r][col], pinv)
                rows[r] = [x ^ mul(c, y) for x, y in zip(rows[r], rows[col])]
    return d


def mat_pow(F, A, n):
    """A^n by square-and-multiply; negative n inverts first."""
    if n < 0:
        A = mat_inv(F, A)
        n = -n
    R = IDENT
    while n:
        if n & 1:
            R = mat_mul(F, R, A)
        A = mat_mul(F, A, A)
        n >>= 1
    return R


def conj(F, A, B):
    """A^B = B^-1 A B."""
    return mat_mul(F, mat_mul(F, mat_inv(F, B), A), B)


def comm(F, A, B):
    """[A, B] = A^-1 B^-1 A B."""
    return mat_mul(F, mat_mul(F, mat_inv(F, A), mat_inv(F, B)), mat_mul(F, A, B))


def order_class(F, A):
    """Coarse order information specialised to Suzuki groups."""
    if A == IDENT:
        return IDENTITY
    A2 = mat_mul(F, A, A)
    if A2 == IDENT:
        return ORDER2
    if mat_mul(F, A2, A2) == IDENT:
        return ORDER4
    if mat_pow(F, A, F.q - 1) == IDENT:
        return DIVIDES_QM1
    return OTHER


def half_power(F, A):
    """A^((N-1)/2) with N = (q^2+1)(q-1), an odd multiple of any odd order.

    If |A| = 2k+1 this equals A^k, so the result squared times A is the
    identity.
    """
    N = (F.q * F.q + 1) * (F.q - 1)
    return mat_pow(F, A, (N - 1) // 2)


def half_power_exponent(F):
    return ((F.q * F.q + 1) * (F.q - 1) - 1) // 2


def char_poly(F, A):
    """Characteristic polynomial det(xI + A) (char 2), lowest degree first."""
    from .field import pmul, ptrim
    entries = []
    for i in range(4):
        row = []
        for j in range(4):
            c = [A[4 * i + j]]
            if i == j:
                c = [A[4 * i + j], 1]
            row.append(c)
        entries.append(row)
    cp = [0] * 5
    for perm in itertools.permutations(range(4)):
        term = [1]
        for i in range(4):
            term = pmul(F, term, entries[i][perm[i]])
        for k, ck in enumerate(term):
            cp[k] ^= ck
    return ptrim(cp)


def right_kernel(F, A):
    """Basis (as row tuples) of {x : A.x^T = 0}, reduced echelon form."""
    rows = [list(A[4 * i:4 * i + 4]) for i in range(4)]
    mul, inv = F.mul, F.inv
    pivots = []
    r = 0
    for col in range(4):
        piv = next((i for i in range(r, 4) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pinv = inv(rows[r][col])
        rows[r] = [mul(pinv, x) for x in rows[r]]
        for i in range(4):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x ^ mul(c, y) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(4) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0, 0, 0, 0]
        v[fcol] = 1
        for i, pcol in enumerate(pivots):
            v[pcol] = rows[i][fcol]
        basis.append(tuple(v))
    return basis


def left_kernel_rect(F, rows):
    """Basis of {c : sum c_i rows_i = 0} for a list of length-4 row tuples."""
    k = len(rows)
    # transpose to a 4 x k system and eliminate
    mat = [[rows[j][i] for j in range(k)] for i in range(4)]
    mul, inv = F.mul, F.inv
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, 4) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pinv = inv(mat[r][col])
        mat[r] = [mul(pinv, x) for x in mat[r]]
        for i in range(4):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [x ^ mul(c, y) for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == 4:
            break
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * k
        v[fcol] = 1
        for i, pcol in enumerate(pivots):
            v[pcol] = mat[i][fcol]
        basis.append(tuple(v))
    return basis


def rref_rows(F, vecs):
    """Reduced echelon basis of the row space spanned by vecs."""
    rows = [list(v) for v in vecs if any(v)]
    mul, inv = F.mul, F.inv
    out = []
    r = 0
    for col in range(4):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pinv = inv(rows[r][col])
        rows[r] = [mul(pinv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x ^ mul(c, y) for x, y in zip(rows[i], rows[r])]
        r += 1
    return [tuple(v) for v in rows[:r]]


def left_nullspace(F, A):
    """Reduced echelon basis of {v : v.A = 0} (row vectors)."""
    return rref_rows(F, right_kernel(F, transpose(A)))


def row_space_intersection(F, U, W):
    """Reduced echelon basis of span(U) n span(W)."""
    stacked = list(U) + list(W)
    combos = left_kernel_rect(F, stacked)
    mul = F.mul
    vecs = []
    for c in combos:
        v = [0, 0, 0, 0]
        for i in range(len(U)):
            if c[i]:
                for j in range(4):
                    v[j] ^= mul(c[i], U[i][j])
        vecs.append(tuple(v))
    return rref_rows(F, vecs)


def nullspace_chain(F, alpha):
    """(V1, V2, V3) with V_i = {v : v (alpha - 1)^i = 0}, dims (1, 2, 3).

    alpha must be unipotent of order 4; a dimension mismatch raises.
    """
    N = tuple(a ^ b for a, b in zip(alpha, IDENT))
    Ni = N
    chain = []
    for i in (1, 2, 3):
        basis = left_nullspace(F, Ni)
        if len(basis) != i:
            raise ValueError(f"nullspace dimension {len(basis)} != {i}; "
                             "matrix is not unipotent of order 4")
        chain.append(basis)
        Ni = mat_mul(F, Ni, N)
    return tuple(chain)


def random_invertible(F, rng):
    """Uniform element of GL(4, q) by rejection on the determinant."""
    q = F.q
    while True:
        A = tuple(rng.randrange(q) for _ in range(16))
        if det(F, A) != 0:
            return A


def proportional(F, v, w):
    """True if nonzero row vectors v, w span the same line."""
    if not any(w):
        return False
    for i in range(4):
        if v[i]:
            c = F.div(w[i], v[i]) if w[i] else 0
            return all(w[j] == F.mul(c, v[j]) for j in range(4))
    return False


def diagonalise_torus(F, g):
    """(u, c, lam) with u = c^-1 g c = diag(l^(t+1), l, l^-1, l^(-t-1)).

    Requires g != 1 and g^(q-1) = 1.  lam is the smaller (by integer
    encoding) of the two valid choices lam, lam^-1.
    """
    if g == IDENT:
        raise ValueError("g must be nontrivial")
    eigs = poly_roots(F, char_poly(F, g))
    if len(eigs) != 4 or 0 in eigs:
        raise ValueError("eigenvalues do not split with the torus pattern")
    lam = None
    eigset = set(eigs)
    for cand in eigs:
        pattern = {F.pow(cand, F.t + 1), cand, F.inv(cand), F.pow(cand, -F.t - 1)}
        if pattern == eigset:
            if lam is None or cand < lam:
                lam = cand
    if lam is None:
        raise ValueError("eigenvalues do not form the torus pattern")
    order = (F.pow(lam, F.t + 1), lam, F.inv(lam), F.pow(lam, -F.t - 1))
    cols = []
    for mu in order:
        shifted = tuple(g[i] ^ (mu if i % 5 == 0 else 0) for i in range(16))
        ker = right_kernel(F, shifted)
        if len(ker) != 1:
            raise ValueError("eigenspace is not one-dimensional")
        cols.append(ker[0])
    c = tuple(cols[j][i] for i in range(4) for j in range(4))
    u = conj(F, g, c)
    if u != diag(F, *order):
        raise ValueError("diagonalisation failed to reproduce the torus pattern")
    return u, c, lam
