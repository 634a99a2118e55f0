"""The standard copy of Sz(q) inside GL(4, q).

Generators are the lower unitriangular family U(a, b), the diagonal torus
family M(lam) and the antidiagonal involution T.  The group is the disjoint
union of the point-stabiliser cell {M(lam) U(c, d)} and the big cell
{M(lam) U(c, d) T U(a, b)}, which is what makes membership testing and
decomposition O(1) field operations.
"""

from dataclasses import dataclass

from .mat4 import IDENT, mat_mul, vec_mat


def gen_U(F, a, b):
    """Lower unitriangular generator; U(a,b) U(c,d) = U(a+c, b+d+a c^t)."""
    at = F.twist(a)
    at1 = F.mul(at, a)            # a^(t+1)
    at2 = F.mul(at1, a)           # a^(t+2)
    bt = F.twist(b)
    return (1, 0, 0, 0,
            a, 1, 0, 0,
            at1 ^ b, at, 1, 0,
            at2 ^ F.mul(a, b) ^ bt, b, a, 1)


def gen_M(F, lam):
    """Torus generator diag(lam^(t+1), lam, lam^-1, lam^(-t-1))."""
    if lam == 0:
        raise ZeroDivisionError("lam must be nonzero")
    lt1 = F.mul(F.twist(lam), lam)
    return (lt1, 0, 0, 0,
            0, lam, 0, 0,
            0, 0, F.inv(lam), 0,
            0, 0, 0, F.inv(lt1))


def gen_T(F=None):
    """The antidiagonal involution swapping the two distinguished points."""
    return (0, 0, 0, 1,
            0, 0, 1, 0,
            0, 1, 0, 0,
            1, 0, 0, 0)


def standard_generators(F):
    """The triple (U(1,0), M(omega), T) generating the standard copy."""
    return [gen_U(F, 1, 0), gen_M(F, F.primitive_element()), gen_T()]


def group_order(F):
    q = F.q
    return q * q * (q * q + 1) * (q - 1)


# ---------------------------------------------------------------------------
# Ovoid
# ---------------------------------------------------------------------------

def ovoid_point(F, a, b):
    """The normalized ovoid point (a^(t+2) + ab + b^t : b : a : 1)."""
    s = F.mul(F.mul(F.twist(a), a), a) ^ F.mul(a, b) ^ F.twist(b)
    return (s, b, a, 1)


POINT_INF = (1, 0, 0, 0)


def normalize_point(F, v):
    """Scale a nonzero row vector to the canonical ovoid-point pattern."""
    if not any(v):
        raise ValueError("zero vector is not a projective point")
    if v[3]:
        c = F.inv(v[3])
        return tuple(F.mul(c, x) for x in v)
    c = F.inv(next(x for x in v if x))
    return tuple(F.mul(c, x) for x in v)


def is_on_ovoid(F, v):
    """Exact membership of a nonzero row vector's line in the ovoid."""
    if not any(v):
        raise ValueError("zero vector is not a projective point")
    if v[1] == v[2] == v[3] == 0:
        return True  # the point at infinity, scaled
    if v[3] == 0:
        return False
    c = F.inv(v[3])
    a = F.mul(c, v[2])
    b = F.mul(c, v[1])
    return F.mul(c, v[0]) == ovoid_point(F, a, b)[0]


def ovoid_points(F):
    """All q^2 + 1 ovoid points (exhaustive; intended for small q)."""
    pts = [POINT_INF]
    for a in range(F.q):
        for b in range(F.q):
            pts.append(ovoid_point(F, a, b))
    return pts


# ---------------------------------------------------------------------------
# Decomposition and membership
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BruhatForm:
    """h = M(lam) U(c, d) when tail is None, else h = M(lam) U(c, d) T U(*tail)."""
    lam: int
    c: int
    d: int
    tail: tuple | None = None

    @property
    def in_big_cell(self):
        return self.tail is not None

    def to_matrix(self, F):
        h = mat_mul(F, gen_M(F, self.lam), gen_U(F, self.c, self.d))
        if self.tail is not None:
            h = mat_mul(F, mat_mul(F, h, gen_T()), gen_U(F, *self.tail))
        return h

    def serialize(self):
        if self.tail is None:
            return f"FH {self.lam:x} {self.c:x} {self.d:x}"
        a, b = self.tail
        return f"FHTF {self.lam:x} {self.c:x} {self.d:x} {a:x} {b:x}"


def u_inverse(F, a, b):
    """U(a, b)^-1 = U(a, b + a^(t+1))."""
    return gen_U(F, a, b ^ F.mul(F.twist(a), a))


def sigma_decompose(F, h):
    """Bruhat-like decomposition of h in the standard copy, or None.

    Inspects the first row to peel off the big-cell factor T U(a, b), reads
    lam from the (2,2) entry of the remainder, and verifies all 16 entries
    of the residual unitriangular factor.  O(1) field operations.
    """
    r0, r1, r2, r3 = h[0], h[1], h[2], h[3]
    if r1 == 0 and r2 == 0 and r3 == 0:
        if r0 == 0:
            return None
        k0 = h
        tail = None
    else:
        if r3 == 0:
            return None
        mu_inv = F.inv(r3)
        a = F.mul(mu_inv, r2)
        b = F.mul(mu_inv, r1)
        if F.mul(mu_inv, r0) != ovoid_point(F, a, b)[0]:
            return None
        # h = k0 T U(a, b), so k0 = h U(a, b)^-1 T
        k0 = mat_mul(F, mat_mul(F, h, u_inverse(F, a, b)), gen_T())
        tail = (a, b)
    lam = k0[5]
    if lam == 0:
        return None
    minv = gen_M(F, F.inv(lam))
    k2 = mat_mul(F, minv, k0)
    c, d = k2[4], k2[13]
    if k2 != gen_U(F, c, d):
        return None
    return BruhatForm(lam, c, d, tail)


def sigma_membership(F, h):
    """True iff h lies in the standard copy."""
    return sigma_decompose(F, h) is not None


def random_sigma_element(F, rng):
    """Uniform element of the standard copy via the two-cell partition."""
    q = F.q
    lam = rng.randrange(1, q)
    c = rng.randrange(q)
    d = rng.randrange(q)
    h = mat_mul(F, gen_M(F, lam), gen_U(F, c, d))
    # the big cell is q^2 times larger than the stabiliser cell
    if rng.randrange(q * q + 1) != 0:
        a = rng.randrange(q)
        b = rng.randrange(q)
        h = mat_mul(F, mat_mul(F, h, gen_T()), gen_U(F, a, b))
    return h


def sz_elements(F):
    """All elements of the standard copy, enumerated via the partition.

    Exhaustive; intended for q = 8 oracles only.
    """
    out = []
    T = gen_T()
    us = {(a, b): gen_U(F, a, b) for a in range(F.q) for b in range(F.q)}
    for lam in range(1, F.q):
        M = gen_M(F, lam)
        for (c, d), U1 in us.items():
            fh = mat_mul(F, M, U1)
            out.append(fh)
            fht = mat_mul(F, fh, T)
            for U2 in us.values():
                out.append(mat_mul(F, fht, U2))
    return out
