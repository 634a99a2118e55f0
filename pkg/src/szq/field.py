"""Exact arithmetic in GF(2^(2m+1)), the ground fields of the Suzuki groups.

Field elements are plain Python ints: bit i of the int is the coefficient
of x^i in the residue polynomial, so 0 and 1 are the field's zero and one.
Addition is xor.  A ``GF`` object carries the modulus and all derived data
(q, the twist exponent t = 2^(m+1), the factorisation of q-1, and, for
small fields, log/antilog tables that make mul/inv/pow O(1)).

The modulus for each degree n = 2m+1 is the lowest-weight irreducible
polynomial (trinomial preferred, then pentanomial), ties broken by smallest
integer encoding, so fields are reproducible across runs.

Also provided here: discrete logarithms (Pohlig-Hellman with baby-step
giant-step per prime), roots of polynomials of degree <= 4 over GF(q)
(gcd with x^q - x, then trace-map splitting), and dense linear algebra
over GF(2) with rows stored as int bitmasks.
"""

import random

# Fields up to this size get full log/antilog tables.
TABLE_LIMIT = 1 << 18


class NotInSubgroup(Exception):
    """Raised by discrete_log when the target is outside <base>."""


# ---------------------------------------------------------------------------
# GF(2)[x] on int bitmasks
# ---------------------------------------------------------------------------

def _pdeg(a):
    return a.bit_length() - 1


def _pmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a, m):
    dm = _pdeg(m)
    da = _pdeg(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = _pdeg(a)
    return a


def _pgcd(a, b):
    while b:
        a, b = b, _pmod(a, b)
    return a


def _psqr_mod(a, m):
    # square a sparse-ish polynomial by bit spreading, then reduce
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return _pmod(r, m)


def _x_to_2k_mod(k, m):
    """x^(2^k) mod m."""
    s = 2  # the polynomial x
    for _ in range(k):
        s = _psqr_mod(s, m)
    return s


def _is_irreducible(f, n):
    """Irreducibility of degree-n f over GF(2) via the Rabin test."""
    if _pdeg(f) != n:
        return False
    if _x_to_2k_mod(n, f) != 2:
        return False
    for p in _factorint(n):
        if _pgcd(_x_to_2k_mod(n // p, f) ^ 2, f) != 1:
            return False
    return True


def lowest_weight_modulus(n):
    """Smallest irreducible trinomial of degree n, else smallest pentanomial."""
    for k in range(1, n):
        f = (1 << n) | (1 << k) | 1
        if _is_irreducible(f, n):
            return f
    for k3 in range(3, n):
        for k2 in range(2, k3):
            for k1 in range(1, k2):
                f = (1 << n) | (1 << k3) | (1 << k2) | (1 << k1) | 1
                if _is_irreducible(f, n):
                    return f
    raise ValueError(f"no low-weight irreducible of degree {n}")


# ---------------------------------------------------------------------------
# Integer factorisation (trial division + Pollard rho), desk scale
# ---------------------------------------------------------------------------

def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _factorint(n):
    """Sorted list of the distinct prime factors of n."""
    out = set()
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out.add(p)
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if _is_prime(n):
            out.add(n)
            continue
        d = _pollard_rho(n)
        stack.append(d)
        stack.append(n // d)
    return sorted(out)


def factor_with_multiplicity(n):
    """n > 1 as a sorted list of (prime, multiplicity) pairs."""
    out = []
    for p in _factorint(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


# ---------------------------------------------------------------------------
# The field itself
# ---------------------------------------------------------------------------

class GF:
    """GF(2^(2m+1)) with the Suzuki twist x -> x^t, t = 2^(m+1)."""

    def __init__(self, m, modulus=None):
        if m < 1:
            raise ValueError("m must be >= 1 (the q = 2 case is excluded)")
        self.m = m
        self.n = 2 * m + 1
        self.q = 1 << self.n
        self.t = 1 << (m + 1)
        if modulus is None:
            modulus = lowest_weight_modulus(self.n)
        if not _is_irreducible(modulus, self.n):
            raise ValueError("modulus is not irreducible of the right degree")
        self.modulus = modulus
        self._qm1_factors = None
        self._primitive = None
        self._log = None
        self._exp = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF(m={self.m}, q={self.q}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def meta(self):
        """Serializable field parameters: {m, modulus-hex}."""
        return {"m": self.m, "modulus": f"{self.modulus:x}"}

    # -- raw (table-free) arithmetic ------------------------------------

    def _raw_mul(self, a, b):
        r = 0
        mod = self.modulus
        top = 1 << self.n
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def _raw_inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        # extended Euclid in GF(2)[x]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1 != 1:
            d = _pdeg(r0) - _pdeg(r1)
            if d < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                d = -d
            r0 ^= r1 << d
            s0 ^= s1 << d
            if r0 == 0 and r1 != 1:
                raise ZeroDivisionError("element not invertible")
        return _pmod(s1, self.modulus)

    def _build_tables(self):
        q = self.q
        g = self.primitive_element()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._raw_mul(x, g)
        self._exp = exp
        self._log = log

    # -- public arithmetic -----------------------------------------------

    def mul(self, a, b):
        if self._log is not None:
            if a and b:
                return self._exp[self._log[a] + self._log[b]]
            return 0
        return self._raw_mul(a, b)

    def sqr(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_inv(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        e %= self.q - 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        r = 1
        b = a
        while e:
            if e & 1:
                r = self._raw_mul(r, b)
            b = self._raw_mul(b, b)
            e >>= 1
        return r

    # -- twist maps --------------------------------------------------------

    def twist(self, x):
        """x -> x^t, i.e. m+1 successive squarings."""
        for _ in range(self.m + 1):
            x = self.mul(x, x)
        return x

    def half_twist(self, x):
        """x -> x^(t/2), i.e. m successive squarings."""
        for _ in range(self.m):
            x = self.mul(x, x)
        return x

    def sqrt(self, x):
        """The unique square root: x^(2^2m)."""
        for _ in range(2 * self.m):
            x = self.mul(x, x)
        return x

    # -- multiplicative structure -------------------------------------------

    def factor_qm1(self):
        """Factorisation of q - 1 as (prime, multiplicity) pairs, cached."""
        if self._qm1_factors is None:
            self._qm1_factors = factor_with_multiplicity(self.q - 1)
        return self._qm1_factors

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        for p, e in self.factor_qm1():
            for _ in range(e):
                if n % p == 0 and self.pow(a, n // p) == 1:
                    n //= p
        return n

    def primitive_element(self):
        """Smallest (by integer encoding) generator of the multiplicative group."""
        if self._primitive is None:
            primes = [p for p, _ in self.factor_qm1()]
            for w in range(2, self.q):
                if all(self.pow(w, (self.q - 1) // p) != 1 for p in primes):
                    self._primitive = w
                    break
        return self._primitive

    def discrete_log(self, lam, a):
        """k >= 0 with lam^k = a, else NotInSubgroup.  Pohlig-Hellman + BSGS."""
        if lam == 0 or a == 0:
            raise ZeroDivisionError("discrete log of/with 0")
        n = self.element_order(lam)
        if self.pow(a, n) != 1:
            raise NotInSubgroup(f"target not in the subgroup of order {n}")
        residues = []
        moduli = []
        for p, e in factor_with_multiplicity(n) if n > 1 else []:
            pe = p ** e
            # solve in the order-p^e subgroup, digit by digit
            g = self.pow(lam, n // pe)
            h = self.pow(a, n // pe)
            gp = self.pow(g, pe // p)  # order p
            x = 0
            for k in range(e):
                rhs = self.pow(self.mul(h, self.inv(self.pow(g, x))), pe // p ** (k + 1))
                d = self._bsgs(gp, rhs, p)
                x += d * p ** k
            residues.append(x)
            moduli.append(pe)
        k = _crt(residues, moduli) if moduli else 0
        if self.pow(lam, k) != a:
            raise NotInSubgroup("discrete log inconsistency")
        return k

    def _bsgs(self, g, h, p):
        """x < p with g^x = h, where g has order p.  Table capped at 2^22."""
        if p <= 64:
            x = 0
            v = 1
            while v != h:
                v = self.mul(v, g)
                x += 1
                if x >= p:
                    raise NotInSubgroup("BSGS exhausted")
            return x
        mstep = min(int(p ** 0.5) + 1, 1 << 22)
        table = {}
        v = 1
        for j in range(mstep):
            table.setdefault(v, j)
            v = self.mul(v, g)
        giant = self.inv(v)  # g^-mstep
        v = h
        for i in range((p + mstep - 1) // mstep + 1):
            j = table.get(v)
            if j is not None:
                return (i * mstep + j) % p
            v = self.mul(v, giant)
        raise NotInSubgroup("BSGS exhausted")


def _crt(residues, moduli):
    x, mod = 0, 1
    for r, m in zip(residues, moduli):
        g = _gcd(mod, m)
        assert g == 1
        x += mod * ((r - x) * pow(mod, -1, m) % m)
        mod *= m
    return x


def build_field(m, modulus=None):
    """Field for q = 2^(2m+1) with the deterministic modulus choice."""
    F = GF(m, modulus)
    # spot-check the twist identity x^(t^2) = x^2
    rng = random.Random(0x515A)
    for _ in range(8):
        x = rng.randrange(F.q)
        assert F.twist(F.twist(x)) == F.mul(x, x)
    return F


# ---------------------------------------------------------------------------
# Polynomials over GF(q): lists of ints, lowest degree first, trimmed
# ---------------------------------------------------------------------------

def ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def pmul(F, a, b):
    if not a or not b:
        return []
    mul = F.mul
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] ^= mul(ai, bj)
    return ptrim(r)


def prem(F, a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    linv = F.inv(lb)
    mul = F.mul
    while len(a) - 1 >= db and a:
        c = mul(a[-1], linv)
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] ^= mul(c, bi)
        ptrim(a)
    return a


def pmonic(F, a):
    if not a:
        return a
    if a[-1] == 1:
        return list(a)
    linv = F.inv(a[-1])
    return [F.mul(c, linv) for c in a]


def pgcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, prem(F, a, b)
    return pmonic(F, a)


def peval(F, c, x):
    r = 0
    for ci in reversed(c):
        r = F.mul(r, x) ^ ci
    return r


def _psqr_modq(F, a, f):
    return prem(F, pmul(F, a, a), f)


def poly_roots(F, coeffs, rng=None):
    """All roots in GF(q) of a nonzero polynomial of degree <= 4, sorted.

    Splitting is randomized internally (char-2 trace map) but the returned
    set is deterministic.
    """
    c = ptrim(list(coeffs))
    if not c:
        raise ValueError("zero polynomial has every element as a root")
    if len(c) > 5:
        raise ValueError("degree must be <= 4")
    if rng is None:
        rng = random.Random(0xB0075)
    roots = set()
    while c[0] == 0:
        roots.add(0)
        c = c[1:]
    if len(c) > 1:
        f = pmonic(F, c)
        # gcd with x^q - x isolates the distinct roots in GF(q)
        xq = [0, 1]
        for _ in range(F.n):
            xq = _psqr_modq(F, xq, f)
        xq_minus_x = list(xq) + [0] * (2 - len(xq))
        xq_minus_x[1] ^= 1
        g = pgcd(F, f, ptrim(xq_minus_x))
        roots.update(_split_linear(F, g, rng))
    return sorted(roots)


def _split_linear(F, g, rng):
    """Roots of a monic square-free g that splits into linear factors."""
    d = len(g) - 1
    if d <= 0:
        return []
    if d == 1:
        return [g[0]]
    budget = 3 * F.n + 8
    for _ in range(budget):
        delta = rng.randrange(1, F.q)
        # trace map of delta*x modulo g
        u = prem(F, [0, delta], g)
        s = list(u) + [0] * (d - len(u))
        for _ in range(F.n - 1):
            u = _psqr_modq(F, u, g)
            for i, ui in enumerate(u):
                s[i] ^= ui
        h = pgcd(F, g, ptrim(list(s)))
        if 0 < len(h) - 1 < d:
            other = _pquo(F, g, h)
            return _split_linear(F, h, rng) + _split_linear(F, other, rng)
    raise RuntimeError("root splitting budget exhausted")


def _pquo(F, a, b):
    a = list(a)
    db = len(b) - 1
    linv = F.inv(b[-1])
    mul = F.mul
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        c = mul(a[-1], linv)
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] ^= mul(c, bi)
        ptrim(a)
    return ptrim(q)


# ---------------------------------------------------------------------------
# Linear algebra over GF(2); rows are int bitmasks, bit j = column j
# ---------------------------------------------------------------------------

class BinMat:
    """Dense binary matrix with int-bitmask rows."""

    def __init__(self, rows, ncols):
        self.rows = list(rows)
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    def __eq__(self, other):
        return (self.rows, self.ncols) == (other.rows, other.ncols)

    def __repr__(self):
        return f"BinMat({self.rows}, ncols={self.ncols})"


class SingularMatrix(Exception):
    pass


def bin_invert(M):
    """Inverse of a square binary matrix; SingularMatrix if none."""
    n = M.nrows
    if n != M.ncols:
        raise SingularMatrix("not square")
    aug = [M.rows[i] | (1 << (n + i)) for i in range(n)]
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r] >> col & 1), None)
        if piv is None:
            raise SingularMatrix("singular binary matrix")
        aug[row], aug[piv] = aug[piv], aug[row]
        for r in range(n):
            if r != row and aug[r] >> col & 1:
                aug[r] ^= aug[row]
        row += 1
    mask = (1 << n) - 1
    return BinMat([r >> n & mask for r in aug], n)


def bin_solve(M, v):
    """x (bitmask) with M.x = v, for invertible square M."""
    inv = bin_invert(M)
    return bin_matvec(inv, v)


def bin_matvec(M, v):
    """M.x for column vector x given as a bitmask over rows of x."""
    r = 0
    for i, row in enumerate(M.rows):
        if (row & v).bit_count() & 1:
            r |= 1 << i
    return r


def bin_vecmat(v, M):
    """Row vector v (bitmask) times M: xor of the rows selected by v."""
    r = 0
    i = 0
    while v:
        if v & 1:
            r ^= M.rows[i]
        v >>= 1
        i += 1
    return r
