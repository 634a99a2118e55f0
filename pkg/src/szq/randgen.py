"""Random elements of a matrix group, with straight-line programs attached.

Product replacement with an accumulator: a list of slots is stirred by
multiplying random slots together, and every draw multiplies the
accumulator by a random slot and returns a snapshot.  Each matrix travels
with an SLP in the input generators, so any element drawn here can later
be rewritten through those SLPs.

The RNG is Python's Mersenne Twister seeded explicitly; the identifier
recorded in output metadata is "mt19937".
"""

import random

from .mat4 import IDENT, det, mat_inv, mat_mul
from .slp import Slp

RNG_ID = "mt19937"
DEFAULT_BURNIN = 100


class PrOracle:
    """Single-owner mutable product-replacement state.

    Not thread-safe; run independent oracles (distinct seeds) in parallel
    instead.
    """

    def __init__(self, gens, F, seed, n_slots=None, burnin=DEFAULT_BURNIN):
        if not gens:
            raise ValueError("need at least one generator")
        for g in gens:
            if det(F, g) == 0:
                raise ValueError("generators must be invertible")
        self.F = F
        self.rng = random.Random(seed)
        if n_slots is None:
            n_slots = max(10, len(gens) + 5)
        self.slots = [(gens[i % len(gens)], Slp.gen(i % len(gens)))
                      for i in range(n_slots)]
        self.acc = (IDENT, Slp.one())
        for _ in range(burnin):
            self._step()

    def _step(self):
        F, rng, slots = self.F, self.rng, self.slots
        i = rng.randrange(len(slots))
        j = rng.randrange(len(slots) - 1)
        if j >= i:
            j += 1
        mj, sj = slots[j]
        if rng.getrandbits(1):
            mj, sj = mat_inv(F, mj), sj.inv()
        mi, si = slots[i]
        if rng.getrandbits(1):
            slots[i] = (mat_mul(F, mi, mj), si * sj)
        else:
            slots[i] = (mat_mul(F, mj, mi), sj * si)
        k = rng.randrange(len(slots))
        am, asl = self.acc
        self.acc = (mat_mul(F, am, slots[k][0]), asl * slots[k][1])

    def next(self):
        """One stir step; returns (matrix, slp) for a fresh random element."""
        self._step()
        return self.acc


def pr_init(gens, F, seed, **kw):
    return PrOracle(gens, F, seed, **kw)


def pr_next(oracle):
    return oracle.next()
