"""Recognize a hidden conjugate of the standard Suzuki copy.

We conjugate the standard generators of Sz(32) by a secret random matrix,
hand only the conjugated generators to the recognizer, and watch it recover
a conjugating matrix of its own (not necessarily the secret one: any g with
<X>^g equal to the standard copy is a correct answer).
"""

import random
import time

from szq import (GroupHandle, build_field, conj, conjugator,
                 sigma_membership, standard_generators, verify_recognition)
from szq.mat4 import random_invertible

F = build_field(2)  # q = 32
print(f"field: {F}")

rng = random.Random(2024)
secret = random_invertible(F, rng)
gens = [conj(F, x, secret) for x in standard_generators(F)]
print("handed over 3 conjugated generators; the secret matrix stays hidden")

t0 = time.perf_counter()
out = conjugator(GroupHandle(gens, F, seed=1))
elapsed = time.perf_counter() - t0

print(f"recognition took {elapsed * 1e3:.1f} ms, "
      f"{out.stats.draws} random draws, {out.stats.dlog_calls} discrete log(s)")
print(f"conjugating matrix (row-major, hex): "
      f"{' '.join(f'{x:x}' for x in out.g)}")
print(f"verified: {verify_recognition(F, gens, out)}")
print(f"every generator standardises: "
      f"{all(sigma_membership(F, conj(F, x, out.g)) for x in gens)}")
print(f"same as the secret? {out.g == secret}  (any valid conjugator is fine)")
