"""Membership testing and rewriting as straight-line programs.

After one recognition, membership of any matrix is decided exactly (no
randomness), and members are rewritten as short words in the ORIGINAL
generators, verified by evaluation.
"""

import random

from szq import (GroupHandle, build_field, conj, conjugator, eval_matrices,
                 express, is_member, length, precompute_tables,
                 random_sigma_element, serialize, standard_generators)
from szq.mat4 import mat_inv, random_invertible

F = build_field(1)  # q = 8
rng = random.Random(7)
secret = random_invertible(F, rng)
gens = [conj(F, x, secret) for x in standard_generators(F)]

out = conjugator(GroupHandle(gens, F, seed=0))
tables = precompute_tables(out)
print("recognized; rewriting tables built (two GF(2) matrix inversions)")

member = conj(F, random_sigma_element(F, rng), mat_inv(F, out.g))
print(f"\nrandom member: is_member = {is_member(tables, member)}")
slp = express(tables, member)
print(f"SLP length {length(slp)}; evaluates back to the element: "
      f"{eval_matrices(slp, gens, F) == member}")
print("serialized SLP (first 6 lines):")
print("\n".join(serialize(slp).splitlines()[:6]))

outsider = random_invertible(F, rng)
print(f"\nrandom GL(4,8) matrix: is_member = {is_member(tables, outsider)}, "
      f"express = {express(tables, outsider)}")
