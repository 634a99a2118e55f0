"""Census of small-order elements across torus cosets at q = 8.

Each coset of the cyclic torus gets a vector (v1, v2, v4) counting its
elements of order 1, 2 and 4; only a handful of vectors occur, with
closed-form frequencies that the exhaustive scan reproduces exactly.
"""

import time
from fractions import Fraction

from szq import (build_field, census_matches_conjecture,
                 small_order_proportion)

F = build_field(1)
t0 = time.perf_counter()
observed, conjectured, match = census_matches_conjecture(F)
print(f"scanned {sum(observed.values())} cosets in "
      f"{time.perf_counter() - t0:.2f}s\n")

print(f"{'(v1, v2, v4)':>14} {'observed':>9} {'closed form':>12}")
for key in sorted(observed):
    print(f"{str(key):>14} {observed[key]:>9} {conjectured.get(key, 0):>12}")
print(f"\nexact match: {match}")

with_order4 = sum(v for k, v in observed.items() if k[2] >= 1)
num, den = small_order_proportion(F.q)
print(f"cosets holding an order-4 element: {with_order4}/{sum(observed.values())}"
      f" = {Fraction(with_order4, sum(observed.values()))}"
      f" (formula: {Fraction(num, den)})")
