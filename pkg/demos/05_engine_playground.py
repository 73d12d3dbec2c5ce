"""
The permanent engine on its own
===============================

Everything below is independent of the counting application: permanents of
integer and group-ring matrices, Gray-code Ryser vs naive expansion,
deterministic parallelism, and the meet-in-the-middle constant-term
extraction that makes the degree recursion affordable.
"""

import random
import time

from permcount import (
    GroupRing,
    build_field,
    monomial_matrix,
    permanent_naive,
    permanent_ryser,
    ryser_constant_term,
    set_partitions,
)

rng = random.Random(42)

# Integer matrices: Ryser's O(2^n n) inclusion-exclusion equals the O(n!)
# expansion, here on a random 7x7.
rows = [[rng.randint(-9, 9) for _ in range(7)] for _ in range(7)]
v1, v2 = permanent_naive(rows), permanent_ryser(rows)
print(f"7x7 integer permanent: naive {v1}, ryser {v2}")

# Parallel Ryser splits the Gray-code walk into contiguous ranges with one
# exact partial sum per worker, so any worker count gives identical bits.
big = [[rng.randint(-9, 9) for _ in range(10)] for _ in range(10)]
t0 = time.perf_counter()
seq = permanent_ryser(big, threads=1)
t1 = time.perf_counter()
par = permanent_ryser(big, threads=4)
t2 = time.perf_counter()
print(f"10x10: sequential {seq} ({1e3 * (t1 - t0):.1f} ms), "
      f"4 workers {par} ({1e3 * (t2 - t1):.1f} ms), equal: {seq == par}")

# Group-ring entries work the same way; the permanent is itself an element.
ring = GroupRing(build_field(2, 3))
per = permanent_ryser(monomial_matrix(ring.ctx))
print(f"\nF_8 monomial-matrix permanent has support {per.support_size()}, "
      f"total mass {per.total_mass()} = 7!")

# When only the constant coefficient matters, ryser_constant_term joins two
# half-products on opposite keys instead of building the full product.
arity3 = monomial_matrix(ring.ctx, 3)
t0 = time.perf_counter()
direct = permanent_ryser(arity3).constant_term()
t1 = time.perf_counter()
quick = ryser_constant_term(arity3)
t2 = time.perf_counter()
print(f"\nF_8 arity-3 constant term: full product {direct} "
      f"({1e3 * (t1 - t0):.1f} ms), meet-in-the-middle {quick} "
      f"({1e3 * (t2 - t1):.1f} ms)")

# Set partitions in restricted-growth order power the partition route.
print("\npartitions of {1,2,3}:")
for blocks in set_partitions(3):
    print(f"  {blocks}")
