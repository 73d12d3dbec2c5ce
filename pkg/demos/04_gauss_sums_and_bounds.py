"""
Gauss sums and the proved enclosure of the top-degree count
===========================================================

The character sums lambda_j attached to F_q satisfy two closed forms:
lambda_0 = -1 exactly, and |lambda_j|^2 = q for every other j.  They are
evaluated here with 96-bit complex arithmetic and checked to 1e-9.  The
same machinery proves N_q(q-2) lives inside an explicit interval around
(1 - 1/q) * (q-1)!.
"""

from fractions import Fraction

from permcount import bound_interval, build_field, count_top_degree, gauss_sums

for p, r in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
    ctx = build_field(p, r)
    q = ctx.q
    rep = gauss_sums(ctx)
    worst = rep.max_rel_err
    print(f"q={q:2d}: lambda_0 = -1 {'ok' if rep.lambda0_ok else 'FAIL'}, "
          f"|lambda_j|^2 = q within {worst:.2e} "
          f"{'ok' if rep.modulus_ok else 'FAIL'}")

print()

# The interval is exact rational arithmetic: for odd non-square q the
# irrational sqrt(q) is replaced by a 30-digit outward enclosure.
for q, builder in [(4, (2, 2)), (5, (5, 1)), (7, (7, 1)), (8, (2, 3)), (9, (3, 2))]:
    lo, hi = bound_interval(q)
    n = count_top_degree(build_field(*builder)).n_value
    inside = lo <= n <= hi
    width = Fraction(hi - lo)
    print(f"q={q}: N = {n:6d} in [{float(lo):10.2f}, {float(hi):10.2f}] "
          f"(width {float(width):10.2f})  {'ok' if inside else 'FAIL'}")

# The margin grows like q^(q/2)/(q-1), so the enclosure is asymptotically
# loose but already pins the leading behaviour (1 - 1/q) * (q-1)!.
