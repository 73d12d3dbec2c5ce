"""Independent ground truth by exhaustive enumeration.

Everything here is deliberately primitive: walk all (q-1)! permutations of the
nonzero field elements (f(0) = 0 held fixed), interpolate each one, and tally
degrees or test linear constraints directly.  The counting module never calls
into this file; agreement between the two is a real check, not a tautology.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor

from .counting import CountTable
from .errors import GuardError, IdentityCheckError, InputError

MAX_ASSIGNMENTS = 40_000_000


def interpolate(ctx, images, *, check=True):
    """Coefficients (a_1..a_{q-2}) and degree of the unique polynomial with
    zero constant term matching images[i] = f(generator**i), 0 <= i <= q-2.

    Works for any value assignment whose images sum to zero, permutation or
    not (every permutation qualifies: the nonzero elements sum to zero).  With
    check=True the polynomial is re-evaluated at every point and must
    reproduce the images exactly, so unrepresentable assignments raise.
    """
    q = ctx.q
    n = q - 1
    if len(images) != n:
        raise InputError(f"need {n} images, got {len(images)}")
    exp2 = list(ctx.exp_table) + list(ctx.exp_table)
    log = ctx.log_table
    add = ctx.add
    coeffs = []
    for t in range(1, n):
        l = n - t
        s = 0
        for i, x in enumerate(images):
            if x:
                s = add(s, exp2[log[x] + (i * l) % n])
        coeffs.append(ctx.neg(s))
    degree = 0
    for t in range(n - 1, 0, -1):
        if coeffs[t - 1]:
            degree = t
            break
    if check:
        for i, want in enumerate(images):
            x = ctx.exp_table[i]
            acc = 0  # Horner with the implicit zero constant term
            for t in range(n - 1, 0, -1):
                acc = add(ctx.mul(acc, x), coeffs[t - 1])
            acc = ctx.mul(acc, x)
            if acc != want:
                raise IdentityCheckError(
                    f"interpolation self-check failed at point {x}: "
                    f"{acc} != {want}"
                )
    return tuple(coeffs), degree


def _scan_degree(images, n, exp2, log, add):
    """Highest t with a_t != 0, probing coefficients top-down; images must be
    all nonzero (a permutation of the nonzero codes)."""
    for t in range(n - 1, 0, -1):
        l = n - t
        s = 0
        for i in range(n):
            s = add(s, exp2[log[images[i]] + (i * l) % n])
        if s:
            return t
    raise AssertionError("a nonzero assignment interpolated to zero")


def _degree_histogram_shard(ctx, first, rest, check_every):
    q = ctx.q
    n = q - 1
    exp2 = list(ctx.exp_table) + list(ctx.exp_table)
    log = ctx.log_table
    add = ctx.add
    hist = [0] * n
    count = 0
    for tail in itertools.permutations(rest):
        images = (first,) + tail
        d = _scan_degree(images, n, exp2, log, add)
        hist[d] += 1
        count += 1
        if check_every and count % check_every == 0:
            _, full_degree = interpolate(ctx, images, check=True)
            if full_degree != d:
                raise IdentityCheckError(
                    f"degree scan disagrees with full interpolation on {images}"
                )
    return hist


def brute_force_table(ctx, *, cap=MAX_ASSIGNMENTS, workers=1, check_fraction=0.01):
    """CountTable built by enumerating every permutation of the nonzero
    elements in lexicographic order and interpolating each one.

    A sampled fraction of assignments gets the full interpolation self-check
    on top of the fast degree scan.  The first image position shards across
    workers; shard merging is order-independent (sums).
    """
    q = ctx.q
    if q < 3:
        raise InputError("counting needs q >= 3")
    total = math.factorial(q - 1)
    if total > cap:
        raise GuardError("oracle-assignments", cap, total)
    codes = list(range(1, q))
    check_every = round(1 / check_fraction) if check_fraction else 0
    shards = [
        (ctx, first, [c for c in codes if c != first], check_every)
        for first in codes
    ]
    if workers <= 1:
        hists = [_degree_histogram_shard(*s) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(shards))) as pool:
            hists = list(pool.map(_shard_entry, shards))
    merged = [sum(h[d] for h in hists) for d in range(q - 1)]
    if merged[0] or sum(merged) != total:
        raise AssertionError("oracle histogram lost assignments")
    entries = {d: merged[d] for d in range(1, q - 1)}
    return CountTable(q=q, entries=entries).validate()


def _shard_entry(args):
    return _degree_histogram_shard(*args)


def count_restricted_solutions(ctx, levels, *, cap=MAX_ASSIGNMENTS):
    """Number of permutations (x_1..x_{q-1}) of the nonzero elements, x_i
    assigned to the point generator**(i-1), satisfying
    sum_i generator**((i-1)*l) * x_i = 0 for every l in levels."""
    q = ctx.q
    if q < 3:
        raise InputError("counting needs q >= 3")
    levels = sorted(set(levels))
    if not levels or levels[0] < 1 or levels[-1] > q - 1:
        raise InputError(f"levels must be a nonempty subset of [1, {q - 1}]")
    total = math.factorial(q - 1)
    if total > cap:
        raise GuardError("oracle-assignments", cap, total)
    n = q - 1
    exp2 = list(ctx.exp_table) + list(ctx.exp_table)
    log = ctx.log_table
    add = ctx.add
    lmul = [[(i * l) % n for i in range(n)] for l in levels]
    hits = 0
    for perm in itertools.permutations(range(1, q)):
        ok = True
        for row in lmul:
            s = 0
            for i in range(n):
                s = add(s, exp2[log[perm[i]] + row[i]])
            if s:
                ok = False
                break
        if ok:
            hits += 1
    return hits
