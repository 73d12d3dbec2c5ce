"""Matrix permanents over arbitrary commutative rings, plus set-partition
machinery for the character-matrix permanent.

Two general routes are provided: direct expansion over all n! permutations
(permanent_naive) and Ryser's inclusion-exclusion with binary-reflected
Gray-code updates (permanent_ryser).  Entries may be ints, GroupRingElem,
CycloElem, or anything composable with +, -, *, and unary -.

A third, specialised route (ryser_constant_term) extracts only the constant
coefficient of the permanent of a group-ring matrix.  It runs Ryser on raw
coefficient dicts and joins two half-products on opposite exponent keys, which
keeps intermediate supports near the square root of what the full product
would touch; the result is exactly constant_term(permanent_ryser(rows)).

All routes accept a worker count.  Work splits into contiguous Gray-code
index ranges, one exact partial accumulator per worker, combined in ascending
range order, so results are identical for every worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor

from .errors import GuardError, InputError

MAX_NAIVE = 9
MAX_RYSER = 24
MAX_BELL = 12


def _square_size(rows):
    n = len(rows)
    if n == 0:
        raise InputError("empty matrix has no permanent here")
    if any(len(row) != n for row in rows):
        raise InputError("matrix must be square")
    return n


def permanent_naive(rows, *, max_n=MAX_NAIVE):
    """Permanent by direct expansion, permutations in lexicographic order."""
    import itertools

    n = _square_size(rows)
    if n > max_n:
        raise GuardError("naive-permanent", max_n, n)
    acc = None
    for perm in itertools.permutations(range(n)):
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        acc = prod if acc is None else acc + prod
    return acc


def _ryser_chunk(payload):
    """Signed Ryser partial sum over Gray-code indices [start, stop)."""
    rows, start, stop = payload
    n = len(rows)
    subset = start ^ (start >> 1)
    rowsums = []
    for row in rows:
        s = None
        for j in range(n):
            if subset >> j & 1:
                s = row[j] if s is None else s + row[j]
        rowsums.append(s)
    acc = None
    cur = subset
    for t in range(start, stop):
        if t != start:
            nxt = t ^ (t >> 1)
            j = (nxt ^ cur).bit_length() - 1
            if nxt >> j & 1:
                for i in range(n):
                    rowsums[i] = rowsums[i] + rows[i][j]
            else:
                for i in range(n):
                    rowsums[i] = rowsums[i] - rows[i][j]
            cur = nxt
        prod = rowsums[0]
        for i in range(1, n):
            prod = prod * rowsums[i]
        if cur.bit_count() & 1:
            prod = -prod
        acc = prod if acc is None else acc + prod
    return acc


def _split_ranges(start, stop, k):
    total = stop - start
    k = max(1, min(k, total))
    bounds = [start + (total * i) // k for i in range(k + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def permanent_ryser(rows, *, threads=1, max_n=MAX_RYSER):
    """Permanent via Ryser's formula; exact over any commutative ring."""
    n = _square_size(rows)
    if n > max_n:
        raise GuardError("ryser-permanent", max_n, n)
    ranges = _split_ranges(1, 1 << n, threads)
    if len(ranges) == 1:
        acc = _ryser_chunk((rows, 1, 1 << n))
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(_ryser_chunk, [(rows, a, b) for a, b in ranges]))
        acc = parts[0]
        for part in parts[1:]:
            acc = acc + part
    return acc if n % 2 == 0 else -acc


# -- constant-term Ryser for group-ring matrices -------------------------------


def _key_funcs(params):
    """Rebuild key add/neg closures from plain data (pickle-friendly)."""
    if params is None:
        return (lambda a, b: a ^ b), None
    p, top, bias, pmask, shift = params

    def add(k1, k2):
        s = k1 + k2
        return s - (((s + bias) & top) >> shift) * p

    def neg(k):
        s = pmask - k
        return s - (((s + bias) & top) >> shift) * p

    return add, neg


def _dict_update(target, entry, sign):
    for k, c in entry.items():
        v = target.get(k, 0) + sign * c
        if v:
            target[k] = v
        else:
            del target[k]


def _dict_product(dicts, key_add):
    if not dicts:
        return {0: 1}
    acc = dicts[0]
    copied = False
    for other in dicts[1:]:
        a, b = acc, other
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = key_add(ka, kb)
                out[k] = get(k, 0) + ca * cb
        acc = out
        copied = True
    return acc if copied else dict(acc)


def _ryser_const_chunk(payload):
    raw, params, start, stop = payload
    key_add, key_neg = _key_funcs(params)
    n = len(raw)
    half = n // 2
    subset = start ^ (start >> 1)
    rowsums = []
    for row in raw:
        s = {}
        for j in range(n):
            if subset >> j & 1:
                _dict_update(s, row[j], 1)
        rowsums.append(s)
    acc = 0
    cur = subset
    for t in range(start, stop):
        if t != start:
            nxt = t ^ (t >> 1)
            j = (nxt ^ cur).bit_length() - 1
            sign = 1 if nxt >> j & 1 else -1
            for i in range(n):
                _dict_update(rowsums[i], raw[i][j], sign)
            cur = nxt
        lo = _dict_product(rowsums[:half], key_add)
        hi = _dict_product(rowsums[half:], key_add)
        if len(hi) < len(lo):
            lo, hi = hi, lo
        if key_neg is None:
            joined = sum(c * hi[k] for k, c in lo.items() if k in hi)
        else:
            joined = sum(c * hi.get(key_neg(k), 0) for k, c in lo.items())
        acc += -joined if cur.bit_count() & 1 else joined
    return acc


def ryser_constant_term(rows, *, threads=1, max_n=MAX_RYSER):
    """constant_term(permanent(rows)) for a square GroupRingElem matrix,
    without materialising the full permanent."""
    n = _square_size(rows)
    if n > max_n:
        raise GuardError("ryser-permanent", max_n, n)
    ring = rows[0][0].ring
    for row in rows:
        for e in row:
            if e.ring != ring:
                raise InputError("matrix entries live in different group rings")
    raw = [[e.terms for e in row] for row in rows]
    params = ring._key_params()
    ranges = _split_ranges(1, 1 << n, threads)
    if len(ranges) == 1:
        acc = _ryser_const_chunk((raw, params, 1, 1 << n))
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            acc = sum(
                pool.map(
                    _ryser_const_chunk, [(raw, params, a, b) for a, b in ranges]
                )
            )
    return acc if n % 2 == 0 else -acc


# -- set partitions and the partition form of the character permanent ----------


def set_partitions(n, *, max_n=MAX_BELL):
    """All set partitions of {1..n} as tuples of blocks (tuples of indices),
    in lexicographic order of their restricted-growth strings."""
    if n < 1:
        raise InputError("set_partitions needs n >= 1")
    if n > max_n:
        raise GuardError("bell-partitions", max_n, n)
    a = [0] * n

    def rec(i, width):
        if i == n:
            blocks = [[] for _ in range(width)]
            for idx, b in enumerate(a):
                blocks[b].append(idx + 1)
            yield tuple(tuple(b) for b in blocks)
            return
        for v in range(width + 1):
            a[i] = v
            yield from rec(i + 1, width + (v == width))

    return rec(0, 0)


def character_permanent_by_partitions(ctx, *, max_n=MAX_BELL, check_against=None):
    """Permanent of the (q-1) x (q-1) character matrix, evaluated through the
    factorial-weighted sum over set partitions of the row indices.

    Each block contributes q-1 when its generator powers sum to zero in the
    field and -1 otherwise, scaled by (size-1)! with a parity sign on the
    block count.  If check_against is given (the permanent computed directly),
    a mismatch raises instead of being papered over.
    """
    q = ctx.q
    n = q - 1
    if n < 1:
        raise InputError("field must have a nontrivial multiplicative group")
    if n > max_n:
        raise GuardError("bell-partitions", max_n, n)
    pw = [None] + [ctx.generator_pow(i) for i in range(1, n + 1)]
    fact = [math.factorial(k) for k in range(n + 1)]
    add = ctx.add
    sizes = []
    sums = []
    total = 0

    def rec(i):
        nonlocal total
        if i > n:
            t = len(sizes)
            term = 1
            for b in range(t):
                term *= fact[sizes[b] - 1]
                term *= (q - 1) if sums[b] == 0 else -1
            if (n - t) & 1:
                term = -term
            total += term
            return
        g = pw[i]
        for b in range(len(sizes)):
            old = sums[b]
            sizes[b] += 1
            sums[b] = add(old, g)
            rec(i + 1)
            sizes[b] -= 1
            sums[b] = old
        sizes.append(1)
        sums.append(g)
        rec(i + 1)
        sizes.pop()
        sums.pop()

    rec(1)
    if check_against is not None and check_against != total:
        from .errors import IdentityCheckError

        raise IdentityCheckError(
            f"partition formula gives {total}, direct permanent gives "
            f"{check_against} (q={q})"
        )
    return total
