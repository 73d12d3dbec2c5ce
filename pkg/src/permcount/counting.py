"""Exact counts of permutation polynomials of F_q by interpolation degree.

Conventions: counts are over permutations of the nonzero elements extended by
f(0) = 0, classified by the degree d of the unique interpolating polynomial
with zero constant term, 1 <= d <= q-2.  Multiplying an entry by q gives the
count without the f(0) = 0 normalisation (every coset f(x) + c taken once).

The top degree d = q-2 comes from the permanent of a circulant matrix of
group-ring monomials; three independent routes are implemented (group-ring
coefficients, the cyclotomic image, and a set-partition expansion of the
latter) and must agree exactly.  Lower degrees come from a descending
recursion whose correction term is the constant coefficient of an arity-m
monomial-matrix permanent.  Everything is integer arithmetic end to end;
floating point appears only in the Gauss-sum diagnostics.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import GuardError, IdentityCheckError, InputError
from .groupring import CycloElem, GroupRing, eval_trace_character
from .permanent import (
    MAX_BELL,
    MAX_RYSER,
    character_permanent_by_partitions,
    permanent_ryser,
    ryser_constant_term,
)

GAUSS_TOLERANCE = 1e-9


@dataclass
class CountTable:
    """Counts by degree: entries[d] = number of permutations with
    interpolation degree exactly d, for 1 <= d <= q-2."""

    q: int
    entries: dict

    @property
    def total(self):
        return math.factorial(self.q - 1)

    @property
    def lidl_mullen(self):
        """Counts in the unnormalised convention (no f(0) = 0)."""
        return {d: self.q * n for d, n in self.entries.items()}

    def checks(self):
        """Structural identities as {name: bool}; all must hold."""
        q = self.q
        degrees = set(range(1, q - 1))
        out = {}
        out["degree-range"] = set(self.entries) == degrees
        out["nonnegative"] = all(n >= 0 for n in self.entries.values())
        out["sum-rule"] = sum(self.entries.values()) == self.total
        out["degree-one"] = self.entries.get(1) == q - 1
        out["divisor-rule"] = all(
            n == 0
            for d, n in self.entries.items()
            if d > 1 and (q - 1) % d == 0
        )
        return out

    def validate(self):
        failed = [name for name, ok in self.checks().items() if not ok]
        if failed:
            raise IdentityCheckError(
                f"count table for q={self.q} violates: {', '.join(failed)}"
            )
        return self

    def rows(self):
        """Ascending (d, count, unnormalised count) triples."""
        lm = self.lidl_mullen
        return [(d, self.entries[d], lm[d]) for d in sorted(self.entries)]


@dataclass
class PermanentReport:
    """Result of one top-degree counting route, plus shared identity checks."""

    q: int
    d: int
    route: str
    n_value: int
    coeff_constant: int | None = None
    coeff_unit: int | None = None
    coeffs: tuple | None = None
    per_v: int | None = None
    identity_eq3_ok: bool | None = None
    identity_eq4_ok: bool | None = None
    bound_lo: Fraction | None = None
    bound_hi: Fraction | None = None
    bound_ok: bool | None = None
    millis: float | None = None


@dataclass
class GaussSumReport:
    """Character-sum diagnostics: values lambda_0..lambda_{q-2} and their
    squared moduli, with the two closed-form checks at GAUSS_TOLERANCE."""

    q: int
    values: tuple
    mod_squares: tuple
    lambda0_ok: bool
    modulus_ok: bool
    max_rel_err: float


def _require_counting_field(ctx):
    if ctx.q < 3:
        raise InputError("counting needs q >= 3 (degrees live in [1, q-2])")


def monomial_matrix(ctx, arity=1):
    """The (q-1) x (q-1) matrix of arity-m monomials whose permanent encodes
    the counting problem: with rows i counted from 0 and columns j from 1,
    component l of entry (i, j) is generator**(i*l + j)."""
    _require_counting_field(ctx)
    ring = GroupRing(ctx, arity)
    n = ctx.q - 1
    rows = []
    for i in range(n):
        row = []
        for j in range(1, n + 1):
            alpha = tuple(
                ctx.generator_pow(i * l + j) for l in range(1, arity + 1)
            )
            row.append(ring.monomial(alpha))
        rows.append(row)
    return rows


def character_matrix(ctx):
    """Entrywise trace-character image of the arity-1 monomial matrix; entries
    are powers of x in Z[x]/(x^p - 1)."""
    return [[eval_trace_character(e) for e in row] for row in monomial_matrix(ctx)]


def _with_bound(report):
    lo, hi, ok = check_bound(report.q, report.n_value)
    report.bound_lo, report.bound_hi, report.bound_ok = lo, hi, ok
    if not ok:
        raise IdentityCheckError(
            f"count {report.n_value} for q={report.q} escapes the proved "
            f"interval [{lo}, {hi}]"
        )
    return report


def count_top_degree(ctx, *, threads=1, max_ryser=MAX_RYSER):
    """N_q(q-2) from the group-ring permanent decomposition."""
    _require_counting_field(ctx)
    q = ctx.q
    t0 = time.perf_counter()
    per = permanent_ryser(monomial_matrix(ctx), threads=threads, max_n=max_ryser)
    c_const = per.constant_term()
    coeffs = tuple(per.coefficient(ctx.generator_pow(i)) for i in range(q - 1))
    flat = set(coeffs)
    if len(flat) != 1:
        raise IdentityCheckError(
            f"nonconstant coefficients are not flat for q={q}: {coeffs}"
        )
    c_unit = coeffs[0]
    fact = math.factorial(q - 1)
    if c_const + (q - 1) * c_unit != fact:
        raise IdentityCheckError(
            f"mass identity failed for q={q}: {c_const} + {q - 1}*{c_unit} != {fact}"
        )
    report = PermanentReport(
        q=q,
        d=q - 2,
        route="groupring",
        n_value=fact - c_const,
        coeff_constant=c_const,
        coeff_unit=c_unit,
        coeffs=coeffs,
        identity_eq3_ok=True,
        millis=(time.perf_counter() - t0) * 1000.0,
    )
    return _with_bound(report)


def _count_from_character_permanent(q, per_v):
    fact = math.factorial(q - 1)
    num = (q - 1) * (fact - per_v)
    if num % q != 0:
        raise IdentityCheckError(
            f"(q-1)*((q-1)! - per_v) = {num} is not divisible by q={q}"
        )
    return num // q


def check_identity_eq4(q, p, r, coeff_constant, coeff_unit, per_v):
    """Exact relation tying the character permanent to the group-ring
    decomposition: (q-1)! + (p-1)*per_v = p*(c_const + c_unit*(p^(r-1) - 1))."""
    lhs = math.factorial(q - 1) + (p - 1) * per_v
    rhs = p * (coeff_constant + coeff_unit * (p ** (r - 1) - 1))
    return lhs == rhs


def count_top_degree_cyclotomic(ctx, *, threads=1, max_ryser=MAX_RYSER, groupring_report=None):
    """N_q(q-2) from the permanent of the character matrix."""
    _require_counting_field(ctx)
    q = ctx.q
    t0 = time.perf_counter()
    per = permanent_ryser(character_matrix(ctx), threads=threads, max_n=max_ryser)
    per_v = per.as_integer()
    n_value = _count_from_character_permanent(q, per_v)
    report = PermanentReport(
        q=q,
        d=q - 2,
        route="cyclotomic",
        n_value=n_value,
        per_v=per_v,
        millis=(time.perf_counter() - t0) * 1000.0,
    )
    if groupring_report is not None:
        ok = check_identity_eq4(
            q,
            ctx.p,
            ctx.r,
            groupring_report.coeff_constant,
            groupring_report.coeff_unit,
            per_v,
        )
        if not ok:
            raise IdentityCheckError(f"subfield mass identity failed for q={q}")
        report.identity_eq4_ok = True
    return _with_bound(report)


def count_top_degree_partitions(ctx, *, threads=1, max_ryser=MAX_RYSER, max_bell=MAX_BELL):
    """N_q(q-2) from the set-partition expansion of the character permanent,
    cross-checked against the direct cyclotomic value."""
    _require_counting_field(ctx)
    q = ctx.q
    t0 = time.perf_counter()
    direct = permanent_ryser(
        character_matrix(ctx), threads=threads, max_n=max_ryser
    ).as_integer()
    per_v = character_permanent_by_partitions(
        ctx, max_n=max_bell, check_against=direct
    )
    report = PermanentReport(
        q=q,
        d=q - 2,
        route="partition",
        n_value=_count_from_character_permanent(q, per_v),
        per_v=per_v,
        millis=(time.perf_counter() - t0) * 1000.0,
    )
    return _with_bound(report)


def count_all_routes(ctx, *, threads=1, max_ryser=MAX_RYSER, max_bell=MAX_BELL):
    """Run every top-degree route that fits its guards, demand exact agreement,
    and return {route: PermanentReport}."""
    reports = {}
    gr = count_top_degree(ctx, threads=threads, max_ryser=max_ryser)
    reports["groupring"] = gr
    cy = count_top_degree_cyclotomic(
        ctx, threads=threads, max_ryser=max_ryser, groupring_report=gr
    )
    reports["cyclotomic"] = cy
    if ctx.q - 1 <= max_bell:
        pa = count_top_degree_partitions(
            ctx, threads=threads, max_ryser=max_ryser, max_bell=max_bell
        )
        reports["partition"] = pa
    values = {name: rep.n_value for name, rep in reports.items()}
    if len(set(values.values())) != 1:
        raise IdentityCheckError(f"routes disagree for q={ctx.q}: {values}")
    return reports


def count_degree_below(ctx, d, *, threads=1, max_ryser=MAX_RYSER):
    """Number of permutations whose interpolation degree is strictly below d,
    as the constant coefficient of the arity-(q-1-d) monomial-matrix
    permanent."""
    _require_counting_field(ctx)
    q = ctx.q
    if not 1 <= d <= q - 2:
        raise InputError(f"degree must satisfy 1 <= d <= {q - 2}, got {d}")
    arity = q - 1 - d
    return ryser_constant_term(
        monomial_matrix(ctx, arity), threads=threads, max_n=max_ryser
    )


def full_count_table(ctx, *, threads=1, max_ryser=MAX_RYSER):
    """CountTable for every degree, built top-down: the top entry from the
    group-ring permanent, each lower entry from the strictly-below correction.
    Structural identities are validated before returning."""
    _require_counting_field(ctx)
    q = ctx.q
    fact = math.factorial(q - 1)
    top = count_top_degree(ctx, threads=threads, max_ryser=max_ryser)
    entries = {q - 2: top.n_value}
    above = top.n_value
    for d in range(q - 3, 0, -1):
        below = count_degree_below(ctx, d, threads=threads, max_ryser=max_ryser)
        entries[d] = fact - above - below
        above += entries[d]
    return CountTable(q=q, entries=entries).validate()


def gauss_sums(ctx, *, prec_bits=96, tolerance=GAUSS_TOLERANCE):
    """Character sums lambda_j over the nonzero elements, j = 0..q-2, in
    high-precision complex arithmetic.

    lambda_0 must equal -1 exactly and every other squared modulus must equal
    q; deviations beyond the tolerance flip the report's check booleans."""
    q, p = ctx.q, ctx.p
    n = q - 1
    with mpmath.workprec(prec_bits):
        root_p = [mpmath.expjpi(mpmath.mpf(2 * t) / p) for t in range(p)]
        root_n = [mpmath.expjpi(mpmath.mpf(2 * s) / n) for s in range(n)]
        traces = [ctx.trace_table[ctx.exp_table[k]] for k in range(n)]
        values = []
        mod_squares = []
        for j in range(n):
            acc = mpmath.mpc(0)
            for k in range(n):
                acc += root_p[traces[k]] * root_n[(k * j) % n]
            values.append(acc)
            mod_squares.append(acc.real**2 + acc.imag**2)
        lambda0_err = abs(values[0] + 1)
        rel_errs = [abs(m / q - 1) for m in mod_squares[1:]]
        max_rel = max(rel_errs) if rel_errs else mpmath.mpf(0)
    return GaussSumReport(
        q=q,
        values=tuple(values),
        mod_squares=tuple(mod_squares),
        lambda0_ok=float(lambda0_err) <= tolerance,
        modulus_ok=float(max_rel) <= tolerance,
        max_rel_err=float(max_rel),
    )


def bound_interval(q):
    """Exact rational interval proved to contain the top-degree count:
    (1 - 1/q) * ((q-1)! -/+ q^(q/2)/(q-1)).  When q^(q/2) is irrational the
    endpoints are widened outward by a rational enclosure of sqrt(q)."""
    fact = math.factorial(q - 1)
    if q % 2 == 0:
        half_power = Fraction(q ** (q // 2))
    else:
        s = math.isqrt(q)
        if s * s == q:
            half_power = Fraction(s**q)
        else:
            scale = 10**30
            u = math.isqrt(q * scale * scale)  # u <= sqrt(q)*scale < u+1
            half_power = Fraction(q ** ((q - 1) // 2)) * Fraction(u + 1, scale)
    margin = half_power / (q - 1)
    factor = Fraction(q - 1, q)
    return factor * (fact - margin), factor * (fact + margin)


def check_bound(q, n_value):
    """(lo, hi, lo <= n_value <= hi) with exact rational endpoints."""
    lo, hi = bound_interval(q)
    return lo, hi, lo <= n_value <= hi
