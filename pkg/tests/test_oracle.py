import math
import random
from functools import reduce

import pytest

from permcount import (
    GuardError,
    IdentityCheckError,
    InputError,
    brute_force_table,
    build_field,
    count_degree_below,
    count_restricted_solutions,
    full_count_table,
    interpolate,
)

ORACLE_FIELDS = [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def evaluate(ctx, coeffs, x):
    acc = 0
    for t in range(len(coeffs), 0, -1):
        acc = ctx.add(ctx.mul(acc, x), coeffs[t - 1])
    return ctx.mul(acc, x)


@pytest.mark.parametrize("p,r", ORACLE_FIELDS)
def test_interpolate_recovers_monomials(p, r):
    ctx = build_field(p, r)
    q = ctx.q
    for e in range(1, q - 1):
        images = [ctx.generator_pow(i * e) for i in range(q - 1)]
        coeffs, degree = interpolate(ctx, images)
        assert degree == e
        want = tuple(1 if t == e else 0 for t in range(1, q - 1))
        assert coeffs == want


def test_interpolate_known_polynomial():
    ctx = build_field(7)
    # f(x) = 3x^2 + x, evaluated at 3^0..3^5
    images = [(3 * x * x + x) % 7 for x in (1, 3, 2, 6, 4, 5)]
    coeffs, degree = interpolate(ctx, images)
    assert (coeffs, degree) == ((1, 3, 0, 0, 0), 2)


@pytest.mark.parametrize("p,r", ORACLE_FIELDS)
def test_interpolate_random_zero_sum_assignments(p, r):
    ctx = build_field(p, r)
    q = ctx.q
    rng = random.Random(q)
    for _ in range(100):
        images = [rng.randrange(q) for _ in range(q - 2)]
        images.append(ctx.neg(reduce(ctx.add, images, 0)))
        coeffs, degree = interpolate(ctx, images)
        assert len(coeffs) == q - 2
        for i, want in enumerate(images):
            assert evaluate(ctx, coeffs, ctx.generator_pow(i)) == want
        if degree:
            assert coeffs[degree - 1] != 0
            assert all(c == 0 for c in coeffs[degree:])
        else:
            assert set(coeffs) == {0}


def test_interpolate_rejects_nonzero_sum():
    ctx = build_field(2, 2)
    with pytest.raises(IdentityCheckError):
        interpolate(ctx, [1, 1, 1])  # images sum to 1, not representable
    with pytest.raises(InputError):
        interpolate(ctx, [1, 2])  # wrong point count


def test_zero_assignment_has_degree_zero():
    ctx = build_field(5)
    assert interpolate(ctx, [0, 0, 0, 0]) == ((0, 0, 0), 0)


@pytest.mark.parametrize("p,r", ORACLE_FIELDS)
def test_brute_force_agrees_with_permanent_route(p, r):
    ctx = build_field(p, r)
    assert brute_force_table(ctx).entries == full_count_table(ctx).entries


def test_brute_force_shards_are_order_independent():
    ctx = build_field(5)
    base = brute_force_table(ctx, workers=1).entries
    assert brute_force_table(ctx, workers=2).entries == base
    assert brute_force_table(ctx, workers=4).entries == base


def test_brute_force_check_fraction_extremes():
    ctx = build_field(2, 2)
    every = brute_force_table(ctx, check_fraction=1).entries
    never = brute_force_table(ctx, check_fraction=0).entries
    assert every == never == {1: 3, 2: 3}


def test_oracle_guard():
    with pytest.raises(GuardError) as e:
        brute_force_table(build_field(13))
    assert e.value.guard == "oracle-assignments"
    assert e.value.actual == math.factorial(12)
    with pytest.raises(GuardError):
        brute_force_table(build_field(5), cap=23)
    assert brute_force_table(build_field(5), cap=24).entries == {1: 4, 2: 0, 3: 20}
    with pytest.raises(GuardError):
        count_restricted_solutions(build_field(13), [1])


def test_restricted_solutions_identities():
    for p, r in [(2, 2), (5, 1), (7, 1)]:
        ctx = build_field(p, r)
        q = ctx.q
        # level q-1 forces sum(x_i) = 0, which every permutation satisfies
        assert count_restricted_solutions(ctx, [q - 1]) == math.factorial(q - 1)
        # killing all of a_1..a_{q-2} leaves nothing
        assert count_restricted_solutions(ctx, range(1, q - 1)) == 0


@pytest.mark.parametrize("p,r", [(2, 2), (5, 1), (7, 1), (2, 3)])
def test_degree_below_matches_restricted_enumeration(p, r):
    ctx = build_field(p, r)
    q = ctx.q
    for d in range(1, q - 1):
        # degree < d means the coefficients a_d..a_{q-2} all vanish, i.e. the
        # linear conditions at levels 1..q-1-d all hold
        assert count_degree_below(ctx, d) == count_restricted_solutions(
            ctx, range(1, q - d)
        )


def test_restricted_input_validation():
    ctx = build_field(5)
    for levels in ([], [0], [5], [1, 9]):
        with pytest.raises(InputError):
            count_restricted_solutions(ctx, levels)
    assert count_restricted_solutions(ctx, [2, 2, 2]) == count_restricted_solutions(
        ctx, [2]
    )
