import random

import pytest

from permcount import (
    DEFAULT_MODULI,
    FieldSizeError,
    InputError,
    NotPrimeError,
    ReducibleModulusError,
    build_field,
    default_modulus,
    is_irreducible,
    is_prime,
    parse_field_spec,
)

FIELDS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (11, 1)]


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_default_moduli_are_irreducible():
    for (p, r), coeffs in DEFAULT_MODULI.items():
        assert len(coeffs) == r + 1 and coeffs[-1] == 1
        assert is_irreducible(coeffs, p)


def test_default_modulus_fallback_is_deterministic():
    # (11, 2) is not in the packaged table; the least irreducible is found
    m1 = default_modulus(11, 2)
    m2 = default_modulus(11, 2)
    assert m1 == m2
    assert is_irreducible(m1, 11)
    ctx = build_field(11, 2, m1)
    assert ctx.q == 121


def test_construction_errors():
    with pytest.raises(NotPrimeError):
        build_field(6)
    with pytest.raises(NotPrimeError):
        build_field(1, 1)
    with pytest.raises(ReducibleModulusError):
        build_field(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(FieldSizeError):
        build_field(257, 2)
    with pytest.raises(InputError):
        build_field(2, 2, (1, 1))  # wrong length
    with pytest.raises(InputError):
        build_field(2, 2, (1, 1, 2))  # not monic with coeffs in [0, p)


def test_f4_arithmetic():
    f4 = build_field(2, 2)
    assert f4.q == 4 and f4.generator == 2  # the residue x
    w = f4.generator
    w2 = f4.mul(w, w)
    assert f4.add(w, w2) == 1
    assert f4.mul(w, w2) == 1
    assert f4.pow(w, 3) == 1
    assert f4.add(w, w) == 0


def test_prime_field_arithmetic():
    f7 = build_field(7)
    assert f7.generator == 3  # least primitive root mod 7
    assert f7.inv(3) == 5
    assert f7.mul(4, 5) == 6
    assert f7.add(5, 4) == 2
    assert f7.neg(3) == 4
    f5 = build_field(5)
    assert f5.generator == 2


def test_pow_edge_cases():
    f8 = build_field(2, 3)
    assert f8.pow(0, 0) == 1
    assert f8.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        f8.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        f8.inv(0)
    for a in f8.nonzero():
        assert f8.mul(a, f8.inv(a)) == 1
        assert f8.pow(a, -1) == f8.inv(a)
        assert f8.pow(a, f8.q - 1) == 1


def test_exp_log_bijection():
    for p, r in FIELDS:
        ctx = build_field(p, r)
        assert sorted(ctx.exp_table) == list(ctx.nonzero())
        for i, c in enumerate(ctx.exp_table):
            assert ctx.log_table[c] == i


def test_generator_is_least():
    for p, r in FIELDS:
        ctx = build_field(p, r)
        n = ctx.q - 1
        for g in range(1, ctx.generator):
            seen = set()
            x = 1
            for _ in range(n):
                x = ctx.mul(x, g)
                seen.add(x)
            assert len(seen) < n  # smaller codes generate a proper subgroup


@pytest.mark.parametrize("p,r", FIELDS)
def test_field_axioms_random(p, r):
    ctx = build_field(p, r)
    rng = random.Random(10_000 * p + r)
    q = ctx.q
    for _ in range(1000):
        a, b, c = rng.randrange(q), rng.randrange(q), rng.randrange(q)
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, 0) == a and ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0


def test_trace_values():
    f4 = build_field(2, 2)
    assert [f4.trace(c) for c in range(4)] == [0, 0, 1, 1]
    f9 = build_field(3, 2)  # x^2 + 1, so trace(x) = x + x^3 = x - x = 0
    assert f9.trace(3) == 0
    assert f9.trace(0) == 0


@pytest.mark.parametrize("p,r", FIELDS)
def test_trace_is_linear_and_balanced(p, r):
    ctx = build_field(p, r)
    rng = random.Random(20_000 * p + r)
    for _ in range(500):
        a, b = rng.randrange(ctx.q), rng.randrange(ctx.q)
        assert ctx.trace(ctx.add(a, b)) == (ctx.trace(a) + ctx.trace(b)) % p
        assert ctx.trace(ctx.pow(a, p)) == ctx.trace(a)  # Frobenius invariance
    fibers = {t: 0 for t in range(p)}
    for a in ctx.elements():
        assert ctx.trace(a) < p
        fibers[ctx.trace(a)] += 1
    assert all(count == p ** (r - 1) for count in fibers.values())


def test_modulus_changes_arithmetic_not_structure():
    a = build_field(3, 2, (1, 0, 1))
    b = build_field(3, 2, (2, 1, 1))
    assert a.q == b.q == 9
    assert a != b
    assert sorted(a.exp_table) == sorted(b.exp_table)


def test_parse_field_spec():
    assert parse_field_spec("7") == (7, 1, None)
    assert parse_field_spec("2^3") == (2, 3, None)
    assert parse_field_spec("2^3:1,0,1,1") == (2, 3, (1, 1, 0, 1))
    assert parse_field_spec("2^2", "1,1,1") == (2, 2, (1, 1, 1))
    # an explicit --modulus beats the inline one
    assert parse_field_spec("2^2:1,0,1", "1,1,1") == (2, 2, (1, 1, 1))
    for bad in ("", "x", "2^", "^3", "0^2", "2^0"):
        with pytest.raises(InputError):
            parse_field_spec(bad)
    with pytest.raises(InputError):
        parse_field_spec("2^2:a,b,c")
