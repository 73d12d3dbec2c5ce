"""Finite fields F_{p^r} on integer-coded elements, fully table driven.

An element is an integer code in [0, q), q = p^r: the base-p digits of the
code are the coefficients of the residue polynomial, low degree first.  Code 0
is the additive identity and code 1 the multiplicative identity, so the prime
subfield is exactly the codes 0..p-1.

A FieldCtx is immutable after construction and carries everything the rest of
the package needs: exp/log tables over a fixed least generator, an absolute
trace table, and carry-free packed addition (plain XOR when p = 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldSizeError, InputError, NotPrimeError, ReducibleModulusError

MAX_FIELD_SIZE = 1 << 16

# Largest q for which a full q*q addition table is precomputed; above this the
# packed representation handles addition in O(1) without a quadratic table.
_ADD_TABLE_LIMIT = 512

# Fixed moduli for the fields the test-suite leans on, low degree first.
# Anything not listed falls back to the lexicographically least monic
# irreducible polynomial, so construction is deterministic either way.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),   # x^5 + x^2 + 1
    (3, 2): (1, 0, 1),            # x^2 + 1
    (3, 3): (1, 2, 0, 1),         # x^3 + 2x + 1
    (5, 2): (1, 1, 1),            # x^2 + x + 1
    (7, 2): (1, 0, 1),            # x^2 + 1
}


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p; coefficients low degree first."""
    a = [x % p for x in a]
    b = _poly_trim(x % p for x in b)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    a = _poly_trim(a)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        scale = (a[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - scale * bc) % p
        a = _poly_trim(a)
    return a


def _monic_polys(p, deg):
    """All monic polynomials of the given degree over F_p, lexicographic in
    (c_0, ..., c_{deg-1})."""
    tail = [0] * deg
    while True:
        yield tuple(tail) + (1,)
        i = 0
        while i < deg and tail[i] == p - 1:
            tail[i] = 0
            i += 1
        if i == deg:
            return
        tail[i] += 1


def is_irreducible(coeffs, p):
    """Exhaustive irreducibility test by trial division over F_p.

    coeffs is monic, low degree first.  Divides by every monic polynomial of
    degree up to deg/2, which is exact and plenty fast at guard scale.
    """
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if any(c % p != c for c in coeffs):
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(coeffs, cand, p):
                return False
    return True


def default_modulus(p, r):
    """The packaged modulus for (p, r), else the least monic irreducible."""
    if r == 1:
        return (0, 1)  # x itself; arithmetic is plain mod p
    got = DEFAULT_MODULI.get((p, r))
    if got is not None:
        return got
    for cand in _monic_polys(p, r):
        if is_irreducible(cand, p):
            return cand
    raise InputError(f"no irreducible polynomial of degree {r} over F_{p}")


def poly_str(coeffs):
    """Human-readable form of a coefficient vector, low degree first."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            x = "x" if e == 1 else f"x^{e}"
            parts.append(x if c == 1 else f"{c}{x}")
    return " + ".join(parts) if parts else "0"


def swar_params(p, ndigits):
    """Constants for carry-free packed addition of base-p digit vectors.

    Each digit sits in a w-bit lane chosen so that one addition of two reduced
    vectors cannot overflow a lane; lanes holding a sum >= p are detected by
    adding a bias that pushes them past the lane's top bit, then reduced by
    subtracting p from exactly those lanes.  Returns
    (w, ones, top, bias, pmask, shift).
    """
    if p == 2:
        raise ValueError("p = 2 packs one bit per digit and adds with XOR")
    w = (2 * (p - 1) + 1).bit_length() + 1
    ones = sum(1 << (w * i) for i in range(ndigits))
    top = ones << (w - 1)
    bias = ones * ((1 << (w - 1)) - p)
    pmask = ones * p
    return w, ones, top, bias, pmask, w - 1


@dataclass(frozen=True)
class FieldSpec:
    """Defining data of a field: characteristic, extension degree, modulus
    (monic, low degree first)."""

    p: int
    r: int
    modulus: tuple


class FieldCtx:
    """Arithmetic context for F_{p^r}.

    Attributes of interest: p, r, q, spec, generator (code of the least
    generator of the multiplicative group), exp_table (tuple, exp_table[i] =
    generator**i for 0 <= i < q-1), log_table (list indexed by code, None at
    0), trace_table (tuple of absolute traces, values in the prime subfield).
    """

    def __init__(self, p, r, modulus=None, *, max_q=MAX_FIELD_SIZE):
        if not isinstance(p, int) or not isinstance(r, int) or r < 1:
            raise InputError(f"bad field parameters p={p!r}, r={r!r}")
        if not is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        q = p**r
        if q > max_q:
            raise FieldSizeError(max_q, q)
        if modulus is None:
            modulus = default_modulus(p, r)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise InputError(
                f"modulus must be monic of degree {r}: got {poly_str(modulus)}"
            )
        if any(not 0 <= c < p for c in modulus):
            raise InputError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(modulus, p):
            raise ReducibleModulusError(
                f"{poly_str(modulus)} is reducible over F_{p}"
            )

        self.p = p
        self.r = r
        self.q = q
        self.spec = FieldSpec(p, r, modulus)
        self.modulus = modulus

        self._digits = [self._code_digits(c) for c in range(q)]
        if p == 2:
            self._packed = None
            self._packed_to_code = None
            self._swar = None
        else:
            self._swar = swar_params(p, r)
            w = self._swar[0]
            self._packed = [
                sum(d << (w * i) for i, d in enumerate(dig)) for dig in self._digits
            ]
            self._packed_to_code = {pk: c for c, pk in enumerate(self._packed)}

        self._add_flat = None
        if p != 2 and q <= _ADD_TABLE_LIMIT:
            self._add_flat = [
                self._add_slow(a, b) for a in range(q) for b in range(q)
            ]
        self._neg_table = tuple(self._neg_slow(a) for a in range(q))

        self.generator = self._find_generator()
        exp = [1]
        for _ in range(q - 2):
            exp.append(self._raw_mul(exp[-1], self.generator))
        self.exp_table = tuple(exp)
        log = [None] * q
        for i, c in enumerate(exp):
            log[c] = i
        self.log_table = log
        if q > 2 and None in log[1:]:
            raise AssertionError("generator does not reach every nonzero code")

        self.trace_table = tuple(self._trace_slow(a) for a in range(q))
        for t in self.trace_table:
            if t >= p:
                raise AssertionError(
                    "trace left the prime subfield; modulus arithmetic is broken"
                )

    # -- construction helpers ------------------------------------------------

    def _code_digits(self, code):
        p = self.p
        return tuple((code // p**i) % p for i in range(self.r))

    def _digits_code(self, digits):
        p = self.p
        return sum(d * p**i for i, d in enumerate(digits))

    def _add_slow(self, a, b):
        p = self.p
        da, db = self._digits[a], self._digits[b]
        return self._digits_code([(x + y) % p for x, y in zip(da, db)])

    def _neg_slow(self, a):
        p = self.p
        return self._digits_code([(-x) % p for x in self._digits[a]])

    def _raw_mul(self, a, b):
        """Polynomial product of two codes reduced by the modulus."""
        p, r = self.p, self.r
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(r + 1):
                    prod[k - r + j] -= c * mod[j]
            prod[k] = 0
        return self._digits_code([x % p for x in prod[:r]])

    def _raw_pow(self, a, e):
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return acc

    def _find_generator(self):
        n = self.q - 1
        if n == 1:
            return 1
        checks = [n // f for f in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._raw_pow(g, e) != 1 for e in checks):
                return g
        raise AssertionError("no generator found; field tables are broken")

    def _trace_slow(self, a):
        acc = a
        t = a
        for _ in range(self.r - 1):
            t = self._raw_pow(t, self.p)
            acc = self._add_slow(acc, t)
        return acc

    # -- public arithmetic ---------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_flat is not None:
            return self._add_flat[a * self.q + b]
        _, _, top, bias, _, shift = self._swar
        s = self._packed[a] + self._packed[b]
        s -= (((s + bias) & top) >> shift) * self.p
        return self._packed_to_code[s]

    def neg(self, a):
        return self._neg_table[a]

    def sub(self, a, b):
        return self.add(a, self._neg_table[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0 if e else 1
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def generator_pow(self, e):
        """generator**e with the exponent reduced mod q-1."""
        return self.exp_table[e % (self.q - 1)]

    def trace(self, a):
        """Absolute trace into the prime subfield, returned as a code < p."""
        return self.trace_table[a]

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"FieldCtx(q={self.q}, p={self.p}, r={self.r}, modulus={poly_str(self.modulus)})"


def build_field(p, r=1, modulus=None, *, max_q=MAX_FIELD_SIZE):
    """Construct the field F_{p^r}; the single front door used everywhere."""
    return FieldCtx(p, r, modulus, max_q=max_q)


def parse_field_spec(text, modulus_text=None):
    """Parse CLI field syntax: "p", "p^r", or "p^r:c_r,...,c_0" (coefficients
    high degree first).  A separate modulus string, same comma syntax, wins
    over one embedded in the field text.  Returns (p, r, modulus-or-None)."""
    text = text.strip()
    body, _, inline = text.partition(":")
    try:
        if "^" in body:
            p_s, _, r_s = body.partition("^")
            p, r = int(p_s), int(r_s)
        else:
            p, r = int(body), 1
    except ValueError:
        raise InputError(f"cannot parse field spec {text!r}") from None
    if p < 2 or r < 1:
        raise InputError(f"cannot parse field spec {text!r}")
    modulus = None
    chosen = modulus_text if modulus_text is not None else (inline or None)
    if chosen:
        try:
            high_first = [int(tok) for tok in chosen.split(",")]
        except ValueError:
            raise InputError(f"cannot parse modulus {chosen!r}") from None
        modulus = tuple(reversed(high_first))
    return p, r, modulus
