"""Exact arithmetic in Z[(F_q^m, +)] and in Z[x]/(x^p - 1).

Group-algebra elements are sparse maps from exponent keys to nonzero integer
coefficients; the product convolves keys by componentwise field addition.
Keys pack the base-p digits of all m components into one integer so that a
key addition is a single carry-free operation (XOR when p = 2, a SWAR
add-and-reduce otherwise).  Coefficients are plain Python ints, so nothing
ever overflows.
"""

from __future__ import annotations

from .errors import IdentityCheckError
from .field import swar_params


class GroupRing:
    """The ring Z[(F_q^m, +)] for a fixed field context and arity m."""

    def __init__(self, ctx, arity=1):
        if arity < 1:
            raise ValueError(f"arity must be >= 1, got {arity}")
        self.ctx = ctx
        self.arity = arity
        p, r = ctx.p, ctx.r
        self.ndigits = r * arity
        if p == 2:
            # base-2 digits are bits, so a packed code chunk is the code itself
            self._w = 1
            self._chunk = list(range(ctx.q))
            self._swar = None
        else:
            self._swar = swar_params(p, self.ndigits)
            w = self._swar[0]
            self._w = w
            self._chunk = [
                sum(d << (w * i) for i, d in enumerate(ctx._digits[c]))
                for c in range(ctx.q)
            ]
        self._chunk_bits = self._w * r
        self._chunk_mask = (1 << self._chunk_bits) - 1
        self._chunk_to_code = {pk: c for c, pk in enumerate(self._chunk)}

    # -- packed exponent keys -------------------------------------------------

    def key_pack(self, codes):
        if len(codes) != self.arity:
            raise ValueError(f"expected {self.arity} components, got {len(codes)}")
        bits = self._chunk_bits
        key = 0
        for l, c in enumerate(codes):
            key |= self._chunk[c] << (bits * l)
        return key

    def key_unpack(self, key):
        bits = self._chunk_bits
        mask = self._chunk_mask
        return tuple(
            self._chunk_to_code[(key >> (bits * l)) & mask] for l in range(self.arity)
        )

    def key_add(self, k1, k2):
        if self._swar is None:
            return k1 ^ k2
        _, _, top, bias, _, shift = self._swar
        s = k1 + k2
        return s - (((s + bias) & top) >> shift) * self.ctx.p

    def key_neg(self, k):
        if self._swar is None:
            return k
        _, _, top, bias, pmask, shift = self._swar
        s = pmask - k
        return s - (((s + bias) & top) >> shift) * self.ctx.p

    def _key_params(self):
        """Plain-data description of key arithmetic, for worker processes."""
        if self._swar is None:
            return None
        _, _, top, bias, pmask, shift = self._swar
        return (self.ctx.p, top, bias, pmask, shift)

    # -- element constructors --------------------------------------------------

    def monomial(self, alpha, coeff=1):
        """coeff * X^alpha; alpha is an m-tuple of codes (a bare code if m=1)."""
        if isinstance(alpha, int):
            alpha = (alpha,)
        key = self.key_pack(tuple(alpha))
        return GroupRingElem(self, {key: coeff} if coeff else {})

    def zero(self):
        return GroupRingElem(self, {})

    def one(self):
        return GroupRingElem(self, {0: 1})

    def from_terms(self, terms):
        """Element from {m-tuple of codes: coefficient}; zeros are dropped."""
        acc = {}
        for alpha, c in terms.items():
            if isinstance(alpha, int):
                alpha = (alpha,)
            if c:
                key = self.key_pack(tuple(alpha))
                v = acc.get(key, 0) + c
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        return GroupRingElem(self, acc)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRing)
            and self.arity == other.arity
            and self.ctx == other.ctx
        )

    def __hash__(self):
        return hash((self.ctx.spec, self.arity))

    def __repr__(self):
        return f"GroupRing(q={self.ctx.q}, arity={self.arity})"


class GroupRingElem:
    """Immutable-by-convention sparse element; terms maps packed key -> int."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, GroupRingElem) or other.ring != self.ring:
            raise ValueError("operands live in different group rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return GroupRingElem(self.ring, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return GroupRingElem(self.ring, out)

    def __neg__(self):
        return GroupRingElem(self.ring, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElem(self.ring, {})
            return GroupRingElem(
                self.ring, {k: c * other for k, c in self.terms.items()}
            )
        self._check(other)
        key_add = self.ring.key_add
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = key_add(ka, kb)
                out[k] = get(k, 0) + ca * cb
        return GroupRingElem(self.ring, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElem)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, alpha):
        if isinstance(alpha, int):
            alpha = (alpha,)
        return self.terms.get(self.ring.key_pack(tuple(alpha)), 0)

    def constant_term(self):
        return self.terms.get(0, 0)

    def total_mass(self):
        """Sum of all coefficients (the image under X^alpha -> 1)."""
        return sum(self.terms.values())

    def support_size(self):
        return len(self.terms)

    def sorted_terms(self):
        """[(m-tuple of codes, coefficient)] sorted by the code tuple."""
        unpack = self.ring.key_unpack
        return sorted((unpack(k), c) for k, c in self.terms.items())

    def to_json_obj(self):
        """{"constant": n, "terms": [{"exp": [codes], "coef": n}, ...]}."""
        terms = [
            {"exp": list(alpha), "coef": c}
            for alpha, c in self.sorted_terms()
            if any(alpha)
        ]
        return {"constant": self.constant_term(), "terms": terms}

    def to_text(self):
        """Canonical display; for arity 1 exponents are shown as generator
        powers w^e with e in [1, q-1]."""
        if not self.terms:
            return "0"
        parts = []
        const = self.constant_term()
        if const:
            parts.append(str(const))
        if self.ring.arity == 1:
            ctx = self.ring.ctx
            shown = []
            for (code,), c in self.sorted_terms():
                if code == 0:
                    continue
                e = ctx.log_table[code] or (ctx.q - 1)
                shown.append((e, c))
            shown.sort()
            parts.extend(f"{c}*X^(w^{e})" for e, c in shown)
        else:
            for alpha, c in self.sorted_terms():
                if not any(alpha):
                    continue
                parts.append(f"{c}*X^{list(alpha)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<GroupRingElem {self.to_text()}>"


def eval_trace_character(elem):
    """Ring homomorphism Z[F_q] -> Z[x]/(x^p - 1), X^alpha -> x^trace(alpha).

    Defined for arity-1 elements only; preserves sums, products, and the
    total coefficient mass.
    """
    ring = elem.ring
    if ring.arity != 1:
        raise ValueError("trace character is defined on arity-1 elements")
    ctx = ring.ctx
    coeffs = [0] * ctx.p
    unpack = ring.key_unpack
    for k, c in elem.terms.items():
        coeffs[ctx.trace_table[unpack(k)[0]]] += c
    return CycloElem(ctx.p, tuple(coeffs))


class CycloElem:
    """Element of Z[x]/(x^p - 1) as a dense length-p integer vector."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != p:
            raise ValueError(f"need exactly {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * p)

    @classmethod
    def one(cls, p):
        return cls(p, (1,) + (0,) * (p - 1))

    @classmethod
    def root_power(cls, p, e):
        """x**e reduced mod x^p - 1."""
        c = [0] * p
        c[e % p] = 1
        return cls(p, c)

    def _check(self, other):
        if not isinstance(other, CycloElem) or other.p != self.p:
            raise ValueError("operands live in different cyclotomic rings")

    def __add__(self, other):
        self._check(other)
        return CycloElem(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return CycloElem(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycloElem(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.p, [a * other for a in self.coeffs])
        self._check(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = i + j
                        if k >= p:
                            k -= p
                        out[k] += a * b
        return CycloElem(p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, CycloElem)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def as_integer(self):
        """The integer this class equals once x is any primitive p-th root of
        unity: requires all coefficients of x^1..x^{p-1} to agree, and then
        equals coeffs[0] - coeffs[1].  Unequal tails mean a route bug."""
        tail = set(self.coeffs[1:])
        if len(tail) > 1:
            raise IdentityCheckError(
                f"cyclotomic value is not an integer: coefficients {self.coeffs}"
            )
        if not tail:
            return self.coeffs[0]
        return self.coeffs[0] - self.coeffs[1]

    def __repr__(self):
        return f"CycloElem(p={self.p}, coeffs={self.coeffs})"
