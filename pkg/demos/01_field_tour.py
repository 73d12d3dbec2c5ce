"""
A tour of the finite-field layer
================================

Elements of F_{p^r} are plain integers in [0, q): the base-p digits of the
code are the coefficients of the residue polynomial, low degree first.
"""

from permcount import build_field, poly_str

# A field is one call.  F_9 here; the packaged modulus is x^2 + 1.
f9 = build_field(3, 2)
print(f"built {f9!r}")
print(f"modulus: {poly_str(f9.modulus)}")

# Codes 0..2 are the prime subfield; code 3 is the residue x itself.
a, b = 3, 5
print(f"{a} + {b} = {f9.add(a, b)}")
print(f"{a} * {b} = {f9.mul(a, b)}")
print(f"{a}^-1    = {f9.inv(a)}  (check: {f9.mul(a, f9.inv(a))})")

# Every nonzero element is a power of the least generator.
print(f"generator: {f9.generator}")
print(f"exp table: {f9.exp_table}")
print(f"log of 7 : {f9.log_table[7]}")

# The absolute trace maps onto the prime subfield, p^(r-1) elements per fiber.
print(f"traces   : {f9.trace_table}")

# A different irreducible modulus relabels the codes but cannot change any
# count this package produces (see demo 03).
alt = build_field(3, 2, (2, 1, 1))  # x^2 + x + 2
print(f"\nsame field, different labels: {alt!r}")
print(f"generator there: {alt.generator}")

# Moduli may also come from the deterministic least-lex search.
f121 = build_field(11, 2)
print(f"\nfallback modulus for F_121: {poly_str(f121.modulus)}")
