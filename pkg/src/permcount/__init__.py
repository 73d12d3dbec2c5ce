"""Exact counting of permutation polynomials over small finite fields.

The pipeline: build a field context, form a circulant matrix of group-ring
monomials, take its permanent with exact integer arithmetic, and read counts
of permutation polynomials by interpolation degree off the coefficients.
Independent routes (group-ring, cyclotomic image, set-partition expansion,
brute-force enumeration) must agree exactly; the package treats any mismatch
as an error, never as something to smooth over.
"""

from .counting import (
    CountTable,
    GaussSumReport,
    PermanentReport,
    bound_interval,
    character_matrix,
    check_bound,
    check_identity_eq4,
    count_all_routes,
    count_degree_below,
    count_top_degree,
    count_top_degree_cyclotomic,
    count_top_degree_partitions,
    full_count_table,
    gauss_sums,
    monomial_matrix,
)
from .errors import (
    FieldSizeError,
    GuardError,
    IdentityCheckError,
    InputError,
    NotPrimeError,
    PermcountError,
    ReducibleModulusError,
)
from .field import (
    DEFAULT_MODULI,
    MAX_FIELD_SIZE,
    FieldCtx,
    FieldSpec,
    build_field,
    default_modulus,
    is_irreducible,
    is_prime,
    parse_field_spec,
    poly_str,
)
from .groupring import CycloElem, GroupRing, GroupRingElem, eval_trace_character
from .oracle import (
    MAX_ASSIGNMENTS,
    brute_force_table,
    count_restricted_solutions,
    interpolate,
)
from .permanent import (
    MAX_BELL,
    MAX_NAIVE,
    MAX_RYSER,
    character_permanent_by_partitions,
    permanent_naive,
    permanent_ryser,
    ryser_constant_term,
    set_partitions,
)

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "CycloElem",
    "DEFAULT_MODULI",
    "FieldCtx",
    "FieldSpec",
    "FieldSizeError",
    "GaussSumReport",
    "GroupRing",
    "GroupRingElem",
    "GuardError",
    "IdentityCheckError",
    "InputError",
    "MAX_ASSIGNMENTS",
    "MAX_BELL",
    "MAX_FIELD_SIZE",
    "MAX_NAIVE",
    "MAX_RYSER",
    "NotPrimeError",
    "PermanentReport",
    "PermcountError",
    "ReducibleModulusError",
    "bound_interval",
    "brute_force_table",
    "build_field",
    "character_matrix",
    "character_permanent_by_partitions",
    "check_bound",
    "check_identity_eq4",
    "count_all_routes",
    "count_degree_below",
    "count_restricted_solutions",
    "count_top_degree",
    "count_top_degree_cyclotomic",
    "count_top_degree_partitions",
    "default_modulus",
    "eval_trace_character",
    "full_count_table",
    "gauss_sums",
    "interpolate",
    "is_irreducible",
    "is_prime",
    "monomial_matrix",
    "parse_field_spec",
    "permanent_naive",
    "permanent_ryser",
    "poly_str",
    "ryser_constant_term",
    "set_partitions",
]
