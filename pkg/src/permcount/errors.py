"""Exception types shared across the package.

The CLI maps these onto its exit codes: InputError and its subclasses mean
bad input (exit 4), GuardError means a cost guard refused the run (exit 3),
IdentityCheckError means an exact cross-route identity failed (exit 2).
"""


class PermcountError(Exception):
    """Base class for all package-specific errors."""


class InputError(PermcountError):
    """Invalid user-supplied input: field spec, modulus, degree, CLI args."""


class NotPrimeError(InputError):
    """Field characteristic is not prime."""


class ReducibleModulusError(InputError):
    """Supplied modulus polynomial is reducible over the prime field."""


class GuardError(PermcountError):
    """A cost guard refused the computation before it started.

    Guards keep factorial/exponential work from launching by accident.  Every
    guard is overridable at the call site (and through CLI --max-* flags).
    """

    def __init__(self, guard, limit, actual):
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(f"guard '{guard}' exceeded: {actual} > {limit}")


class FieldSizeError(GuardError):
    """Field order exceeds the configured size guard."""

    def __init__(self, limit, actual):
        super().__init__("field-size", limit, actual)


class IdentityCheckError(PermcountError):
    """An identity that must hold exactly between routes failed.

    Counting results are cross-validated through independent formulas; a
    mismatch is never tolerated or "corrected", it is reported as a bug.
    """
