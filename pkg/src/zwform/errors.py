"""Exception taxonomy shared across the package.

Two families matter to callers: domain errors (bad or out-of-scope input,
reported back to the user) and pipeline errors that can only arise from an
internal bug (surfaced loudly so tests catch them). The CLI maps the former
to exit code 2 and the latter to exit code 1.
"""


class ZwformError(Exception):
    """Base class for every error raised by this package."""


class ZeroDivisor(ZwformError):
    """Exact division was attempted with divisor 0."""


class NotDivisible(ZwformError):
    """An exact division left a nonzero remainder.

    Depending on the call site this signals either invalid input or a bug:
    the decomposition pipeline guarantees all of its divisions are exact, so
    seeing this there means the surrounding theory was violated.
    """


class NotInvertible(ZwformError):
    """No inverse exists modulo the given modulus."""


class ZeroModulus(ZwformError):
    """A modular operation was attempted with modulus 0."""


class ZeroZ(ZwformError):
    """The closed form for z evaluates to 0, so w is undefined."""


class WrongExponent(ZwformError):
    """An operation restricted to one exponent was called with another."""


class NotCoprime(ZwformError):
    """Inputs required to be coprime are not."""


class NotTheoremGrade(ZwformError):
    """A solution fails a hypothesis required for decomposition.

    Theorem-grade means: x, y, z, m, w all nonzero, x, y, z pairwise
    coprime, and x**p - m*y**p == z*w exactly.
    """


class DegenerateE(ZwformError):
    """The residual e vanished (u**p == m * q**p), so g cannot be defined.

    This only happens when m is a p-th power times a unit. The pipeline
    intermediates computed up to the failure are carried in ``partial``.
    """

    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = dict(partial or {})


class IdentityViolation(ZwformError):
    """An assembled solution fails x**p - m*y**p == z*w. Always a bug."""


class RoundTripMismatch(ZwformError):
    """A decompose postcondition failed to reproduce its input. Always a bug."""
