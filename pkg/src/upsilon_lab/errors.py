"""Exception hierarchy.

Every error deliberately raised by this package derives from UpsilonLabError,
so the CLI can turn any of them into a diagnostic and a clean exit code.
"""


class UpsilonLabError(Exception):
    """Base class for all errors raised by upsilon_lab."""


class NonExactDivision(UpsilonLabError):
    """Polynomial division left a nonzero remainder.

    Signals a wrong input polynomial; carries the exponent where the first
    nonzero remainder term appeared.
    """

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class NotAKnot(UpsilonLabError):
    """The braid closure has more than one component."""


class NotPositiveBraid(UpsilonLabError):
    """Operation requires a braid word with positive letters only."""


class DisconnectedClosure(UpsilonLabError):
    """The braid closure is not connected."""


class NotLSpaceForm(UpsilonLabError):
    """Polynomial is not in L-space form (alternating +-1 coefficients).

    Carries the first offending exponent when the failure is a bad partial
    coefficient sum.
    """

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class BadParameters(UpsilonLabError):
    """Invalid parameters for a rank-two semigroup."""


class OutOfDomain(UpsilonLabError):
    """Evaluation point lies outside the function's domain."""


class RaysInconsistent(UpsilonLabError):
    """A boundary ray would cut below a sample point."""


class NotConvex(UpsilonLabError):
    """Operation requires a convex piecewise-linear function."""


class InvalidStepPattern(UpsilonLabError):
    """A step profile does not encode a valid gap sequence."""


class MalformedHull(UpsilonLabError):
    """Hull cannot arise as the convex envelope of any gap function."""


class BadOrdering(UpsilonLabError):
    """Ratios violate the required ordering 1 >= r1 >= r2 >= r3 >= 0."""


class UnknownName(UpsilonLabError):
    """No catalog entry or named braid under this name."""
