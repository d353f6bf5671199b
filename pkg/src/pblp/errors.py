"""Exception hierarchy shared across the package.

Everything raised deliberately derives from PblpError so CLI code can map
failures to exit codes in one place.
"""


class PblpError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PblpError):
    """Problem text or a rational token could not be parsed."""


class DimensionMismatch(PblpError):
    """Declared dimensions disagree with the data that follows them."""


class BadCase(PblpError):
    """Case tag is neither 1 nor 2."""


class DivisionByZero(PblpError):
    """Exact division by a zero rational."""


class NegativeParameter(PblpError):
    """A parameter value that must be nonnegative was negative."""


class InfeasibleProblem(PblpError):
    """The feasible set is empty."""


class UnboundedScalarization(PblpError):
    """A weighted-sum scalarization is unbounded below, so the
    decomposition is undefined."""


class EmptyComponent(PblpError):
    """A weight-set component turned out empty; the image it came from is
    not extreme nondominated."""


class NoFiniteVertex(PblpError):
    """Every vertex of the component maps to an infinite or undefined
    parameter value, so no finite interval bound exists."""


class TooLarge(PblpError):
    """Brute-force enumeration would exceed the configured basis budget."""


class UnboundedFeasibleSet(PblpError):
    """The feasible set is unbounded, so vertex enumeration alone cannot
    describe it."""
