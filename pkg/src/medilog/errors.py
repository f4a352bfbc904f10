"""Exception hierarchy shared by every subsystem.

Errors caused by caller-supplied input derive from :class:`InputError` and map
to CLI exit code 1 / HTTP 400.  Everything else that goes wrong inside the
engine is an :class:`InternalError` (exit code 2 / HTTP 500).
"""


class MedilogError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MedilogError):
    """Invalid caller-supplied input."""


class InternalError(MedilogError):
    """An engine invariant was violated; indicates a bug, not bad input."""


class DomainError(InputError):
    """A numeric argument lies outside its admissible domain."""


class ParameterError(InputError):
    """Operator parameters violate a structural constraint (e.g. weight normalization)."""


class ParseError(InputError):
    """Formula text does not conform to the grammar."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class UnboundAtomError(InputError):
    """A formula atom has no assignment in the valuation."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"atom {name!r} is not assigned in the valuation")


class TooManyAtomsError(InputError):
    """Grid search refused: the formula mentions too many distinct atoms."""


class EmptyProjectionError(InputError):
    """The requested projection of a membership function is empty."""


class EmptySetError(InputError):
    """An interval type-2 set carries no membership mass."""


class NotHermitianError(InputError):
    """A matrix fails the Hermiticity tolerance."""


class DimensionError(InputError):
    """Operator dimensions do not match, or lie outside the supported range."""


class NonRealTraceError(InputError):
    """A Born expectation has an imaginary part beyond tolerance."""


class ConvergenceError(InternalError):
    """An iterative procedure hit its iteration guard without converging."""


class MissingGranuleError(InputError):
    """A referenced granule is absent from the assignment."""


class WeightMismatchError(InputError):
    """Aggregation weights are inconsistent with the value family."""


class EmptyFamilyError(InputError):
    """Aggregation over an empty family of values."""


class ScenarioIOError(InputError):
    """The scenario file could not be read."""


class SchemaError(InputError):
    """A scenario or valuation file does not match the documented schema."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class InvariantError(InputError):
    """A scenario violates a semantic invariant (e.g. brake < decelerate)."""
