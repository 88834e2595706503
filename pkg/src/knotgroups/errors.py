"""Exception hierarchy shared by all knotgroups modules.

Two broad families matter to callers (and to the CLI exit-code mapping):
``InputError`` covers malformed or inconsistent user input, while
``ResourceError`` covers explicit refusals to run past a configured bound.
"""


class KnotGroupsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(KnotGroupsError):
    """Malformed or inconsistent input (CLI exit code 2)."""


class ResourceError(KnotGroupsError):
    """A configured size or budget limit was exceeded (CLI exit code 3)."""


class PresentationSyntaxError(InputError):
    """Presentation text does not match the grammar."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownGeneratorError(InputError):
    """A word uses a generator that was never declared."""


class DuplicateGeneratorError(InputError):
    """The same generator name was declared twice."""


class InvalidParameterError(InputError):
    """A parameter is outside its documented domain."""


class MissingImageError(InputError):
    """Word evaluation hit a generator with no assigned image."""


class MissingWeightError(InputError):
    """Abelianization weight requested for a generator that has none."""


class UnknownMarkerError(InputError):
    """A marker name is not present in the presentation."""


class DegreeMismatchError(InputError):
    """Permutations of different degrees cannot be composed."""


class NotAMemberError(InputError):
    """An element was expected to lie in a given finite group."""


class ZeroPolynomialError(InputError):
    """The zero polynomial has no breadth."""


class NotInfiniteCyclicError(InputError):
    """The abelianization is not infinite cyclic, so no weights exist."""


class DeficiencyError(InputError):
    """Too few relators to form maximal minors of the derivative matrix."""


class CoefficientOverflowError(ResourceError):
    """An integer left the checked range instead of silently wrapping."""


class GroupTooLargeError(ResourceError):
    """Group enumeration (or a naive product search) exceeds its cap."""


class BudgetExceededError(ResourceError):
    """A search visited more nodes than its configured budget."""


# Arbitrary-precision integers never wrap in Python, so "overflow" is a
# policy bound: everything in scope fits comfortably in 64 bits, and a value
# outside that range signals runaway input rather than a legitimate result.
CHECKED_INT_MAX = 2**63 - 1


def checked_int(value, context="integer arithmetic"):
    """Return ``value`` unchanged, or raise if it left the checked range."""
    if value > CHECKED_INT_MAX or value < -CHECKED_INT_MAX:
        raise CoefficientOverflowError(
            f"{context}: |{value}| exceeds the checked 64-bit range"
        )
    return value
