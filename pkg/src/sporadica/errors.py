"""Exception types raised across the package."""


class SporadicaError(Exception):
    """Base class for all errors raised by sporadica."""


# fields
class NonPrime(SporadicaError, ValueError):
    pass


class FieldTooLarge(SporadicaError, ValueError):
    pass


class ForeignElement(SporadicaError, TypeError):
    pass


class DivisionByZero(SporadicaError, ZeroDivisionError):
    pass


# matrix groups
class NotPrimePower(SporadicaError, ValueError):
    pass


class SpaceTooLarge(SporadicaError, ValueError):
    pass


class PrimeFieldNoTwist(SporadicaError, ValueError):
    pass


# permutations
class MalformedSyntax(SporadicaError, ValueError):
    pass


class RepeatedPoint(MalformedSyntax):
    pass


class PointOutOfRange(SporadicaError, ValueError):
    pass


class DegreeMismatch(SporadicaError, ValueError):
    pass


class OrderBoundExceeded(SporadicaError, ValueError):
    pass


# codes / Mathieu
class CodeTooLarge(SporadicaError, ValueError):
    pass


class NotGolay(SporadicaError, ValueError):
    pass


class SearchBudgetExceeded(SporadicaError, RuntimeError):
    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


# catalog
class UnsupportedFamily(SporadicaError, ValueError):
    pass


class LawViolation(SporadicaError, ValueError):
    pass


# lattice / moonshine
class NotInLattice(SporadicaError, ValueError):
    pass


class NoDecomposition(SporadicaError, ValueError):
    pass


# cli
class ConfigError(SporadicaError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
