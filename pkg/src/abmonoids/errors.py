"""Exception types shared across the package."""


class EmptyGeneratorsError(ValueError):
    """A generating set must contain at least one element."""


class ZeroGeneratorError(ValueError):
    """Generators must be positive integers."""


class NonCoprimeError(ValueError):
    """Generators with gcd > 1 do not define a numerical semigroup."""


class NotMinimalGeneratorError(ValueError):
    """Only minimal generators can be removed from a semigroup."""


class NotAboveFrobeniusError(ValueError):
    """Removal is restricted to minimal generators above the Frobenius number."""


class EmptyXError(ValueError):
    """closure() needs a non-empty seed set; the empty seed degenerates to {0}."""


class InvalidInstanceError(ValueError):
    """Problem instance fields violate a validity constraint."""


class InfeasibleError(Exception):
    """The instance admits no solution of the requested cardinality."""


class ScaleTooLargeError(Exception):
    """The brute-force candidate space is too large to enumerate."""


class Int64OverflowError(OverflowError):
    """An intermediate value left the signed 64-bit range."""


class ResourceLimitError(Exception):
    """A configured node or table budget was exceeded."""

    def __init__(self, message, *, node_count=None, depth=None):
        super().__init__(message)
        self.node_count = node_count
        self.depth = depth
