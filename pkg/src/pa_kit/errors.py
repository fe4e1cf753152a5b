"""Exception types shared across the toolkit."""


class PaKitError(Exception):
    """Base class for all toolkit errors."""


class NegativeProbability(PaKitError):
    """A probability mass is negative."""


class NotNormalized(PaKitError):
    """Probability masses do not sum to 1 within tolerance."""


class IndexOutOfRange(PaKitError):
    """A key index lies outside the 2**n keyspace."""


class DimensionMismatch(PaKitError):
    """Input bit-length does not match what the operation expects."""


class InvalidDimensions(PaKitError):
    """Hash dimensions must satisfy 1 <= k <= n with a matching seed."""


class EnumerationTooLarge(PaKitError):
    """Exhaustive enumeration would exceed the seed-length cap."""


class EqualInputs(PaKitError):
    """Collision counting needs two distinct inputs."""


class KeyExhausted(PaKitError):
    """Compression would leave fewer than one output bit."""


class BlockExhausted(PaKitError):
    """Subtraction would consume an entire privacy-amplification block."""


class InfeasibleTarget(PaKitError):
    """Secrecy or failure-probability target outside the representable range."""


class InsufficientSamples(PaKitError):
    """Monte Carlo verification needs more samples to mean anything."""


class NonPositiveBeta(PaKitError):
    """Tail thresholds must be strictly positive."""
