"""Exception hierarchy shared by all codec modules."""


class CodecError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidKeyElement(CodecError):
    """Key exponent is unusable: not prime, 2^x - 1 composite, or out of range."""


class NoInverse(CodecError):
    """Requested a modular inverse of a value congruent to zero."""


class DimensionMismatch(CodecError):
    """Vector length does not match the transform order."""


class UnsupportedBlockOrder(CodecError):
    """Block order is not one of the supported powers of two."""


class ValueOverflow(CodecError):
    """A group value does not fit in the configured group width."""


class SentinelConflict(CodecError):
    """A recorded sentinel position holds a nonzero value; ciphertext or key is wrong."""


class NonZeroPadding(CodecError):
    """Bits that should be zero padding contain a one; ciphertext or key is wrong."""


class LengthUnderflow(CodecError):
    """Recorded bit length exceeds the bits actually available."""


class MalformedEnvelope(CodecError):
    """Ciphertext envelope violates the container format."""
