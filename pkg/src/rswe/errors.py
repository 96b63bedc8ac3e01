"""Exception hierarchy for the rswe package."""


class RsweError(Exception):
    """Base class for all errors raised by rswe."""


# field construction
class BadDegreeError(RsweError):
    """Supplied modulus polynomial does not have the requested degree."""


class NotPrimitiveError(RsweError):
    """x is not a generator of the multiplicative group modulo the polynomial."""


# transforms
class NotPowerOfTwoError(RsweError):
    """Vector length is not a power of two."""


class ModeMismatchError(RsweError):
    """Operation applied to a vector in the wrong arithmetic mode."""


class LengthMismatchError(RsweError):
    """Operands have different lengths."""


# decoding core
class EmptyReceivedSetError(RsweError):
    """No received positions to work with."""


class FieldMismatchError(RsweError):
    """Precomputed transform stack belongs to a different field."""


class PointInReceivedSetError(RsweError):
    """Direct evaluation requested at a position that was received."""


class DuplicatePointError(RsweError):
    """The same position appears more than once."""


# codec
class BadLengthError(RsweError):
    """Message length does not match the codec parameters."""


class SymbolOutOfRangeError(RsweError):
    """A symbol value does not fit in the field."""


class NotEnoughSymbolsError(RsweError):
    """Fewer than k distinct positions supplied."""


class PositionOutOfRangeError(RsweError):
    """A position is outside the codeword."""


# CLI / shard format
class BadParamsError(RsweError):
    """Invalid command-line or codec parameters."""


class CorruptHeaderError(RsweError):
    """Shard header failed validation (magic, version or invariants)."""


class HeaderMismatchError(RsweError):
    """Shard headers are mutually inconsistent."""


class NotEnoughShardsError(RsweError):
    """Fewer than k usable shards supplied."""
