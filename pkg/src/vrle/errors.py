"""Exception hierarchy shared by all codec stages."""


class VRLEError(Exception):
    """Base class for every error raised by the codec."""


class FormatError(VRLEError):
    """The blob is not a container at all (bad magic or version)."""


class CorruptStreamError(VRLEError):
    """The blob looks like a container but its content is inconsistent."""


class EndOfStreamError(CorruptStreamError, IndexError):
    """A read went past the end of a bit or byte stream."""


class MappingError(VRLEError, KeyError):
    """A byte value has no entry in the byte map."""


class EmptyInputError(VRLEError, ValueError):
    """An operation that needs at least one symbol received none."""


class TableError(VRLEError):
    """A run value has no codeword in the code table."""


class IntegrityError(VRLEError):
    """Decompressed output differs from the original input."""
