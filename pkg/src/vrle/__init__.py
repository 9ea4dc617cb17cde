"""Run-length compression made effective on arbitrary bytes.

Pipeline: bijective Burrows-Wheeler-Scott transform, frequency-ranked byte
remapping, vertical bit-plane reading, binary RLE with 8-bit runs, and
canonical Huffman coding of the runs.
"""
from .container import compress, decompress, inspect
from .errors import (CorruptStreamError, EmptyInputError, EndOfStreamError, FormatError,
                     IntegrityError, MappingError, TableError, VRLEError)

__all__ = [
    "compress", "decompress", "inspect",
    "VRLEError", "FormatError", "CorruptStreamError", "EndOfStreamError",
    "MappingError", "EmptyInputError", "TableError", "IntegrityError",
]
