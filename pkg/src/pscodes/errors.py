"""Typed decode failures shared across the codecs and scheme decoders."""


class DecodeFailure(Exception):
    """Base for every loud decoding failure; never raised for success paths."""


class GrsDecodeFailure(DecodeFailure):
    """GRS decoding could not produce a codeword within the guaranteed radius."""


class BchDecodeFailure(DecodeFailure):
    """BCH decoding could not produce a codeword within the designed radius."""


class NotACodeword(DecodeFailure):
    """Input is not a codeword of the realization being inverted."""


class NonBinaryDifference(DecodeFailure):
    """Consecutive mass differences left the set {0, 1}."""


class MembershipFailure(DecodeFailure):
    """Reconstructed string fails the parity-check membership test."""


class DominanceFailure(DecodeFailure):
    """Reconstructed string is not suffix-dominant."""


class SyndromeUnpackFailure(DecodeFailure):
    """A fixed-width binary field decoded to a value outside the field."""


class MultiDecodeFailure(DecodeFailure):
    """Per-string decode failure in the multi-string scheme."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"string {index}: {cause}")
        self.index = index
        self.cause = cause
