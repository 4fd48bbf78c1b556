"""Decode verdicts and the result record returned by scheme decoders."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DecodeFailure


class Verdict(str, enum.Enum):
    RECOVERED = "recovered"
    FAILED = "failed"
    DETECTED_MISMATCH = "detected-mismatch"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass
class ReconResult:
    """Outcome of one scheme decode.

    ``consumed_sizes`` lists the sizes whose groups the decoder actually read;
    ``failure`` carries the typed exception when verdict is FAILED.  A decoder
    never returns a wrong answer silently: either the verdict is RECOVERED and
    the re-composition check passed, or the outcome is loud.
    """

    verdict: Verdict
    codeword: str | None = None
    message: object = None
    consumed_sizes: tuple[int, ...] = ()
    failure: DecodeFailure | None = None

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.RECOVERED
