"""Suffix-dominant strings and invertible codes into them.

A string is suffix-dominant when every prefix weighs no more than the
same-length suffix; checking lengths up to the middle suffices, because the
suffix weight identity wt(rev(c)[j]) = wt(c) - wt(c[n-j]) mirrors the
condition onto the upper half.  Dominance is what lets composition decoders
tell prefix masses from suffix masses.

Two realizations of an invertible code into the dominant set:

* ``enumerative`` -- the message indexes the lexicographically sorted set of
  all dominant strings of length n1 (near-optimal redundancy; O(2^n1) build,
  capped at n1 <= 20);
* ``interleave``  -- the h=1 interleaving map (rate 1/2, linear time, any
  even n1).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .compositions import check_bits, prefix_weights
from .errors import NotACodeword
from .multi_recon import PhiSpec, phi_encode, phi_extract

ENUMERATIVE = "enumerative"
INTERLEAVE = "interleave"

_MAX_ENUMERATIVE = 20


def is_suffix_dominant(c: str) -> bool:
    """wt(c[j]) <= wt(rev(c)[j]) for all j (checked up to the middle)."""
    check_bits(c)
    n = len(c)
    pw = prefix_weights(c)
    sw = prefix_weights(c[::-1])
    return all(pw[j] <= sw[j] for j in range((n + 1) // 2))


@dataclass(frozen=True)
class DominantCode:
    """Invertible map from message bits onto suffix-dominant strings."""

    n1: int
    realization: str
    message_length: int
    codebook: tuple[int, ...] = field(default=(), repr=False)

    @property
    def size(self) -> int:
        """Number of codewords reachable by encode."""
        return 1 << self.message_length

    def encode(self, msg: str) -> str:
        if len(msg) != self.message_length:
            raise ValueError(
                f"message length {len(msg)} != {self.message_length}"
            )
        if self.realization == ENUMERATIVE:
            index = int(msg, 2) if msg else 0
            return format(self.codebook[index], f"0{self.n1}b")
        return phi_encode([msg], PhiSpec(1, self.n1 // 2))[0]

    def decode(self, c: str) -> str:
        check_bits(c)
        if len(c) != self.n1:
            raise NotACodeword(f"length {len(c)} != n1 = {self.n1}")
        if self.realization == ENUMERATIVE:
            value = int(c, 2)
            index = bisect_left(self.codebook, value)
            if index >= len(self.codebook) or self.codebook[index] != value:
                raise NotACodeword("string is not suffix-dominant")
            if index >= self.size:
                raise NotACodeword("codeword is outside the message range")
            if self.message_length == 0:
                return ""
            return format(index, f"0{self.message_length}b")
        spec = PhiSpec(1, self.n1 // 2)
        msg = phi_extract(c, spec)
        if phi_encode([msg], spec)[0] != c:
            raise NotACodeword("string is not in the image of the interleaving map")
        return msg


def enumerative_code(n1: int) -> DominantCode:
    """Codebook of every suffix-dominant string of length n1, in lexicographic
    order (0 < 1); the message is an index into it."""
    if not 1 <= n1 <= _MAX_ENUMERATIVE:
        raise ValueError(f"enumerative realization supports n1 in 1..{_MAX_ENUMERATIVE}")
    book = [v for v in range(1 << n1) if is_suffix_dominant(format(v, f"0{n1}b"))]
    return DominantCode(n1, ENUMERATIVE, len(book).bit_length() - 1, tuple(book))


def interleave_code(n1: int) -> DominantCode:
    if n1 < 2 or n1 % 2:
        raise ValueError("interleave realization needs an even n1 >= 2")
    return DominantCode(n1, INTERLEAVE, n1 // 2)


def make_dominant_code(n1: int, realization: str) -> DominantCode:
    if realization == ENUMERATIVE:
        return enumerative_code(n1)
    if realization == INTERLEAVE:
        return interleave_code(n1)
    raise ValueError(f"unknown realization {realization!r}")
