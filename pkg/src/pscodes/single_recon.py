"""The four single-string coding schemes over composition multisets.

Scheme 1: binary vectors whose prefix sums form a GRS codeword; no efficient
encoder exists (membership + exhaustive codebook at desk scale), but a
corrupted multiset decodes through the lower-mass sequence.  Scheme 2 expands
each field symbol into a unary block so that dominance holds structurally.
Scheme 3 is systematic: the prefix-weight syndromes of the data part ride
inside a BCH-protected parity tail read off group parities.  Scheme 4 feeds
the mass-difference string of the whole multiset to a binary code correcting
2t errors.

Every decoder finishes with a re-composition check against the received
multiset and reports a verdict; wrong answers are never silent within the
error budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bch import BchCode, bch_decode, bch_encode
from .compositions import (
    CompositionMultiset,
    NormalizedView,
    distance,
    normalize,
    prefix_weights,
)
from .dominance import DominantCode, is_suffix_dominant
from .errors import (
    DecodeFailure,
    DominanceFailure,
    MembershipFailure,
    NonBinaryDifference,
    NotACodeword,
    SyndromeUnpackFailure,
)
from .grs import GrsParams, grs_decode, grs_encode, grs_syndromes
from .results import ReconResult, Verdict


@dataclass(frozen=True)
class MassSequences:
    """Per-size smaller and larger masses of a 2-pair normalized view."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    @classmethod
    def of(cls, view: NormalizedView) -> "MassSequences":
        if view.h != 1:
            raise ValueError("mass sequences are defined for h = 1 views")
        return cls(tuple(view.lower()), tuple(view.upper()))


def mass_diff_string(view: NormalizedView) -> str:
    """Bit string of consecutive lower-mass differences mod 2.

    For an uncorrupted multiset of a suffix-dominant string this is the
    string itself; one corrupted mass flips at most two bits.
    """
    bits = []
    prev = 0
    for ms in view.masses:
        bits.append("1" if (ms[0] - prev) % 2 else "0")
        prev = ms[0]
    return "".join(bits)


def _verified(codeword: str, message, y: CompositionMultiset, t: int,
              consumed: tuple[int, ...]) -> ReconResult:
    recomposed = CompositionMultiset.of_string(codeword)
    if distance(recomposed, y) <= t:
        return ReconResult(Verdict.RECOVERED, codeword, message, consumed)
    return ReconResult(Verdict.DETECTED_MISMATCH, codeword, message, consumed)


def _failed(exc: DecodeFailure, consumed: tuple[int, ...]) -> ReconResult:
    return ReconResult(Verdict.FAILED, consumed_sizes=consumed, failure=exc)


# --------------------------------------------------------------------------
# Scheme 1: prefix sums in a GRS code, binary subcode by membership.

@dataclass(frozen=True)
class C1Params:
    grs: GrsParams
    t: int

    def __post_init__(self) -> None:
        if not 1 <= self.t < self.n / 2:
            raise ValueError(f"need 1 <= t < n/2, got t={self.t}, n={self.n}")
        if not 1 <= self.grs.r <= 2 * self.t:
            raise ValueError("parity count must lie in [1, 2t]")
        if self.grs.field.p < self.n + 1:
            raise ValueError(f"need p >= n + 1, got p={self.grs.field.p}")

    @property
    def n(self) -> int:
        return self.grs.n


def c1_params(p: int, n: int, t: int, t1: int = 0) -> C1Params:
    """Default parameters; t1 > 0 trades substitution budget for erasures
    (r = 2t - t1)."""
    if not 0 <= t1 <= t:
        raise ValueError("need 0 <= t1 <= t")
    return C1Params(GrsParams.default(p, n, 2 * t - t1), t)


def c1_membership(c: str, params: C1Params) -> bool:
    """True iff c is binary and its prefix sums have all-zero syndromes."""
    if len(c) != params.n or c.strip("01"):
        return False
    sums = prefix_weights(c)
    return not any(grs_syndromes(sums, params.grs))


def c1_codebook(params: C1Params, require_dominance: bool = True) -> list[str]:
    """Exhaustive scan of the binary subcode; desk scale only (n <= 20)."""
    if params.n > 20:
        raise ValueError("codebook enumeration is capped at n = 20")
    out = []
    for v in range(1 << params.n):
        c = format(v, f"0{params.n}b")
        if c1_membership(c, params) and (
            not require_dominance or is_suffix_dominant(c)
        ):
            out.append(c)
    return out


def c1_decode(y: CompositionMultiset, params: C1Params) -> ReconResult:
    """Recover a dominant binary member of the code from <= t group errors."""
    if y.n != params.n:
        raise ValueError(f"multiset ambient {y.n} != n = {params.n}")
    consumed = tuple(range(1, params.n + 1))
    view = normalize(y, 1)
    p = params.grs.field.p
    lower = [b % p for b in view.lower()]
    try:
        sums = grs_decode(lower, params.grs, erasures=[j - 1 for j in view.irregular])
        c = _bits_from_sums(sums, p)
        if not c1_membership(c, params):
            raise MembershipFailure("recovered string fails the parity checks")
        if not is_suffix_dominant(c):
            raise DominanceFailure("recovered string is not suffix-dominant")
    except DecodeFailure as exc:
        return _failed(exc, consumed)
    return _verified(c, c, y, params.t, consumed)


def _bits_from_sums(sums, p: int) -> str:
    bits = []
    prev = 0
    for s in sums:
        diff = (s - prev) % p
        if diff not in (0, 1):
            raise NonBinaryDifference(f"prefix sum difference {diff} is not a bit")
        bits.append("01"[diff])
        prev = s
    return "".join(bits)


# --------------------------------------------------------------------------
# Scheme 2: unary block expansion of a GRS-coded symbol vector.

@dataclass(frozen=True)
class C2Params:
    n1: int
    t: int
    grs: GrsParams

    def __post_init__(self) -> None:
        if not 1 <= self.t < self.n1 / 2:
            raise ValueError(f"need 1 <= t < n1/2, got t={self.t}, n1={self.n1}")
        if self.grs.n != self.n1 or self.grs.r != 2 * self.t:
            raise ValueError("inner code must have length n1 and 2t parity checks")
        if self.grs.field.p < self.n1 + 1:
            raise ValueError(f"need p >= n1 + 1, got p={self.grs.field.p}")

    @property
    def p(self) -> int:
        return self.grs.field.p

    @property
    def block(self) -> int:
        return 2 * self.p - 1

    @property
    def n(self) -> int:
        return self.n1 * self.block


def c2_params(p: int, n1: int, t: int) -> C2Params:
    return C2Params(n1, t, GrsParams.default(p, n1, 2 * t))


def c2_encode(msg: tuple[int, ...], params: C2Params) -> str:
    """Message symbols -> prefix-sum codeword -> unary blocks.

    Block j carries c_j = s_j - s_{j-1} ones in its low form (first half) or
    p + c_j ones in its high form (second half), so block weights sort light
    before heavy and every boundary prefix weight reduces to s_j mod p.
    """
    p = params.p
    sums = grs_encode(msg, params.grs)
    blocks = []
    prev = 0
    for j, s in enumerate(sums, start=1):
        c_j = (s - prev) % p
        prev = s
        ones = c_j if j <= (params.n1 + 1) // 2 else p + c_j
        blocks.append("1" * ones + "0" * (params.block - ones))
    return "".join(blocks)


def c2_decode(y: CompositionMultiset, params: C2Params) -> ReconResult:
    """Read boundary-group masses, decode the prefix-sum vector, and
    reassemble block weights from both ends."""
    if y.n != params.n:
        raise ValueError(f"multiset ambient {y.n} != n = {params.n}")
    p = params.p
    n1 = params.n1
    view = normalize(y, 1)
    boundaries = tuple(j * params.block for j in range(1, n1 + 1))
    lower = [view.masses_at(j)[0] % p for j in boundaries]
    erasures = [i for i, j in enumerate(boundaries) if j in view.irregular]
    try:
        sums = grs_decode(lower, params.grs, erasures=erasures)
    except DecodeFailure as exc:
        return _failed(exc, boundaries)
    half = (n1 + 1) // 2
    weights = [0] * (n1 + 1)
    prev = 0
    for j in range(1, half + 1):
        weights[j] = (sums[j - 1] - prev) % p
        prev = sums[j - 1]
    prev = 0
    for j in range(1, n1 - half + 1):
        sbar = (sums[n1 - 1] - sums[n1 - j - 1]) % p
        weights[n1 - j + 1] = p + (sbar - prev) % p
        prev = sbar
    codeword = "".join(
        "1" * w + "0" * (params.block - w) for w in weights[1:]
    )
    message = tuple(sums[: params.grs.k])
    return _verified(codeword, message, y, params.t, boundaries)


# --------------------------------------------------------------------------
# Scheme 3: systematic data part + BCH-protected syndrome/parity tail.

@dataclass(frozen=True)
class C3Params:
    n1: int
    n2: int
    t: int
    dominant: DominantCode
    bch: BchCode
    grs: GrsParams

    def __post_init__(self) -> None:
        report = c3_validate(self)
        if report.problems:
            raise ValueError("; ".join(report.problems))

    @property
    def p(self) -> int:
        return self.grs.field.p

    @property
    def n(self) -> int:
        return self.n1 + 2 * self.n2

    @property
    def sym_width(self) -> int:
        """Bits per field symbol in the packed syndrome string."""
        return (self.p - 1).bit_length()

    @property
    def packed_len(self) -> int:
        return 2 * self.t * self.sym_width


@dataclass(frozen=True)
class C3Report:
    """Validation outcome: hard requirements and the advisory window.

    ``fit`` is (bch dimension, packed syndrome length): the first must be at
    least the second.  ``bch_bound`` is (2t - 1, 2^ceil(m/2) + 1).  The
    strict asymptotic window is reported but only warned about; it is
    unsatisfiable at desk scale.
    """

    fit: tuple[int, int]
    bch_bound: tuple[int, int]
    strict_window_ok: bool
    problems: tuple[str, ...]
    warnings: tuple[str, ...]


def c3_validate(params: C3Params) -> C3Report:
    n1, n2, t, p = params.n1, params.n2, params.t, params.p
    problems = []
    warnings = []
    m = (n2 + 1).bit_length() - 1
    if n2 + 1 != 1 << m:
        problems.append(f"n2 + 1 = {n2 + 1} is not a power of 2")
    if p < n1 + 1:
        problems.append(f"need p >= n1 + 1, got p={p}")
    if params.dominant.n1 != n1:
        problems.append("dominant code length != n1")
    if params.bch.n != n2 or params.bch.t != t:
        problems.append("BCH code must have length n2 and capability t")
    if params.grs.n != n1 or params.grs.r != 2 * t:
        problems.append("GRS code must have length n1 and 2t parity checks")
    if params.grs.alphas != tuple(range(1, n1 + 1)) or set(params.grs.omegas) != {1}:
        problems.append("scheme 3 fixes alphas = 1..n1 and all-one multipliers")
    fit = (params.bch.dimension, params.packed_len)
    if fit[0] < fit[1]:
        problems.append(
            f"packed syndromes ({fit[1]} bits) do not fit the BCH dimension {fit[0]}"
        )
    bound = (2 * t - 1, (1 << ((m + 1) // 2)) + 1)
    if bound[0] > bound[1]:
        problems.append(f"BCH parameter bound violated: 2t-1 = {bound[0]} > {bound[1]}")
    strict = (4 * (math.log2(n1) + 1) ** 2 < n2 < n1) and 2 * t < math.sqrt(n2)
    if not strict:
        warnings.append(
            "strict asymptotic window 4(log n1 + 1)^2 < n2 < n1, 2t < sqrt(n2) "
            "does not hold (expected at desk scale)"
        )
    return C3Report(fit, bound, strict, tuple(problems), tuple(warnings))


def c3_params(n1: int, p: int, n2: int, t: int,
              dominant_realization: str = "interleave") -> C3Params:
    from .bch import bch_build
    from .dominance import make_dominant_code

    m = (n2 + 1).bit_length() - 1
    if n2 + 1 != 1 << m:
        raise ValueError(f"n2 + 1 = {n2 + 1} is not a power of 2")
    return C3Params(
        n1, n2, t,
        make_dominant_code(n1, dominant_realization),
        bch_build(m, t),
        GrsParams.default(p, n1, 2 * t),
    )


def _pack_symbols(symbols, width: int) -> str:
    return "".join(format(s, f"0{width}b") for s in symbols)


def _unpack_symbols(bits: str, width: int, p: int) -> tuple[int, ...]:
    out = []
    for i in range(0, len(bits), width):
        v = int(bits[i: i + width], 2)
        if v >= p:
            raise SyndromeUnpackFailure(f"packed value {v} >= p = {p}")
        out.append(v)
    return tuple(out)


def _parity_tail(v: str) -> str:
    """Invert p_j = (v_j + sum_{i<j} p_i) mod 2: prefix sums of p equal v."""
    bits = []
    prev = "0"
    for ch in v:
        bits.append("1" if ch != prev else "0")
        prev = ch
    return "".join(bits)


def c3_encode(msg: str, params: C3Params) -> str:
    w = params.dominant.encode(msg)
    x = prefix_weights(w)
    synd = grs_syndromes(x, params.grs)
    packed = _pack_symbols(synd, params.sym_width)
    padded = packed + "0" * (params.bch.dimension - len(packed))
    v = bch_encode(padded, params.bch)
    tail = _parity_tail(v)
    return "0" * params.n2 + w + tail[::-1]


def c3_decode(y: CompositionMultiset, params: C3Params) -> ReconResult:
    """Group parities -> BCH -> true syndromes; masses -> coset GRS -> data."""
    if y.n != params.n:
        raise ValueError(f"multiset ambient {y.n} != n = {params.n}")
    n1, n2, p = params.n1, params.n2, params.p
    consumed = tuple(range(1, n2 + n1 + 1))
    view = normalize(y, 1)
    parity = "".join(
        "1" if (view.masses_at(j)[0] + view.masses_at(j)[1]) % 2 else "0"
        for j in range(1, n2 + 1)
    )
    try:
        v, padded = bch_decode(parity, params.bch)
        synd = _unpack_symbols(padded[: params.packed_len], params.sym_width, p)
        lower = [view.masses_at(n2 + j)[0] % p for j in range(1, n1 + 1)]
        erasures = [j - 1 for j in range(1, n1 + 1) if n2 + j in view.irregular]
        x = grs_decode(lower, params.grs, true_syndromes=synd, erasures=erasures)
        w = _bits_from_sums(x, p)
        if not is_suffix_dominant(w):
            raise DominanceFailure("data part is not suffix-dominant")
        msg = params.dominant.decode(w)
    except DecodeFailure as exc:
        return _failed(exc, consumed)
    codeword = "0" * n2 + w + _parity_tail(v)[::-1]
    return _verified(codeword, msg, y, params.t, consumed)


# --------------------------------------------------------------------------
# Scheme 4: mass-difference string into a binary code correcting 2t errors.

@dataclass(frozen=True)
class C4Params:
    n1: int
    n2: int
    t: int
    dominant: DominantCode
    good: BchCode

    def __post_init__(self) -> None:
        if not self.n1 < self.n2:
            raise ValueError("need n1 < n2")
        if not 1 <= self.t < self.n2 / 4:
            raise ValueError(f"need 1 <= t < n2/4, got t={self.t}, n2={self.n2}")
        if self.dominant.n1 != self.n1:
            raise ValueError("dominant code length != n1")
        if self.good.n != self.n2 or self.good.k != self.n1:
            raise ValueError("outer code must be systematic (n2, n1)")
        if self.good.radius < 2 * self.t:
            raise ValueError(
                f"outer code corrects {self.good.radius} < 2t = {2 * self.t} errors"
            )

    @property
    def n(self) -> int:
        return 2 * self.n2 - self.n1


def c4_params(n1: int, n2: int, t: int, good_t: int,
              dominant_realization: str = "enumerative") -> C4Params:
    from .bch import bch_build
    from .dominance import make_dominant_code

    m = (n2 + 1).bit_length() - 1
    if n2 + 1 != 1 << m:
        raise ValueError(f"n2 + 1 = {n2 + 1} is not a power of 2 (BCH realization)")
    return C4Params(n1, n2, t, make_dominant_code(n1, dominant_realization),
                    bch_build(m, good_t))


def c4_encode(msg: str, params: C4Params) -> str:
    w = params.dominant.encode(msg)
    return "0" * (params.n2 - params.n1) + bch_encode(w, params.good)


def c4_decode(y: CompositionMultiset, params: C4Params) -> ReconResult:
    if y.n != params.n:
        raise ValueError(f"multiset ambient {y.n} != n = {params.n}")
    consumed = tuple(range(params.n2 - params.n1, params.n + 1))
    view = normalize(y, 1)
    noisy = mass_diff_string(view)[-params.n2:]
    try:
        codetail, w = bch_decode(noisy, params.good)
        if not is_suffix_dominant(w):
            raise DominanceFailure("data part is not suffix-dominant")
        msg = params.dominant.decode(w)
    except DecodeFailure as exc:
        return _failed(exc, consumed)
    codeword = "0" * (params.n2 - params.n1) + codetail
    return _verified(codeword, msg, y, params.t, consumed)
