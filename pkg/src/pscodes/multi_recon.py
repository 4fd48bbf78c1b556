"""Joint coding of h equal-length strings via interleaving.

The map phi_k takes h information strings of length k to h coded strings of
length k(h+1), inserting sorted "short strings" between the information bits
so that at every prefix length l up to the middle, the 2h weights
wt(c_1[l]) <= wt(rev(c_1)[l]) <= ... <= wt(c_h[l]) <= wt(rev(c_h)[l]) form a
chain.  That total order lets a decoder read the h prefix- and h
suffix-weight sequences straight off the sorted masses of the composition
multiset union, error-free or (with the information strings drawn from an
error-correcting code) under a budget of composition errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import CompositionMultiset, check_bits, normalize, prefix_weights
from .errors import DecodeFailure, MultiDecodeFailure, NonBinaryDifference


@dataclass(frozen=True)
class PhiSpec:
    """Shape of one interleaving: h strings of k information bits each."""

    h: int
    k: int

    def __post_init__(self) -> None:
        if self.h < 1 or self.k < 1:
            raise ValueError("need h >= 1 and k >= 1")

    @property
    def n(self) -> int:
        return self.k * (self.h + 1)


@dataclass(frozen=True)
class PhiTrace:
    """Intermediate arrays of one even-k encoding.

    halves w_1..w_2h alternate first-half / reversed-second-half per input;
    indicators r_1..r_{k/2} mark the column positions where consecutive
    halves drop from 1 to 0; shorts[s-1][j-1] is the sorted padding block
    u_{s,j}; interleaved v_1..v_2h are the half-codewords.
    """

    halves: tuple[str, ...]
    indicators: tuple[str, ...]
    shorts: tuple[tuple[str, ...], ...]
    interleaved: tuple[str, ...]


def phi_trace(zs: list[str], spec: PhiSpec) -> PhiTrace:
    h, k = spec.h, spec.k
    if k % 2:
        raise ValueError("trace is defined for even k")
    _check_inputs(zs, spec)
    half = k // 2
    halves = []
    for z in zs:
        halves.append(z[:half])
        halves.append(z[::-1][:half])
    indicators = []
    for j in range(half):
        prev = 0
        bits = []
        for s in range(2 * h):
            cur = int(halves[s][j])
            bits.append("1" if cur < prev else "0")
            prev = cur
        r = "".join(bits)
        assert r.count("1") <= h
        indicators.append(r)
    shorts = []
    for s in range(1, 2 * h + 1):
        row = []
        for j in range(half):
            w = indicators[j][:s].count("1")
            row.append("0" * (h - w) + "1" * w)
        shorts.append(tuple(row))
    interleaved = []
    for s in range(2 * h):
        parts = []
        for j in range(half):
            parts.append(shorts[s][j])
            parts.append(halves[s][j])
        interleaved.append("".join(parts))
    return PhiTrace(tuple(halves), tuple(indicators), tuple(shorts), tuple(interleaved))


def _check_inputs(zs: list[str], spec: PhiSpec) -> None:
    if len(zs) != spec.h:
        raise ValueError(f"expected {spec.h} strings, got {len(zs)}")
    for z in zs:
        check_bits(z)
        if len(z) != spec.k:
            raise ValueError(f"string length {len(z)} != k = {spec.k}")


def phi_encode(zs: list[str], spec: PhiSpec) -> list[str]:
    """Encode h length-k strings into h length-k(h+1) strings."""
    h, k = spec.h, spec.k
    _check_inputs(zs, spec)
    if k % 2 == 0:
        trace = phi_trace(zs, spec)
        return [trace.interleaved[2 * i] + trace.interleaved[2 * i + 1][::-1]
                for i in range(h)]
    # Odd k: duplicate the middle bit, encode with k+1, delete the block that
    # the duplicate produced (coordinates q(h+1)+1 .. q(h+1)+h+1, 1-based).
    q = (k + 1) // 2
    lifted = [z[:q] + z[q - 1] + z[q:] for z in zs]
    coded = phi_encode(lifted, PhiSpec(h, k + 1))
    lo, hi = q * (h + 1), (q + 1) * (h + 1)
    return [c[:lo] + c[hi:] for c in coded]


def phi_extract(c: str, spec: PhiSpec) -> str:
    """Invert the interleaving layout: read the information bits out of one
    coded string (prefix-side samples ascending, then mirrored suffix-side
    samples descending)."""
    h, k = spec.h, spec.k
    if len(c) != spec.n:
        raise ValueError(f"coded length {len(c)} != {spec.n}")
    step = h + 1
    first = [c[step * j - 1] for j in range(1, (k + 1) // 2 + 1)]
    rev = c[::-1]
    second = [rev[step * j - 1] for j in range(k // 2, 0, -1)]
    return "".join(first) + "".join(second)


def dominance_chain_check(cs: list[str]) -> bool:
    """True iff the 2h-term prefix/suffix weight chain holds for every
    l <= ceil(n/2)."""
    n = len(cs[0])
    for c in cs:
        if len(c) != n:
            raise ValueError("strings must share one length")
    seqs = []
    for c in cs:
        seqs.append(prefix_weights(c))
        seqs.append(prefix_weights(c[::-1]))
    half = (n + 1) // 2
    for l in range(half):
        prev = 0
        for seq in seqs:
            if seq[l] < prev:
                return False
            prev = seq[l]
    return True


def _strings_from_view(view, spec: PhiSpec, mod2: bool) -> list[str]:
    """Rebuild the h coded strings from sorted masses via the weight chain.

    Slot 2i-1 of each sorted group is string i's prefix weight, slot 2i its
    suffix weight.  With mod2=True the reconstruction keeps only the parity
    of each difference (the error-tolerant path); otherwise differences must
    be bits and any other value is a loud failure.
    """
    h, n = spec.h, spec.n
    out = []
    for i in range(h):
        lo = 2 * i
        hi = 2 * i + 1
        bits = [""] * n
        prev = 0
        for l in range(1, (n + 1) // 2 + 1):
            cur = view.masses_at(l)[lo]
            diff = cur - prev
            prev = cur
            if mod2:
                bits[l - 1] = "1" if diff % 2 else "0"
            else:
                if diff not in (0, 1):
                    raise NonBinaryDifference(
                        f"prefix mass difference {diff} at size {l}, string {i + 1}"
                    )
                bits[l - 1] = "01"[diff]
        prev = 0
        for l in range(1, n // 2 + 1):
            cur = view.masses_at(l)[hi]
            diff = cur - prev
            prev = cur
            if mod2:
                bits[n - l] = "1" if diff % 2 else "0"
            else:
                if diff not in (0, 1):
                    raise NonBinaryDifference(
                        f"suffix mass difference {diff} at size {l}, string {i + 1}"
                    )
                bits[n - l] = "01"[diff]
        out.append("".join(bits))
    return out


def multi_decode_free(x: CompositionMultiset, spec: PhiSpec) -> list[str]:
    """Recover z_1..z_h from an error-free multiset union M(phi(z_1..z_h))."""
    if x.n != spec.n:
        raise ValueError(f"multiset ambient {x.n} != coded length {spec.n}")
    view = normalize(x, spec.h)
    coded = _strings_from_view(view, spec, mod2=False)
    return [phi_extract(c, spec) for c in coded]


def multi_decode_errors(y: CompositionMultiset, spec: PhiSpec, good) -> list[str]:
    """Recover codeword strings z_1..z_h from at most t composition errors,
    where every z_i belongs to ``good`` (correction radius >= 4t)."""
    if y.n != spec.n:
        raise ValueError(f"multiset ambient {y.n} != coded length {spec.n}")
    if good.n != spec.k:
        raise ValueError(f"good code length {good.n} != k = {spec.k}")
    view = normalize(y, spec.h)
    noisy = _strings_from_view(view, spec, mod2=True)
    out = []
    for i, c in enumerate(noisy):
        estimate = phi_extract(c, spec)
        try:
            codeword, _ = good.decode(estimate)
        except DecodeFailure as exc:
            raise MultiDecodeFailure(i, exc) from exc
        out.append(codeword)
    return out
