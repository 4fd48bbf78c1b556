"""Composition multisets of binary strings.

A bit string is an ASCII str over '0'/'1'.  The composition of a string of
length j with b ones is the ordered pair (j - b, b); j is the *size* and b
the *mass*.  M(c) collects the compositions of every prefix and every suffix
of c, grouped by size.  All operations here are side-effect free; multisets
are treated as immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

Pair = tuple[int, int]


def check_bits(s: str) -> str:
    if not s:
        raise ValueError("empty bit string")
    if s.strip("01"):
        raise ValueError(f"not a binary string: {s!r}")
    return s


def weight(s: str) -> int:
    return s.count("1")


def prefix_weights(s: str) -> list[int]:
    """Running one-counts [wt(s[1]), ..., wt(s[n])]."""
    acc = 0
    out = []
    for ch in s:
        acc += ch == "1"
        out.append(acc)
    return out


def composition(s: str) -> Pair:
    """(zero-count, one-count) of a nonempty bit string."""
    check_bits(s)
    b = s.count("1")
    return (len(s) - b, b)


class CompositionMultiset:
    """Element of the space of size-grouped composition multisets.

    ``groups`` maps a size j in [1, n] to the multiset of pairs (a, b) with
    a + b = j, kept sorted by mass; empty groups are not stored.  Canonical
    serialization sorts by (size, mass, zero-count), so byte-identical files
    correspond to equal multisets.
    """

    __slots__ = ("n", "groups")

    def __init__(self, n: int, groups: dict[int, list[Pair]]):
        if n < 1:
            raise ValueError("ambient length must be >= 1")
        self.n = n
        self.groups = groups
        for j, pairs in groups.items():
            if not 1 <= j <= n:
                raise ValueError(f"group size {j} outside [1, {n}]")
            prev = -1
            for a, b in pairs:
                if a < 0 or b < 0 or a + b != j:
                    raise ValueError(f"pair ({a},{b}) does not have size {j}")
                if b < prev:
                    raise ValueError(f"group {j} is not in canonical mass order")
                prev = b

    @classmethod
    def of_string(cls, c: str) -> "CompositionMultiset":
        """M(c): the multiset union of all prefix and suffix compositions."""
        return cls.of_strings([c])

    @classmethod
    def of_strings(cls, cs: list[str]) -> "CompositionMultiset":
        """M(c_1, ..., c_h): multiset union over h equal-length strings."""
        if not cs:
            raise ValueError("need at least one string")
        n = len(cs[0])
        groups: dict[int, list[Pair]] = {j: [] for j in range(1, n + 1)}
        for c in cs:
            check_bits(c)
            if len(c) != n:
                raise ValueError("strings must share one length")
            pw = prefix_weights(c)
            sw = prefix_weights(c[::-1])
            for j in range(1, n + 1):
                groups[j].append((j - pw[j - 1], pw[j - 1]))
                groups[j].append((j - sw[j - 1], sw[j - 1]))
        for pairs in groups.values():
            pairs.sort(key=lambda p: p[1])
        return cls(n, groups)

    def group(self, j: int) -> list[Pair]:
        return self.groups.get(j, [])

    def copy_with(self, j: int, pairs: list[Pair]) -> "CompositionMultiset":
        """New multiset sharing all groups except size j, replaced by ``pairs``."""
        groups = dict(self.groups)
        if pairs:
            groups[j] = sorted(pairs, key=lambda p: p[1])
        else:
            groups.pop(j, None)
        return CompositionMultiset(self.n, groups)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompositionMultiset):
            return NotImplemented
        return self.n == other.n and self.groups == other.groups

    def __repr__(self) -> str:
        filled = sum(1 for v in self.groups.values() if v)
        return f"CompositionMultiset(n={self.n}, nonempty_groups={filled})"

    def to_text(self) -> str:
        lines = [f"n={self.n}"]
        for j in sorted(self.groups):
            pairs = self.groups[j]
            if pairs:
                body = " ".join(f"{a},{b}" for a, b in pairs)
                lines.append(f"{j}: {body}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CompositionMultiset":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or not lines[0].startswith("n="):
            raise ValueError("multiset file must start with an 'n=<int>' header")
        n = int(lines[0][2:])
        groups: dict[int, list[Pair]] = {}
        for ln in lines[1:]:
            head, _, body = ln.partition(":")
            j = int(head)
            if not 1 <= j <= n:
                raise ValueError(f"group size {j} outside [1, {n}]")
            pairs = []
            for tok in body.split():
                a_s, _, b_s = tok.partition(",")
                a, b = int(a_s), int(b_s)
                if a + b != j:
                    raise ValueError(f"pair ({a},{b}) does not have size {j}")
                pairs.append((a, b))
            if j in groups:
                raise ValueError(f"duplicate group line for size {j}")
            pairs.sort(key=lambda p: p[1])
            if pairs:
                groups[j] = pairs
        return cls(n, groups)


def distance(x: CompositionMultiset, y: CompositionMultiset) -> int:
    """Number of sizes whose groups differ as multisets."""
    if x.n != y.n:
        raise ValueError(f"ambient lengths differ: {x.n} != {y.n}")
    d = 0
    for j in x.groups.keys() | y.groups.keys():
        if x.groups.get(j, _EMPTY) != y.groups.get(j, _EMPTY):
            d += 1
    return d


_EMPTY: list[Pair] = []


@dataclass(frozen=True)
class NormalizedView:
    """Decoder-side view: exactly 2h masses per size, sorted ascending.

    ``irregular`` records the sizes whose original group cardinality was not
    2h (the decoders treat those as erasures).
    """

    n: int
    h: int
    masses: tuple[tuple[int, ...], ...]
    irregular: frozenset[int]

    def masses_at(self, j: int) -> tuple[int, ...]:
        return self.masses[j - 1]

    def lower(self) -> list[int]:
        """Smallest mass per size (the b_j sequence for h = 1)."""
        return [m[0] for m in self.masses]

    def upper(self) -> list[int]:
        """Largest mass per size (the b-bar sequence for h = 1)."""
        return [m[-1] for m in self.masses]

    def to_multiset(self) -> CompositionMultiset:
        groups = {}
        for j, ms in enumerate(self.masses, start=1):
            groups[j] = [(j - b, b) for b in ms]
        return CompositionMultiset(self.n, groups)


def normalize(y: CompositionMultiset, h: int = 1) -> NormalizedView:
    """Force every size group to exactly 2h masses.

    Oversized groups drop their largest masses; undersized groups are padded
    with mass-0 pairs.  Neither step can increase the distance to a multiset
    whose groups all have cardinality 2h.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    want = 2 * h
    rows = []
    irregular = []
    for j in range(1, y.n + 1):
        pairs = y.groups.get(j, _EMPTY)
        ms = [b for _, b in pairs]
        if len(ms) != want:
            irregular.append(j)
            if len(ms) > want:
                ms = ms[:want]
            else:
                ms = [0] * (want - len(ms)) + ms
        rows.append(tuple(ms))
    return NormalizedView(y.n, h, tuple(rows), frozenset(irregular))
