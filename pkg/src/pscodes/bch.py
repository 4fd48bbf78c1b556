"""Binary narrow-sense primitive BCH codes of length 2^m - 1.

Codewords are bit strings; string position i carries the coefficient of
x^(n-1-i), so systematic encoding places the message in the first
``dimension`` positions.  Decoding is Berlekamp-Massey + Chien search with a
mandatory syndrome re-check; anything beyond the radius fails loudly.

A built code also serves as the desk-scale realization of the abstract
"good code" interface consumed by the larger constructions: length ``n``,
``dimension``, declared correction ``radius``, and systematic
encode/decode.  (Asymptotic goodness is a contract of that interface, not a
property any fixed BCH code can exhibit.)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BchDecodeFailure
from .galois import BinaryExtField


def poly2_mul(a: int, b: int) -> int:
    """Carry-less product of bit-packed polynomials over GF(2)."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly2_mod(a: int, g: int) -> int:
    dg = g.bit_length() - 1
    while a.bit_length() - 1 >= dg and a:
        a ^= g << (a.bit_length() - 1 - dg)
    return a


def cyclotomic_coset(e: int, n: int) -> tuple[int, ...]:
    """Coset of e under doubling mod n, starting from its smallest member."""
    seen = []
    x = e % n
    while x not in seen:
        seen.append(x)
        x = 2 * x % n
    return tuple(sorted(seen))


def minimal_polynomial(field: BinaryExtField, e: int) -> int:
    """Minimal polynomial of alpha^e over GF(2), bit-packed."""
    n = field.order - 1
    poly = [1]
    for d in cyclotomic_coset(e, n):
        root = field.alpha_pow(d)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= field.mul(c, root)
        poly = nxt
    packed = 0
    for i, c in enumerate(poly):
        if c not in (0, 1):
            raise AssertionError("minimal polynomial has a coefficient outside GF(2)")
        packed |= c << i
    return packed


@dataclass(frozen=True)
class BchCode:
    """Narrow-sense BCH code with designed distance 2t + 1."""

    field: BinaryExtField
    t: int
    gen_poly: int
    dimension: int
    lemma_bound_ok: bool
    _synd_tables: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        # alpha^(j*(n-1-i)) per syndrome index j and string position i.
        tables = []
        for j in range(1, 2 * self.t + 1):
            tables.append(tuple(self.field.alpha_pow(j * (n - 1 - i)) for i in range(n)))
        object.__setattr__(self, "_synd_tables", tuple(tables))

    @property
    def n(self) -> int:
        return self.field.order - 1

    @property
    def k(self) -> int:
        return self.dimension

    @property
    def radius(self) -> int:
        return self.t

    def encode(self, msg: str) -> str:
        return bch_encode(msg, self)

    def decode(self, word: str) -> tuple[str, str]:
        return bch_decode(word, self)

    def __repr__(self) -> str:
        return f"BchCode(n={self.n}, k={self.dimension}, t={self.t})"


def bch_build(m: int, t: int) -> BchCode:
    """Build the length-(2^m - 1) code from the minimal polynomials of
    alpha, alpha^3, ..., alpha^(2t-1).

    Inside the parameter window 2t - 1 <= 2^ceil(m/2) + 1 the dimension is
    exactly n - m*t (recorded in ``lemma_bound_ok``); outside it the code is
    still built from the true generator polynomial, which may be shorter.
    """
    fld = BinaryExtField(m)
    n = fld.order - 1
    if t < 1 or 2 * t + 1 > n:
        raise ValueError(f"designed distance {2 * t + 1} infeasible for length {n}")
    seen: set[tuple[int, ...]] = set()
    gen = 1
    for e in range(1, 2 * t, 2):
        coset = cyclotomic_coset(e, n)
        if coset in seen:
            continue
        seen.add(coset)
        gen = poly2_mul(gen, minimal_polynomial(fld, e))
    dim = n - (gen.bit_length() - 1)
    if dim < 1:
        raise ValueError(f"generator degree {n - dim} leaves no message bits")
    assert dim >= n - m * t
    ok = 2 * t - 1 <= (1 << ((m + 1) // 2)) + 1
    if ok:
        assert dim == n - m * t
    return BchCode(fld, t, gen, dim, ok)


def bch_encode(msg: str, code: BchCode) -> str:
    """Systematic encoding; the output is a multiple of the generator."""
    if len(msg) != code.dimension:
        raise ValueError(f"message length {len(msg)} != dimension {code.dimension}")
    m_int = int(msg, 2) if msg else 0
    shifted = m_int << (code.n - code.dimension)
    word = shifted ^ poly2_mod(shifted, code.gen_poly)
    return format(word, f"0{code.n}b")


def bch_syndromes(word: str, code: BchCode) -> tuple[int, ...]:
    support = [i for i, ch in enumerate(word) if ch == "1"]
    out = []
    for table in code._synd_tables:
        acc = 0
        for i in support:
            acc ^= table[i]
        out.append(acc)
    return tuple(out)


def bch_decode(word: str, code: BchCode) -> tuple[str, str]:
    """Return (nearest codeword within radius t, its systematic message)."""
    n = code.n
    if len(word) != n:
        raise ValueError(f"word length {len(word)} != n = {n}")
    fld = code.field
    synd = bch_syndromes(word, code)
    if any(synd):
        lam = _bm_gf2m(synd, fld)
        deg = len(lam) - 1
        while deg > 0 and lam[deg] == 0:
            deg -= 1
        if deg == 0 or deg > code.t:
            raise BchDecodeFailure(f"locator degree {deg} outside 1..{code.t}")
        flips = []
        for d in range(n):
            x = fld.alpha_pow(-d)
            acc = 0
            for c in reversed(lam):
                acc = fld.mul(acc, x) ^ c
            if acc == 0:
                flips.append(n - 1 - d)
        if len(flips) != deg:
            raise BchDecodeFailure(
                f"locator degree {deg} but {len(flips)} roots found"
            )
        bits = list(word)
        for i in flips:
            bits[i] = "0" if bits[i] == "1" else "1"
        word = "".join(bits)
        if any(bch_syndromes(word, code)):
            raise BchDecodeFailure("post-decode syndrome re-check failed")
    return word, word[: code.dimension]


def _bm_gf2m(synd: tuple[int, ...], fld: BinaryExtField) -> list[int]:
    c = [1]
    b = [1]
    L = 0
    m = 1
    bb = 1
    for i, s in enumerate(synd):
        d = s
        for j in range(1, min(L, len(c) - 1) + 1):
            d ^= fld.mul(c[j], synd[i - j])
        if d == 0:
            m += 1
            continue
        coef = fld.div(d, bb)
        shifted = [0] * m + b
        width = max(len(c), len(shifted))
        new_c = [
            (c[j] if j < len(c) else 0) ^ fld.mul(coef, shifted[j] if j < len(shifted) else 0)
            for j in range(width)
        ]
        if 2 * L <= i:
            b, bb, L, m = c, d, i + 1 - L, 1
        else:
            m += 1
        c = new_c
    del c[L + 1:]
    return c
