"""Generalized Reed-Solomon codec over a prime field.

The code of length n with r parity checks is defined by syndromes
S_l = sum_i omega_i * alpha_i^l * y_i for l = 0..r-1; codewords are the
vectors with all syndromes zero.  Decoding handles errors, erasures
(2e + f <= r), and an externally supplied true-syndrome vector: in that mode
the decoder targets the coset with the given syndromes instead of the code
itself.  Failure is always loud (GrsDecodeFailure); a post-decode syndrome
re-check is mandatory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GrsDecodeFailure
from .galois import PrimeField

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GrsParams:
    """Immutable code description: field, length, parity count, alphas, omegas."""

    field: PrimeField
    n: int
    r: int
    alphas: Vector
    omegas: Vector
    _powers: tuple[Vector, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = self.field.p
        if not 1 <= self.r < self.n:
            raise ValueError(f"need 1 <= r < n, got r={self.r}, n={self.n}")
        if len(self.alphas) != self.n or len(self.omegas) != self.n:
            raise ValueError("alphas/omegas must have length n")
        if len(set(self.alphas)) != self.n:
            raise ValueError("evaluation points must be pairwise distinct")
        for a in self.alphas:
            if not 1 <= a < p:
                raise ValueError(f"evaluation point {a} not a nonzero element of F_{p}")
        for w in self.omegas:
            if not 1 <= w < p:
                raise ValueError(f"column multiplier {w} not a nonzero element of F_{p}")
        # Row l holds omega_i * alpha_i^l; reused by every syndrome computation.
        rows = []
        row = list(self.omegas)
        for _ in range(self.r):
            rows.append(tuple(row))
            row = [v * a % p for v, a in zip(row, self.alphas)]
        object.__setattr__(self, "_powers", tuple(rows))

    @classmethod
    def default(cls, p: int, n: int, r: int) -> "GrsParams":
        """The canonical code per (p, n, r): alphas 1..n, all-one multipliers."""
        fld = PrimeField(p)
        if n > p - 1:
            raise ValueError(f"length {n} needs p >= n + 1, got p = {p}")
        return cls(fld, n, r, tuple(range(1, n + 1)), (1,) * n)

    @property
    def k(self) -> int:
        return self.n - self.r


def grs_syndromes(y: Sequence[int], params: GrsParams) -> Vector:
    """S_l = sum_i omega_i alpha_i^l y_i, l = 0..r-1."""
    if len(y) != params.n:
        raise ValueError(f"vector length {len(y)} != n = {params.n}")
    p = params.field.p
    return tuple(sum(c * v for c, v in zip(row, y)) % p for row in params._powers)


def grs_encode(msg: Sequence[int], params: GrsParams) -> Vector:
    """Systematic encoding: message in the first n - r positions, zero syndromes."""
    p = params.field.p
    k = params.k
    if len(msg) != k:
        raise ValueError(f"message length {len(msg)} != k = {k}")
    msg = tuple(m % p for m in msg)
    # Solve the r x r system in the last r coordinates.
    rhs = [(-sum(row[i] * msg[i] for i in range(k))) % p for row in params._powers]
    mat = [[row[k + i] for i in range(params.r)] for row in params._powers]
    tail = _solve(mat, rhs, params.field)
    word = msg + tuple(tail)
    assert grs_syndromes(word, params) == (0,) * params.r
    return word


def _solve(mat: list[list[int]], rhs: list[int], fld: PrimeField) -> list[int]:
    """Gaussian elimination mod p; the parity system is always nonsingular."""
    p = fld.p
    m = len(rhs)
    aug = [mat[i] + [rhs[i]] for i in range(m)]
    for col in range(m):
        piv = next((i for i in range(col, m) if aug[i][col] % p), None)
        assert piv is not None, "singular parity system despite distinct alphas"
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = fld.inv(aug[col][col])
        aug[col] = [v * inv % p for v in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[col])]
    return [aug[i][m] for i in range(m)]


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_eval(poly: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def _berlekamp_massey(seq: Sequence[int], fld: PrimeField) -> list[int]:
    """Minimal LFSR (error locator) for a syndrome sequence over F_p."""
    p = fld.p
    c = [1]
    b = [1]
    L = 0
    m = 1
    bb = 1
    for i, s in enumerate(seq):
        d = s
        for j in range(1, min(L, len(c) - 1) + 1):
            d = (d + c[j] * seq[i - j]) % p
        if d == 0:
            m += 1
            continue
        coef = d * fld.inv(bb) % p
        shifted = [0] * m + b
        new_c = [(ci - coef * si) % p
                 for ci, si in zip(c + [0] * (len(shifted) - len(c)),
                                   shifted + [0] * (len(c) - len(shifted)))]
        if 2 * L <= i:
            b, bb, L, m = c, d, i + 1 - L, 1
        else:
            m += 1
        c = new_c
    del c[L + 1:]
    return c


def grs_decode(
    y: Sequence[int],
    params: GrsParams,
    true_syndromes: Sequence[int] | None = None,
    erasures: Iterable[int] = (),
) -> Vector:
    """Decode y to the unique vector with the prescribed syndromes.

    ``erasures`` are 0-based positions known to be unreliable; they are always
    corrected.  Radius: 2 * (#errors) + (#erasures) <= r.  Raises
    GrsDecodeFailure when no consistent vector within the radius exists.
    """
    p = params.field.p
    fld = params.field
    r = params.r
    target = tuple(true_syndromes) if true_syndromes is not None else (0,) * r
    if len(target) != r:
        raise ValueError(f"true syndromes must have length r = {r}")
    raw = grs_syndromes(y, params)
    synd = [(a - b) % p for a, b in zip(raw, target)]

    era = sorted(set(erasures))
    for pos in era:
        if not 0 <= pos < params.n:
            raise ValueError(f"erasure position {pos} out of range")
    f = len(era)
    if f > r:
        raise GrsDecodeFailure(f"{f} erasures exceed the parity budget r = {r}")

    # Erasure locator and Forney-modified syndromes.
    gamma = [1]
    for pos in era:
        gamma = _poly_mul(gamma, [1, -params.alphas[pos] % p], p)
    xi = _poly_mul(gamma, synd, p)[:r] if any(synd) else [0] * r
    lam = _berlekamp_massey(xi[f:], fld)
    psi = _poly_mul(lam, gamma, p)
    deg = len(psi) - 1
    while deg > 0 and psi[deg] == 0:
        deg -= 1

    word = list(int(v) % p for v in y)
    if deg > 0 or f > 0:
        roots = []
        for i in range(params.n):
            if _poly_eval(psi, fld.inv(params.alphas[i]), p) == 0:
                roots.append(i)
        if len(roots) != deg:
            raise GrsDecodeFailure(
                f"locator degree {deg} but {len(roots)} roots among the evaluation points"
            )
        omega_poly = _poly_mul(psi, synd, p)[:r]
        dpsi = [k * c % p for k, c in enumerate(psi)][1:]
        for i in roots:
            ai = params.alphas[i]
            inv_ai = fld.inv(ai)
            num = _poly_eval(omega_poly, inv_ai, p)
            den = params.omegas[i] * _poly_eval(dpsi, inv_ai, p) % p
            if den == 0:
                raise GrsDecodeFailure("repeated locator root")
            magnitude = (-ai * num * fld.inv(den)) % p
            if magnitude == 0 and i not in era:
                raise GrsDecodeFailure("zero error magnitude at a non-erased position")
            word[i] = (word[i] - magnitude) % p

    if grs_syndromes(word, params) != target:
        raise GrsDecodeFailure("post-decode syndrome re-check failed")
    return tuple(word)
