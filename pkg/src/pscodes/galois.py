"""Exact arithmetic in prime fields F_p and binary extension fields GF(2^m).

Elements are plain Python ints in canonical range: [0, p) for F_p, and
bit-packed polynomials in [0, 2^m) for GF(2^m) (bit i = coefficient of x^i).
Field objects are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_PRIME = 1 << 31

# Canonical primitive polynomials over GF(2), one per extension degree.
# Bit-encoded: e.g. m=4 -> x^4 + x + 1 -> 0b10011.
PRIMITIVE_POLYS: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for the supported range (< 2^31)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p of integers modulo a prime p."""

    p: int

    def __post_init__(self) -> None:
        if not 2 <= self.p < MAX_PRIME:
            raise ValueError(f"modulus {self.p} out of supported range [2, 2^31)")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def order(self) -> int:
        return self.p

    def check(self, a: int) -> int:
        if not 0 <= a < self.p:
            raise ValueError(f"{a} is not a canonical element of F_{self.p}")
        return a

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a % self.p, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p


@dataclass(frozen=True)
class BinaryExtField:
    """GF(2^m) with a fixed primitive polynomial and full log/antilog tables.

    ``antilog[i] = x^i`` for i in [0, 2^m - 1) and ``log[antilog[i]] = i``;
    table construction fails if the polynomial is not primitive (the powers
    of x must enumerate every nonzero element exactly once).
    """

    m: int
    primitive_poly: int = 0
    antilog: tuple[int, ...] = field(init=False, repr=False, compare=False)
    log: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 2 <= self.m <= 16:
            raise ValueError(f"extension degree m={self.m} outside supported range 2..16")
        if self.primitive_poly == 0:
            object.__setattr__(self, "primitive_poly", PRIMITIVE_POLYS[self.m])
        poly = self.primitive_poly
        if poly >> self.m != 1:
            raise ValueError(f"polynomial 0b{poly:b} does not have degree {self.m}")
        order = 1 << self.m
        antilog = [0] * (order - 1)
        log = [0] * order
        x = 1
        for i in range(order - 1):
            if x == 1 and i > 0:
                raise ValueError(
                    f"0b{poly:b} is not primitive: x has multiplicative order {i}"
                )
            antilog[i] = x
            log[x] = i
            x <<= 1
            if x & order:
                x ^= poly
        if x != 1:
            raise ValueError(f"0b{poly:b} is not primitive over GF(2)")
        object.__setattr__(self, "antilog", tuple(antilog))
        object.__setattr__(self, "log", tuple(log))

    @property
    def order(self) -> int:
        return 1 << self.m

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not a canonical element of GF(2^{self.m})")
        return a

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF(2^{self.m})")
        return self.antilog[(-self.log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError(f"division by 0 in GF(2^{self.m})")
        if a == 0:
            return 0
        return self.antilog[(self.log[a] - self.log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0 if e else 1
        return self.antilog[(self.log[a] * e) % (self.order - 1)]

    def alpha_pow(self, e: int) -> int:
        """x^e for the fixed generator x, any integer exponent."""
        return self.antilog[e % (self.order - 1)]
