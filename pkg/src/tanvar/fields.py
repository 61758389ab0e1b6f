"""Exact coefficient arithmetic.

Two coefficient domains are supported: arbitrary-precision rationals
(``fractions.Fraction``) and residues modulo a large prime (plain ints in
``[0, p)``).  The prime field is the default working field: degrees and
dimensions of the varieties treated here are preserved under reduction
modulo a random large prime, and modular arithmetic keeps Groebner bases
fast.  Rationals are supported everywhere but are slow for elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidSpec

RATIONALS = "rationals"
PRIME = "prime"

DEFAULT_PRIME = 2147483629
VERIFY_PRIME = 2147483563

# Witnesses making Miller-Rabin deterministic for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid far beyond 2^64)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeOps:
    """Arithmetic in GF(p); elements are ints canonically reduced to [0, p)."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, num: int, den: int):
        return num * pow(den, -1, self.p) % self.p

    def rand(self, rng):
        return rng.randrange(self.p)

    def rand_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def to_json(self, a):
        return a


class RationalOps:
    """Arithmetic in Q via Fraction; canonical form is lowest terms."""

    __slots__ = ("zero", "one")

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, num: int, den: int):
        return Fraction(num, den)

    def rand(self, rng):
        # Small integers keep rational Groebner runs tolerable.
        return Fraction(rng.randrange(-99, 100))

    def rand_nonzero(self, rng):
        n = rng.randrange(1, 199)
        return Fraction(n - 99 if n >= 99 else n - 99)  # skips 0

    def to_json(self, a):
        return str(a) if a.denominator != 1 else a.numerator


@lru_cache(maxsize=None)
def _ops_for(kind: str, prime: int):
    return PrimeOps(prime) if kind == PRIME else RationalOps()


@dataclass(frozen=True)
class FieldConfig:
    """Field descriptor plus the seed governing every randomized choice.

    Identical configs and identical inputs give bit-identical outputs of
    every operation in the package.
    """

    kind: str = PRIME
    prime: int = DEFAULT_PRIME
    seed: int = 42

    def __post_init__(self):
        if self.kind not in (PRIME, RATIONALS):
            raise InvalidSpec(f"unknown field kind {self.kind!r}")
        if self.kind == PRIME:
            if self.prime <= 2 ** 20 or self.prime % 2 == 0 or not is_prime(self.prime):
                raise InvalidSpec(
                    f"prime must be an odd prime > 2^20, got {self.prime}"
                )
        if not (0 <= self.seed < 2 ** 64):
            raise InvalidSpec("seed must be a 64-bit unsigned integer")

    @property
    def ops(self):
        return _ops_for(self.kind, self.prime if self.kind == PRIME else 0)

    def describe(self) -> dict:
        if self.kind == PRIME:
            return {"field": "prime", "prime": self.prime, "seed": self.seed}
        return {"field": "rationals", "seed": self.seed}


def rationals(seed: int = 42) -> FieldConfig:
    return FieldConfig(kind=RATIONALS, seed=seed)


def prime_field(p: int = DEFAULT_PRIME, seed: int = 42) -> FieldConfig:
    return FieldConfig(kind=PRIME, prime=p, seed=seed)
