"""Exact rational and prime-field arithmetic.

Rationals are :class:`fractions.Fraction` values (always kept reduced by the
stdlib).  Prime-field elements are small immutable values; the hot loops work
on plain ``int`` residues and only the public surface uses :class:`FpElem`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

# Residues live in [0, p) with p < 2**31, so a product of two residues
# fits in 62 bits and never overflows an int64 accumulator.
PRIME_LOW = 2**30
PRIME_HIGH = 2**31

DEFAULT_SEED = 20150615


class BadPrime(ArithmeticError):
    """Raised when a prime divides a denominator and cannot be used."""

    def __init__(self, p: int):
        super().__init__(f"prime {p} divides a denominator")
        self.p = p


def normalize(num: int, den: int) -> Fraction:
    """Canonical reduced rational num/den with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def reduce_mod_p(q, p: int) -> int:
    """Image of the rational ``q`` in Z/pZ as an int residue."""
    q = as_rational(q)
    den = q.denominator % p
    if den == 0:
        raise BadPrime(p)
    return q.numerator * pow(den, -1, p) % p


# Deterministic Miller-Rabin bases; exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


class PrimeSource:
    """Seeded pseudo-random supply of primes in (2**30, 2**31)."""

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed
        self._rng = random.Random(seed)

    def fresh_prime(self, exclude=()) -> int:
        exclude = set(exclude)
        for _ in range(100_000):
            n = self._rng.randrange(PRIME_LOW + 1, PRIME_HIGH) | 1
            if n not in exclude and is_prime(n):
                return n
        raise RuntimeError("prime pool exhausted")


_default_source = PrimeSource()


def fresh_prime(exclude=(), source: PrimeSource | None = None) -> int:
    """A prime p with 2**30 < p < 2**31 not in ``exclude``."""
    return (source or _default_source).fresh_prime(exclude)


@dataclass(frozen=True)
class FpElem:
    """An element of the prime field Z/pZ."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    @classmethod
    def from_rational(cls, q, p: int) -> "FpElem":
        return cls(reduce_mod_p(q, p), p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        return reduce_mod_p(other, self.p)

    def __add__(self, other):
        return FpElem((self.value + self._coerce(other)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElem((self.value - self._coerce(other)) % self.p, self.p)

    def __rsub__(self, other):
        return FpElem((self._coerce(other) - self.value) % self.p, self.p)

    def __mul__(self, other):
        return FpElem(self.value * self._coerce(other) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value % self.p, self.p)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in a prime field")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * FpElem(self._coerce(other), self.p).inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"
