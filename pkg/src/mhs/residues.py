"""Residue arithmetic modulo a prime power, plus small primality helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = [
    "NonPIntegralError",
    "PResidue",
    "is_prime",
    "padic_valuation",
    "primes_in_range",
    "reduce_mod",
]


class NonPIntegralError(ArithmeticError):
    """The denominator shares a factor with p; the value has no residue."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def padic_valuation(q: Fraction | int, p: int) -> int | None:
    """v_p(q); None stands for +infinity (q == 0)."""
    q = Fraction(q)
    if q == 0:
        return None

    def v(m: int) -> int:
        count = 0
        while m % p == 0:
            m //= p
            count += 1
        return count

    return v(q.numerator) - v(q.denominator)


@dataclass(frozen=True)
class PResidue:
    """Element of Z / p^e, with unit inversion via modular exponentiation."""

    value: int
    p: int
    e: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.e

    def _check(self, other: "PResidue") -> None:
        if (self.p, self.e) != (other.p, other.e):
            raise ValueError("residues have different moduli")

    def __add__(self, other):
        if isinstance(other, int):
            return PResidue(self.value + other, self.p, self.e)
        self._check(other)
        return PResidue(self.value + other.value, self.p, self.e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return PResidue(self.value - other, self.p, self.e)
        self._check(other)
        return PResidue(self.value - other.value, self.p, self.e)

    def __neg__(self):
        return PResidue(-self.value, self.p, self.e)

    def __mul__(self, other):
        if isinstance(other, int):
            return PResidue(self.value * other, self.p, self.e)
        self._check(other)
        return PResidue(self.value * other.value, self.p, self.e)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PResidue":
        # pow() supports negative exponents for units of the modulus
        return PResidue(pow(self.value, exponent, self.modulus), self.p, self.e)

    def inverse(self) -> "PResidue":
        return self**-1

    def __repr__(self) -> str:
        return f"PResidue({self.value} mod {self.p}^{self.e})"


def reduce_mod(q: Fraction | int, p: int, e: int) -> PResidue:
    """Map a p-integral rational into Z / p^e."""
    q = Fraction(q)
    mod = p**e
    if q.denominator % p == 0:
        raise NonPIntegralError(f"{q} is not p-integral for p={p}")
    value = q.numerator * pow(q.denominator, -1, mod) % mod
    return PResidue(value, p, e)
