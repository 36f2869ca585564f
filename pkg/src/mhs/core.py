"""Exact multiple harmonic sums over the rationals.

A multiple harmonic sum is indexed by a composition s = (s1, ..., sd) of
positive integers and an upper bound n:

    H_n(s) = sum over 1 <= k1 < k2 < ... < kd <= n of 1 / (k1^s1 * ... * kd^sd)

The first entry of s binds the smallest index, so H_n(1,2) and H_n(2,1) are
different numbers.  The empty composition gives the empty product, H_n(()) = 1,
and H_n(s) = 0 whenever s has more parts than there are indices available.

Everything here is exact; values are `fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import operator
import re
from fractions import Fraction
from functools import cache
from typing import Iterable

__all__ = [
    "Composition",
    "CompositionError",
    "composition_parse",
    "eval_mhs",
    "eval_mhs_direct",
    "mhs_prefix_values",
]


class CompositionError(ValueError):
    """Malformed composition text or a non-positive part."""


_PART_RE = re.compile(r"(\d+)(?:\^(\d+))?")


class Composition(tuple):
    """Ordered exponent vector (s1, ..., sd) of a multiple harmonic sum.

    Immutable and hashable, so compositions serve directly as dict keys.
    ``depth`` is the number of parts, ``weight`` their sum; the empty
    composition (depth 0) is the unit of the stuffle algebra.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        try:
            normalized = tuple(operator.index(x) for x in parts)
        except TypeError as exc:
            raise CompositionError(f"composition parts must be integers: {parts!r}") from exc
        if any(x < 1 for x in normalized):
            raise CompositionError(f"composition parts must be >= 1: {normalized!r}")
        return tuple.__new__(cls, normalized)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def sort_key(self) -> tuple:
        """Canonical ordering key: weight, then depth, then parts."""
        return (self.weight, self.depth, tuple(self))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse comma-separated parts; ``m^d`` expands to m repeated d times.

        The empty string parses to the empty composition.
        """
        text = text.strip()
        if not text:
            return cls()
        parts: list[int] = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            m = _PART_RE.fullmatch(chunk)
            if m is None:
                raise CompositionError(f"cannot parse composition part {chunk!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) is not None else 1
            if value < 1:
                raise CompositionError(f"composition parts must be >= 1: {value}")
            parts.extend([value] * count)
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


def composition_parse(text: str) -> Composition:
    """Parse a composition from its text form (inverse of ``str``)."""
    return Composition.parse(text)


@cache
def _eval(n: int, s: tuple) -> Fraction:
    if not s:
        return Fraction(1)
    if len(s) > n:
        return Fraction(0)
    # Peel the largest index: terms with kd = n contribute H_{n-1}(s') / n^{sd}.
    return _eval(n - 1, s) + _eval(n - 1, s[:-1]) * Fraction(1, n ** s[-1])


def eval_mhs(n: int, s: Iterable[int] = ()) -> Fraction:
    """Exact value of H_n(s).

    Uses the recursion H_n(s) = H_{n-1}(s) + H_{n-1}(s1..s_{d-1}) / n^{sd},
    memoized over (n, s).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return _eval(n, tuple(Composition(s)))


def eval_mhs_direct(n: int, s: Iterable[int] = ()) -> Fraction:
    """Brute-force H_n(s): iterate over every increasing index tuple.

    Exponentially slower than :func:`eval_mhs`; kept as an independent oracle.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    comp = Composition(s)
    total = Fraction(0)
    for ks in itertools.combinations(range(1, n + 1), comp.depth):
        denom = 1
        for k, exponent in zip(ks, comp):
            denom *= k**exponent
        total += Fraction(1, denom)
    return total


def mhs_prefix_values(n: int, s: Iterable[int] = ()) -> list[Fraction]:
    """All of H_0(s), H_1(s), ..., H_n(s) in a single sweep.

    Builds up the composition one trailing exponent at a time, so the whole
    row costs O(depth * n) fraction operations.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    comp = Composition(s)
    values = [Fraction(1)] * (n + 1)
    for exponent in comp:
        prev = values
        values = [Fraction(0)] * (n + 1)
        for j in range(1, n + 1):
            values[j] = values[j - 1] + prev[j - 1] * Fraction(1, j**exponent)
    return values
