"""Sums of powers of signed binomial coefficients modulo prime powers.

For a prime p > 5 and any integer a, the sum over k of
(-1)^(ak) * C(p-1, k)^a satisfies, modulo p^6,

    sum = (a-1)p / (ap-1) * (1 + a(a+1)(3a-2)/6 * p^3 * X)

with X = bernoulli_invariant(p).  Two wholly independent evaluations of the
left side are provided: the direct one powers up the product formula
(-1)^k C(p-1,k) = prod_{j<=k} (1 - p/j), while the expansion route rewrites
that product in homogeneous harmonic sums and sums over partitions.  Their
agreement re-verifies the congruence tables along the way.

Also covered: Staver's finite identity for sum (1/k) C(2k,k), Wolstenholme's
congruence, the central-binomial consequence modulo p^4, and the classical
C(ap-2, p-1) congruence modulo p^4.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .bernoulli import bernoulli_invariant
from .congruences import homogeneous_product_sum_mod
from .partitions import arrangement_count, enumerate_partitions
from .report import CheckResult
from .residues import PResidue, is_prime, padic_valuation, reduce_mod

__all__ = [
    "alternating_power_sum",
    "binomial_power_sum",
    "binomial_power_sum_closed_form",
    "binomial_power_sum_via_mhs",
    "cai_granville_holds",
    "central_binomial_sum_check",
    "central_binomial_sum_exact",
    "generalized_binomial",
    "signed_binomial_power",
    "staver_identity_holds",
    "wolstenholme_holds",
]


def _require_admissible(p: int) -> None:
    if p <= 5 or not is_prime(p):
        raise ValueError(f"p must be a prime > 5, got {p}")


def generalized_binomial(a: int, r: int) -> int:
    """C(a, r) = a(a-1)...(a-r+1) / r! for any integer a, always an integer."""
    if r < 0:
        raise ValueError("r must be >= 0")
    numerator = 1
    for i in range(r):
        numerator *= a - i
    quotient, remainder = divmod(numerator, factorial(r))
    assert remainder == 0, "falling factorial of an integer is divisible by r!"
    return quotient


@cache
def _signed_binomial_units(p: int, e: int) -> tuple[int, ...]:
    """u_k = (-1)^k C(p-1, k) mod p^e for k = 0..p-1, via prod (1 - p/j)."""
    mod = p**e
    units = [1]
    u = 1
    for j in range(1, p):
        u = u * (1 - p * pow(j, -1, mod)) % mod
        units.append(u)
    return tuple(units)


def signed_binomial_power(k: int, a: int, p: int, e: int = 6) -> PResidue:
    """((-1)^k C(p-1, k))^a in Z / p^e.

    The base is 1 mod p, hence a unit, so negative a inverts cleanly.
    """
    _require_admissible(p)
    if not 0 <= k <= p - 1:
        raise ValueError("k must lie in [0, p-1]")
    base = _signed_binomial_units(p, e)[k]
    return PResidue(pow(base, a, p**e), p, e)


def binomial_power_sum(a: int, p: int, e: int = 6) -> PResidue:
    """sum_{k=0}^{p-1} (-1)^(ak) C(p-1, k)^a in Z / p^e (direct route)."""
    _require_admissible(p)
    mod = p**e
    total = 0
    for base in _signed_binomial_units(p, e):
        total = (total + pow(base, a, mod)) % mod
    return PResidue(total, p, e)


def binomial_power_sum_closed_form(a: int, p: int, e: int = 6) -> PResidue:
    """(a-1)p / (ap-1) * (1 + a(a+1)(3a-2)/6 * p^3 * X) in Z / p^e."""
    _require_admissible(p)
    x = bernoulli_invariant(p)
    value = Fraction((a - 1) * p, a * p - 1) * (
        1 + Fraction(a * (a + 1) * (3 * a - 2), 6) * p**3 * x
    )
    return reduce_mod(value, p, e)


def binomial_power_sum_via_mhs(a: int, p: int, e: int = 6) -> PResidue:
    """The same sum through the partition expansion of prod (1 - p/j)^a.

    Expands (1 + sum_{j=1}^5 (-p)^j H_k({1}^j))^a with generalized binomials
    and sums each product of homogeneous harmonic sums by brute force mod p^e.
    Valid modulo p^6 since dropped terms carry at least six powers of p.
    Shares nothing with :func:`binomial_power_sum` beyond residue arithmetic.
    """
    _require_admissible(p)
    if e > 6:
        raise ValueError("the weight-5 truncation only supports e <= 6")
    mod = p**e
    total = p % mod
    for j in range(1, 6):
        p_power = (-p) ** j % mod
        for r in range(1, j + 1):
            c_ar = generalized_binomial(a, r)
            if c_ar == 0:
                continue
            for lam in enumerate_partitions(j, r):
                inner = homogeneous_product_sum_mod(lam, p, e)
                contribution = p_power * c_ar * arrangement_count(lam) * inner
                total = (total + contribution) % mod
    return PResidue(total, p, e)


def alternating_power_sum(n: int, a: int) -> Fraction:
    """Exact sum_{k=0}^{n-1} (-1)^(ak) C(n-1, k)^a (rational for a < 0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Fraction(0)
    for k in range(n):
        sign = -1 if (a * k) % 2 else 1
        total += sign * Fraction(comb(n - 1, k)) ** a
    return total


def staver_identity_holds(n: int) -> bool:
    """Exact check of sum_{k<=n} (1/k)C(2k,k) against the binomial form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(Fraction(comb(2 * k, k), k) for k in range(1, n + 1))
    rhs = Fraction(comb(2 * n, n) * (2 * n + 1), 3 * n * n) * sum(
        Fraction(1, comb(n - 1, k) ** 2) for k in range(n)
    )
    return lhs == rhs


def wolstenholme_holds(p: int) -> bool:
    """C(2p-1, p-1) = 1 modulo p^3 for primes p > 3."""
    if p <= 3 or not is_prime(p):
        raise ValueError(f"p must be a prime > 3, got {p}")
    return comb(2 * p - 1, p - 1) % p**3 == 1


def central_binomial_sum_exact(p: int) -> tuple[Fraction, Fraction]:
    """Exact (lhs, rhs) of sum_{k<p} (1/k)C(2k,k) = -16/3 p^2 X mod p^4."""
    _require_admissible(p)
    lhs = sum(Fraction(comb(2 * k, k), k) for k in range(1, p))
    rhs = Fraction(-16, 3) * p * p * bernoulli_invariant(p)
    return lhs, rhs


def central_binomial_sum_check(p: int) -> bool:
    """Whether the central-binomial congruence holds modulo p^4 at p."""
    lhs, rhs = central_binomial_sum_exact(p)
    valuation = padic_valuation(lhs - rhs, p)
    return valuation is None or valuation >= 4


def cai_granville_holds(a: int, p: int) -> bool:
    """sum (-1)^(ak) C(p-1,k)^a = C(ap-2, p-1) modulo p^4, for a >= 1."""
    if a < 1:
        raise ValueError("a must be >= 1")
    _require_admissible(p)
    lhs = binomial_power_sum(a, p, e=4).value
    rhs = comb(a * p - 2, p - 1) % p**4
    return lhs == rhs


# ---------------------------------------------------------------------------
# Suite wrappers producing report records.
# ---------------------------------------------------------------------------


def theorem_suite(p: int, amin: int = -6, amax: int = 6) -> list[CheckResult]:
    """Direct vs closed form and direct vs expansion, over a range of a."""
    results = []
    for a in range(amin, amax + 1):
        lhs = binomial_power_sum(a, p)
        rhs = binomial_power_sum_closed_form(a, p)
        results.append(
            CheckResult(
                claim_id=f"binomial-power-sum:a={a}",
                p=p,
                modulus=p**6,
                lhs=lhs.value,
                rhs=rhs.value,
                passed=lhs == rhs,
            )
        )
        via = binomial_power_sum_via_mhs(a, p)
        results.append(
            CheckResult(
                claim_id=f"binomial-power-sum-expansion:a={a}",
                p=p,
                modulus=p**6,
                lhs=via.value,
                rhs=lhs.value,
                passed=via == lhs,
            )
        )
    anchors = [(0, p % p**6), (1, 0)]
    for a, expected in anchors:
        if amin <= a <= amax:
            value = binomial_power_sum(a, p).value
            results.append(
                CheckResult(
                    claim_id=f"binomial-power-sum-anchor:a={a}",
                    p=p,
                    modulus=p**6,
                    lhs=value,
                    rhs=expected,
                    passed=value == expected,
                )
            )
    return results


def cai_granville_suite(p: int) -> list[CheckResult]:
    results = []
    for a in (1, 2, 3):
        lhs = binomial_power_sum(a, p, e=4).value
        rhs = comb(a * p - 2, p - 1) % p**4
        results.append(
            CheckResult(
                claim_id=f"binomial-vs-single-binomial:a={a}",
                p=p,
                modulus=p**4,
                lhs=lhs,
                rhs=rhs,
                passed=lhs == rhs,
            )
        )
    return results


def corollary_suite(p: int) -> list[CheckResult]:
    lhs, rhs = central_binomial_sum_exact(p)
    lhs_res = reduce_mod(lhs, p, 4)
    rhs_res = reduce_mod(rhs, p, 4)
    results = [
        CheckResult(
            claim_id="central-binomial-sum",
            p=p,
            modulus=p**4,
            lhs=lhs_res.value,
            rhs=rhs_res.value,
            passed=lhs_res == rhs_res,
        ),
        CheckResult(
            claim_id="wolstenholme",
            p=p,
            modulus=p**3,
            lhs=comb(2 * p - 1, p - 1) % p**3,
            rhs=1,
            passed=wolstenholme_holds(p),
        ),
    ]
    return results


def staver_suite(nmax: int) -> list[CheckResult]:
    return [
        CheckResult(
            claim_id=f"staver:n={n}",
            p=None,
            modulus=None,
            lhs=None,
            rhs=None,
            passed=staver_identity_holds(n),
        )
        for n in range(1, nmax + 1)
    ]
