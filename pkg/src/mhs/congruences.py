"""Prime-power congruences for multiple harmonic sums.

Two registries of claims, shipped as data so the CLI can list and select
them:

* base claims: H_{p-1}(s) modulo p^e for small compositions s, expressed in
  the prime p and the Bernoulli invariant X = bernoulli_invariant(p);
* sum claims: sum_{k=1}^{p-1} of products of homogeneous H_k({1}^j) modulo
  p^e, one row per partition of the total weight (up to 5).

Left sides are evaluated by streaming modular brute force, never through the
symbolic engine, so a passing suite is an independent confirmation of the
identities.  A separate symbolic cross-derivation re-obtains the weight <= 3
sum rows by substituting the base congruences into the closed-form summation
identities, with explicit error-term bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import NPolynomial
from .bernoulli import bernoulli_invariant
from .core import Composition
from .report import CheckResult
from .residues import PResidue, is_prime, reduce_mod

__all__ = [
    "BASE_CLAIMS",
    "SUM_CLAIMS",
    "CongruenceClaim",
    "base_congruence_suite",
    "cross_derivation_check",
    "homogeneous_product_sum_mod",
    "mhs_mod",
    "sum_congruence_suite",
]


def mhs_mod(s: Iterable[int], p: int, e: int = 1) -> PResidue:
    """H_{p-1}(s) in Z / p^e by streaming evaluation.

    All denominators are products of integers below p, hence units; the full
    rational value is never materialized.
    """
    comp = Composition(s)
    mod = p**e
    values = [1] * p  # H_j of the empty prefix, j = 0..p-1
    for exponent in comp:
        prev = values
        values = [0] * p
        for j in range(1, p):
            values[j] = (values[j - 1] + prev[j - 1] * pow(j, -exponent, mod)) % mod
    return PResidue(values[p - 1], p, e)


def homogeneous_product_sum_mod(lam: tuple[int, ...], p: int, e: int) -> int:
    """sum_{k=1}^{p-1} prod_i H_k({1}^lam_i) in Z / p^e, by brute force."""
    mod = p**e
    dmax = max(lam)
    h = [0] * (dmax + 1)
    h[0] = 1
    total = 0
    for k in range(1, p):
        inv = pow(k, -1, mod)
        # update depths top-down so h[d-1] still holds the k-1 value
        for d in range(dmax, 0, -1):
            h[d] = (h[d] + h[d - 1] * inv) % mod
        term = 1
        for part in lam:
            term = term * h[part] % mod
        total = (total + term) % mod
    return total


@dataclass(frozen=True)
class CongruenceClaim:
    """One congruence, with its right side as a polynomial in p and X."""

    claim_id: str
    kind: str  # "mhs" for H_{p-1}(s), "sum" for sum of products over k
    target: tuple[int, ...]  # composition (mhs) or partition of the weight (sum)
    rhs_terms: tuple[tuple[tuple[int, int], int], ...]  # ((p_exp, x_exp), coeff)
    exponent: int
    prime_floor: int = 7

    def rhs_value(self, p: int) -> Fraction:
        x = bernoulli_invariant(p)
        total = Fraction(0)
        for (i, j), coeff in self.rhs_terms:
            total += Fraction(coeff) * p**i * x**j
        return total

    def lhs_residue(self, p: int) -> PResidue:
        if self.kind == "mhs":
            return mhs_mod(self.target, p, self.exponent)
        return PResidue(
            homogeneous_product_sum_mod(self.target, p, self.exponent),
            p,
            self.exponent,
        )

    def check(self, p: int) -> CheckResult:
        lhs = self.lhs_residue(p)
        rhs = reduce_mod(self.rhs_value(p), p, self.exponent)
        return CheckResult(
            claim_id=self.claim_id,
            p=p,
            modulus=p**self.exponent,
            lhs=lhs.value,
            rhs=rhs.value,
            passed=lhs == rhs,
        )


def _mhs_claim(parts: tuple[int, ...], rhs: dict, e: int) -> CongruenceClaim:
    comp = Composition(parts)
    return CongruenceClaim(
        claim_id=f"H:{comp}",
        kind="mhs",
        target=tuple(comp),
        rhs_terms=tuple(sorted(rhs.items())),
        exponent=e,
    )


def _sum_claim(lam: tuple[int, ...], rhs: dict, e: int) -> CongruenceClaim:
    return CongruenceClaim(
        claim_id="S:" + ",".join(str(x) for x in lam),
        kind="sum",
        target=lam,
        rhs_terms=tuple(sorted(rhs.items())),
        exponent=e,
    )


# H_{p-1}(s) block: the eight stated congruences plus the homogeneous forms
# that follow from the Hoffman reductions.
BASE_CLAIMS: tuple[CongruenceClaim, ...] = (
    _mhs_claim((1,), {(2, 1): 2}, 4),
    _mhs_claim((2,), {(1, 1): -4}, 3),
    _mhs_claim((3,), {}, 2),
    _mhs_claim((1, 2), {(0, 1): -6}, 2),
    _mhs_claim((4,), {}, 1),
    _mhs_claim((1, 1, 2), {}, 1),
    _mhs_claim((1, 3), {}, 1),
    _mhs_claim((1, 1), {(1, 1): 2}, 3),
    _mhs_claim((1, 1, 1), {}, 2),
    _mhs_claim((1, 1, 1, 1), {}, 1),
)

# Sum block: one row per partition of the weight, weights 1 through 5,
# at moduli p^5 down to p.
SUM_CLAIMS: tuple[CongruenceClaim, ...] = (
    _sum_claim((1,), {(0, 0): 1, (1, 0): -1, (3, 1): 2}, 5),
    _sum_claim((2,), {(0, 0): -1, (1, 0): 1, (2, 1): 4, (3, 1): -2}, 4),
    _sum_claim((1, 1), {(0, 0): -2, (1, 0): 2, (2, 1): 2, (3, 1): -4}, 4),
    _sum_claim((3,), {(0, 0): 1, (1, 0): -1, (1, 1): 2, (2, 1): -4}, 3),
    _sum_claim((2, 1), {(0, 0): 3, (1, 0): -3, (2, 1): -6}, 3),
    _sum_claim((1, 1, 1), {(0, 0): 6, (1, 0): -6, (1, 1): -2, (2, 1): -6}, 3),
    _sum_claim((4,), {(0, 0): -1, (1, 0): 1, (1, 1): -2}, 2),
    _sum_claim((2, 2), {(0, 0): -6, (1, 0): 6, (0, 1): -6}, 2),
    _sum_claim((3, 1), {(0, 0): -4, (1, 0): 4, (1, 1): -2}, 2),
    _sum_claim((2, 1, 1), {(0, 0): -12, (1, 0): 12, (0, 1): -6, (1, 1): 2}, 2),
    _sum_claim((1, 1, 1, 1), {(0, 0): -24, (1, 0): 24, (0, 1): -12, (1, 1): 8}, 2),
    _sum_claim((5,), {(0, 0): 1}, 1),
    _sum_claim((4, 1), {(0, 0): 5}, 1),
    _sum_claim((3, 2), {(0, 0): 10, (0, 1): 6}, 1),
    _sum_claim((3, 1, 1), {(0, 0): 20, (0, 1): 6}, 1),
    _sum_claim((2, 2, 1), {(0, 0): 30, (0, 1): 18}, 1),
    _sum_claim((2, 1, 1, 1), {(0, 0): 60, (0, 1): 30}, 1),
    _sum_claim((1, 1, 1, 1, 1), {(0, 0): 120, (0, 1): 60}, 1),
)


def _require_admissible(p: int) -> None:
    if p <= 5 or not is_prime(p):
        raise ValueError(f"p must be a prime > 5, got {p}")


def base_congruence_suite(p: int) -> list[CheckResult]:
    """Check every base claim at the prime p."""
    _require_admissible(p)
    return [claim.check(p) for claim in BASE_CLAIMS]


def sum_congruence_suite(p: int) -> list[CheckResult]:
    """Check every sum-of-products claim at the prime p."""
    _require_admissible(p)
    return [claim.check(p) for claim in SUM_CLAIMS]


# ---------------------------------------------------------------------------
# Symbolic cross-derivation: substitute the base congruences into the
# closed-form identities and re-obtain the weight <= 3 sum rows.
# ---------------------------------------------------------------------------


def _min_opt(*values: int | None) -> int | None:
    present = [v for v in values if v is not None]
    return min(present) if present else None


class PadicForm:
    """A value known as a polynomial in p and X up to an O(p^err) error.

    ``terms`` maps (p_exponent, x_exponent) to a rational coefficient;
    ``err = None`` means the value is exact.  X itself is p-integral, so a
    term's guaranteed valuation is its p exponent.
    """

    __slots__ = ("terms", "err")

    def __init__(self, terms: dict | None = None, err: int | None = None):
        cleaned = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if err is not None and key[0] >= err:
                continue  # absorbed by the error term
            cleaned[key] = cleaned.get(key, Fraction(0)) + coeff
        self.terms = {k: v for k, v in cleaned.items() if v}
        self.err = err

    def _term_valuation(self) -> int | None:
        return min((i for i, _ in self.terms), default=None)

    def valuation(self) -> int | None:
        """Guaranteed minimal p-valuation of the value; None is +infinity."""
        return _min_opt(self._term_valuation(), self.err)

    def __add__(self, other: "PadicForm") -> "PadicForm":
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return PadicForm(terms, _min_opt(self.err, other.err))

    def __mul__(self, other: "PadicForm") -> "PadicForm":
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        candidates = []
        if self.err is not None:
            v = _min_opt(other._term_valuation(), other.err)
            candidates.append(None if v is None else self.err + v)
        if other.err is not None:
            v = _min_opt(self._term_valuation(), self.err)
            candidates.append(None if v is None else other.err + v)
        err = _min_opt(*candidates) if candidates else None
        return PadicForm(terms, err)

    def __sub__(self, other: "PadicForm") -> "PadicForm":
        negated = PadicForm({k: -v for k, v in other.terms.items()}, other.err)
        return self + negated

    def congruent_to(self, other: "PadicForm", e: int) -> bool:
        """Whether both values agree modulo p^e, for every admissible p."""
        diff = self - other
        if diff.err is not None and diff.err < e:
            return False  # not determined to that precision
        return all(i >= e for i, _ in diff.terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"{coeff}*p^{i}*X^{j}" for (i, j), coeff in sorted(self.terms.items())
        )
        tail = "" if self.err is None else f" + O(p^{self.err})"
        return f"PadicForm({body or '0'}{tail})"


def _poly_at_p_minus_1(poly: NPolynomial) -> PadicForm:
    """Exact expansion of poly(p - 1) as a polynomial in p."""
    in_p = poly.compose(NPolynomial((-1, 1)))
    return PadicForm({(i, 0): c for i, c in enumerate(in_p.coeffs)})


def _symbol_congruences() -> dict[Composition, PadicForm]:
    table = {
        Composition((1,)): PadicForm({(2, 1): 2}, err=4),
        Composition((2,)): PadicForm({(1, 1): -4}, err=3),
        Composition((3,)): PadicForm({}, err=2),
        Composition((1, 1)): PadicForm({(1, 1): 2}, err=3),
        Composition((1, 1, 1)): PadicForm({}, err=2),
        Composition((1, 2)): PadicForm({(0, 1): -6}, err=2),
    }
    # H(2,1) follows from the stuffle relation H(1)H(2) = H(1,2)+H(2,1)+H(3).
    table[Composition((2, 1))] = (
        table[Composition((1,))] * table[Composition((2,))]
        - table[Composition((1, 2))]
        - table[Composition((3,))]
    )
    return table


def cross_derivation_check(lam: tuple[int, ...]) -> bool:
    """Re-derive a weight <= 3 sum row symbolically from the base congruences.

    Substitutes n = p - 1 and the known residues of each weight <= 3 symbol
    into the closed form produced by the summation engine, then compares with
    the registered right side at the claimed modulus.
    """
    from .summation import sum_product

    claim = next(c for c in SUM_CLAIMS if c.target == tuple(lam))
    if sum(lam) > 3:
        raise ValueError("cross-derivation table only covers weight <= 3")
    symbols = _symbol_congruences()
    blocks = [Composition((1,) * part) for part in lam]
    linear = sum_product(blocks).linearize()
    total = PadicForm({})
    for mono in linear.terms():
        coeff = _poly_at_p_minus_1(mono.coeff)
        if mono.factors:
            total = total + coeff * symbols[mono.factors[0]]
        else:
            total = total + coeff
    rhs = PadicForm({key: coeff for key, coeff in claim.rhs_terms})
    return total.congruent_to(rhs, claim.exponent)
