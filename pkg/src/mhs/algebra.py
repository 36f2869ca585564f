"""Quasi-shuffle (stuffle) algebra of multiple harmonic sums.

An :class:`MhsExpression` is a finite sum of monomials, each a polynomial in
the symbol n (exact rational coefficients) times a product of harmonic-sum
symbols H(s).  The stuffle product rewrites the product of two symbols as an
integer combination of single symbols of added weight:

    H(s) * H(t) = sum of H(r) over the quasi-shuffle expansion of s and t

computed by the first-entry recursion with three branches (take s1, take t1,
or merge the two heads into s1 + t1).  `linearize` applies
this until every monomial carries at most one symbol; that linear form is the
canonical representative used to decide equality.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from typing import Iterable, NamedTuple

from .core import Composition, eval_mhs

__all__ = [
    "NPolynomial",
    "MhsMonomial",
    "MhsExpression",
    "ExpressionConsistencyError",
    "H",
    "N",
    "stuffle",
    "linearize",
    "expr_mul",
    "expr_equal",
    "eval_expr",
]


class NPolynomial:
    """Dense univariate polynomial in n over exact rationals.

    Coefficients are stored by ascending power with no trailing zeros, so the
    representation is canonical and the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "NPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NPolynomial":
        return cls((1,))

    @classmethod
    def variable(cls) -> "NPolynomial":
        """The polynomial n itself."""
        return cls((0, 1))

    @classmethod
    def coerce(cls, value) -> "NPolynomial":
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls((value,))
        raise TypeError(f"cannot coerce {value!r} to NPolynomial")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NPolynomial((other,))
        if not isinstance(other, NPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "NPolynomial":
        return NPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "NPolynomial":
        if isinstance(other, (int, Fraction)):
            other = NPolynomial((other,))
        if not isinstance(other, NPolynomial):
            return NotImplemented
        length = max(len(self.coeffs), len(other.coeffs))
        return NPolynomial(
            tuple(self.coeff(i) + other.coeff(i) for i in range(length))
        )

    __radd__ = __add__

    def __sub__(self, other) -> "NPolynomial":
        if isinstance(other, (int, Fraction)):
            other = NPolynomial((other,))
        if not isinstance(other, NPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NPolynomial":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NPolynomial(tuple(c * other for c in self.coeffs))
        if isinstance(other, NPolynomial):
            if not self.coeffs or not other.coeffs:
                return NPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return NPolynomial(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "NPolynomial":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "NPolynomial":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = NPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def eval(self, value) -> Fraction:
        """Evaluate at an exact point (Horner)."""
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def compose(self, inner: "NPolynomial") -> "NPolynomial":
        """self(inner(n)) as a polynomial in n."""
        total = NPolynomial.zero()
        for c in reversed(self.coeffs):
            total = total * inner + NPolynomial((c,))
        return total

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "NPolynomial":
        return cls(tuple(Fraction(s) for s in data))

    def _format(self, times: str, power: str, frac=str) -> str:
        if not self.coeffs:
            return "0"
        pieces: list[tuple[str, str]] = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = frac(mag)
            else:
                var = "n" if i == 1 else f"n{power}{i}"
                body = var if mag == 1 else f"{frac(mag)}{times}{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = first_body if first_sign == "+" else "-" + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self._format(times="*", power="^")

    def latex(self) -> str:
        def frac(x: Fraction) -> str:
            if x.denominator == 1:
                return str(x.numerator)
            return rf"\frac{{{x.numerator}}}{{{x.denominator}}}"

        return self._format(times="", power="^", frac=frac).replace(" ", "")

    def __repr__(self) -> str:
        return f"NPolynomial({self.coeffs!r})"


#: The polynomial n, for building coefficients like N + 1 or 3 * N.
N = NPolynomial.variable()


@cache
def _stuffle(s: tuple, t: tuple) -> tuple[tuple[tuple, int], ...]:
    if not s:
        return ((t, 1),)
    if not t:
        return ((s, 1),)
    acc: Counter = Counter()
    for r, m in _stuffle(s[1:], t):
        acc[(s[0],) + r] += m
    for r, m in _stuffle(s, t[1:]):
        acc[(t[0],) + r] += m
    for r, m in _stuffle(s[1:], t[1:]):
        acc[(s[0] + t[0],) + r] += m
    return tuple(sorted(acc.items()))


def stuffle(s: Iterable[int], t: Iterable[int]) -> Counter:
    """Quasi-shuffle expansion of H(s) * H(t) as a multiset of compositions.

    Every output composition has weight |s| + |t|, and the multiplicities sum
    to the Delannoy number D(depth s, depth t).
    """
    pairs = _stuffle(tuple(Composition(s)), tuple(Composition(t)))
    return Counter({Composition(r): m for r, m in pairs})


def _factors_sort_key(t: tuple) -> tuple:
    return (sum(t), len(t), t)


@cache
def _linearize_factors(factors: tuple[tuple, ...]) -> tuple[tuple[tuple, int], ...]:
    """Expand a product of symbols into single symbols with multiplicities."""
    if not factors:
        return (((), 1),)
    if len(factors) == 1:
        return ((factors[0], 1),)
    first, second, rest = factors[0], factors[1], factors[2:]
    acc: dict[tuple, int] = {}
    for comp, mult in _stuffle(first, second):
        remaining = tuple(sorted((comp,) + rest, key=_factors_sort_key))
        for comp2, mult2 in _linearize_factors(remaining):
            acc[comp2] = acc.get(comp2, 0) + mult * mult2
    return tuple(sorted(acc.items()))


def _canonical_factors(factors: Iterable) -> tuple[Composition, ...]:
    comps = [Composition(f) for f in factors]
    comps = [c for c in comps if c]  # drop units H(()) = 1
    comps.sort(key=Composition.sort_key)
    return tuple(comps)


class MhsMonomial(NamedTuple):
    """One term of an expression: coeff(n) times a product of symbols."""

    coeff: NPolynomial
    factors: tuple[Composition, ...]


def _term_order_key(factors: tuple[Composition, ...]) -> tuple:
    return (
        sum(c.weight for c in factors),
        len(factors),
        tuple(c.sort_key() for c in factors),
    )


class MhsExpression:
    """Formal rational-polynomial combination of products of MHS symbols.

    Terms are merged on construction: no two terms share a factor multiset and
    no term has a zero coefficient, so structural equality (``==``) compares
    canonical forms.  Mathematical equality is decided by :func:`expr_equal`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[tuple[Composition, ...], NPolynomial] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for factors, coeff in items:
            key = _canonical_factors(factors)
            poly = NPolynomial.coerce(coeff)
            if key in acc:
                acc[key] = acc[key] + poly
            else:
                acc[key] = poly
        self._terms = {k: v for k, v in acc.items() if v}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MhsExpression":
        return cls()

    @classmethod
    def constant(cls, value) -> "MhsExpression":
        return cls([((), NPolynomial.coerce(value))])

    @classmethod
    def symbol(cls, comp: Iterable[int]) -> "MhsExpression":
        return cls([((Composition(comp),), NPolynomial.one())])

    @classmethod
    def monomial(cls, coeff, factors: Iterable) -> "MhsExpression":
        return cls([(tuple(Composition(f) for f in factors), NPolynomial.coerce(coeff))])

    # -- views -------------------------------------------------------------

    def terms(self) -> list[MhsMonomial]:
        """Terms in descending canonical order (heaviest factors first)."""
        keys = sorted(self._terms, key=_term_order_key, reverse=True)
        return [MhsMonomial(self._terms[k], k) for k in keys]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, factors: Iterable) -> NPolynomial:
        return self._terms.get(_canonical_factors(factors), NPolynomial.zero())

    def single_symbols(self) -> set[Composition]:
        """Compositions appearing as lone factors (meaningful after linearize)."""
        return {fs[0] for fs in self._terms if len(fs) == 1}

    def max_coeff_degree(self) -> int:
        return max((p.degree for p in self._terms.values()), default=0)

    def total_weight(self) -> int:
        return max(
            (sum(c.weight for c in fs) for fs in self._terms), default=0
        )

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MhsExpression):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # canonical but mutable innards; use expr_equal for math equality

    def __add__(self, other) -> "MhsExpression":
        if isinstance(other, (int, Fraction, NPolynomial)):
            other = MhsExpression.constant(other)
        if not isinstance(other, MhsExpression):
            return NotImplemented
        return MhsExpression(
            list(self._terms.items()) + list(other._terms.items())
        )

    __radd__ = __add__

    def __neg__(self) -> "MhsExpression":
        return MhsExpression([(k, -v) for k, v in self._terms.items()])

    def __sub__(self, other) -> "MhsExpression":
        if isinstance(other, (int, Fraction, NPolynomial)):
            other = MhsExpression.constant(other)
        if not isinstance(other, MhsExpression):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MhsExpression":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NPolynomial)):
            poly = NPolynomial.coerce(other)
            return MhsExpression([(k, v * poly) for k, v in self._terms.items()])
        if isinstance(other, MhsExpression):
            # Formal product: factor multisets union, coefficients multiply.
            out = []
            for f1, c1 in self._terms.items():
                for f2, c2 in other._terms.items():
                    out.append((f1 + f2, c1 * c2))
            return MhsExpression(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MhsExpression":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "MhsExpression":
        if exponent < 0:
            raise ValueError("negative powers of expressions are not defined")
        result = MhsExpression.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- stuffle reduction and evaluation ------------------------------------

    def linearize(self) -> "MhsExpression":
        """Stuffle-reduce so every term has at most one symbol.

        Idempotent; the result is the canonical linear form.
        """
        out = []
        for factors, coeff in self._terms.items():
            raw = tuple(tuple(c) for c in factors)
            for comp, mult in _linearize_factors(raw):
                key = (comp,) if comp else ()
                out.append((key, coeff * mult))
        return MhsExpression(out)

    def eval(self, n: int) -> Fraction:
        """Exact numeric value at a concrete n."""
        total = Fraction(0)
        for factors, coeff in self._terms.items():
            value = coeff.eval(n)
            if value == 0:
                continue
            for comp in factors:
                value *= eval_mhs(n, comp)
            total += value
        return total

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[dict]:
        """Round-trippable form: one object per term, canonical order."""
        return [
            {"coeff": mono.coeff.to_json(), "factors": [str(c) for c in mono.factors]}
            for mono in self.terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "MhsExpression":
        terms = []
        for entry in data:
            factors = tuple(Composition.parse(s) for s in entry["factors"])
            terms.append((factors, NPolynomial.from_json(entry["coeff"])))
        return cls(terms)

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = [_format_term(mono.coeff, mono.factors) for mono in self.terms()]
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts = [
            _format_term(mono.coeff, mono.factors, latex=True) for mono in self.terms()
        ]
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += "-" + part[1:]
            else:
                out += "+" + part
        return out

    def __repr__(self) -> str:
        return f"MhsExpression({self.render()!r})"


def _format_factors(factors: tuple[Composition, ...], latex: bool = False) -> str:
    grouped: dict[Composition, int] = {}
    for c in factors:
        grouped[c] = grouped.get(c, 0) + 1
    pieces = []
    for comp in sorted(grouped, key=Composition.sort_key):
        mult = grouped[comp]
        if latex:
            if comp.depth >= 2 and set(comp) == {1}:
                body = rf"\{{1\}}^{comp.depth}"
            else:
                body = str(comp)
            head = "H_n" if mult == 1 else f"H_n^{mult}"
            pieces.append(f"{head}({body})")
        else:
            head = f"H({comp})"
            pieces.append(head if mult == 1 else f"{head}^{mult}")
    sep = "" if latex else "*"
    return sep.join(pieces)


def _format_term(coeff: NPolynomial, factors: tuple[Composition, ...], latex: bool = False) -> str:
    poly_str = coeff.latex() if latex else str(coeff)
    if not factors:
        return poly_str
    body = _format_factors(factors, latex=latex)
    times = "" if latex else "*"
    nonzero = [c for c in coeff.coeffs if c != 0]
    if len(nonzero) == 1:
        if coeff == NPolynomial.one():
            return body
        if coeff == -NPolynomial.one():
            return "-" + body
        return f"{poly_str}{times}{body}"
    lead = coeff.coeffs[-1]
    if lead < 0:
        inner = (-coeff).latex() if latex else str(-coeff)
        return f"-({inner}){times}{body}"
    return f"({poly_str}){times}{body}"


def H(*parts: int) -> MhsExpression:
    """The single-symbol expression H(parts); H() is the constant 1."""
    return MhsExpression.symbol(Composition(parts))


def expr_mul(e1: MhsExpression, e2: MhsExpression) -> MhsExpression:
    """Formal product in the free commutative algebra on MHS symbols."""
    return e1 * e2


def linearize(e: MhsExpression) -> MhsExpression:
    """Module-level alias for :meth:`MhsExpression.linearize`."""
    return e.linearize()


def eval_expr(e: MhsExpression, n: int) -> Fraction:
    """Module-level alias for :meth:`MhsExpression.eval`."""
    return e.eval(n)


class ExpressionConsistencyError(AssertionError):
    """Symbolic and numeric equality tests disagreed; indicates a bug."""


def expr_equal(e1: MhsExpression, e2: MhsExpression) -> bool:
    """Decide e1 == e2 by linearizing the difference.

    The symbolic test is the decision procedure.  As a guard against
    implementation bugs both sides are also evaluated at n = 0, ..., D + M
    (D = max coefficient degree, M = number of distinct symbols); if the two
    verdicts ever disagree an :class:`ExpressionConsistencyError` is raised.
    """
    lin1 = e1.linearize()
    lin2 = e2.linearize()
    symbolic = (lin1 - lin2).is_zero()
    degree = max(lin1.max_coeff_degree(), lin2.max_coeff_degree(), 0)
    symbols = lin1.single_symbols() | lin2.single_symbols()
    points = range(degree + len(symbols) + 1)
    numeric = all(e1.eval(n) == e2.eval(n) for n in points)
    if numeric != symbolic:
        raise ExpressionConsistencyError(
            f"symbolic verdict {symbolic} but numeric verdict {numeric} "
            f"for {e1!r} vs {e2!r}"
        )
    return symbolic
