"""Command-line interface: stuffle, derive, tables, reduce, verify."""

from __future__ import annotations

import argparse
import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import MhsExpression, N, stuffle
from .congruences import (
    BASE_CLAIMS,
    SUM_CLAIMS,
    base_congruence_suite,
    sum_congruence_suite,
)
from .core import Composition, CompositionError, mhs_prefix_values
from .hoffman import hoffman_reduce
from .report import CheckResult
from .residues import primes_in_range
from .summation import RebaseError, known_identities, rebase, sum_product
from .tables import derive_table, row_basis
from . import binomial_sums


def _render_multiset(counter) -> str:
    parts = []
    for comp in sorted(counter, key=Composition.sort_key, reverse=True):
        mult = counter[comp]
        body = f"({comp})"
        parts.append(body if mult == 1 else f"{mult}·{body}")
    return " + ".join(parts) if parts else "0"


def _cmd_stuffle(args) -> int:
    s = Composition.parse(args.s)
    t = Composition.parse(args.t)
    expansion = stuffle(s, t)
    if args.format == "json":
        ordered = sorted(expansion, key=Composition.sort_key, reverse=True)
        print(json.dumps({str(c): expansion[c] for c in ordered}))
    elif args.format == "latex":
        pieces = []
        for comp in sorted(expansion, key=Composition.sort_key, reverse=True):
            mult = expansion[comp]
            head = "" if mult == 1 else str(mult)
            pieces.append(f"{head}H_n({comp})")
        print("+".join(pieces))
    else:
        print(_render_multiset(expansion))
    return 0


def _parse_product(text: str) -> tuple[Composition, ...]:
    factors = tuple(
        Composition.parse(chunk) for chunk in text.split(";") if chunk.strip()
    )
    if not factors:
        raise CompositionError("empty product")
    return factors


def _load_basis(source: str) -> list[MhsExpression]:
    if source in ("w4", "weight4"):
        return [row.basis for row in row_basis(4)]
    if source in ("w5", "weight5"):
        return [row.basis for row in row_basis(5)]
    with open(source, encoding="utf-8") as handle:
        data = json.load(handle)
    return [MhsExpression.from_json(entry) for entry in data]


def _cmd_derive(args) -> int:
    factors = _parse_product(args.product)
    closed = sum_product(factors)
    payload: dict = {"product": [str(c) for c in factors], "closed_form": closed.to_json()}

    if args.basis is not None:
        basis = _load_basis(args.basis)
        target = closed
        if args.basis in ("w4", "weight4", "w5", "weight5"):
            # The table bases span sum f_k - (n+1) f_n, so rebase that form.
            target = closed - (N + 1) * MhsExpression.monomial(1, factors)
        try:
            coeffs = rebase(target, basis)
        except RebaseError as exc:
            print(f"rebase failed: residual {exc.residual}", file=sys.stderr)
            return 1
        payload["basis_coefficients"] = [poly.to_json() for poly in coeffs]

    verified = None
    if args.check:
        prefix_rows = [mhs_prefix_values(args.check, f) for f in factors]
        partial = Fraction(0)
        verified = True
        for n in range(1, args.check + 1):
            term = Fraction(1)
            for row in prefix_rows:
                term *= row[n]
            partial += term
            if closed.eval(n) != partial:
                verified = False
                break
        payload["verified"] = verified

    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "latex":
        print(closed.latex())
    else:
        print(closed)
        if args.basis is not None:
            for poly, expr in zip(coeffs, basis):
                print(f"  [{poly}] * ({expr})")
        if verified is not None:
            print(f"verified n=1..{args.check}" if verified else "VERIFICATION FAILED")
    return 0 if verified in (None, True) else 1


def _cmd_tables(args) -> int:
    try:
        table = derive_table(args.weight)
    except RebaseError as exc:
        print(f"table derivation failed: {exc}", file=sys.stderr)
        return 1
    if any(cell.degree > 1 for rowcells in table.cells for cell in rowcells):
        print("table cell exceeds degree 1", file=sys.stderr)
        return 1
    if args.format == "json":
        print(table.dumps())
    elif args.format == "latex":
        print(table.render_latex())
    else:
        print(table.render_text())
    return 0


def _cmd_reduce(args) -> int:
    expr = hoffman_reduce(args.d)
    lhs = MhsExpression.monomial(1, (Composition((1,) * args.d),))
    from math import factorial

    if args.format == "json":
        print(
            json.dumps(
                {"d": args.d, "lhs": (factorial(args.d) * lhs).to_json(), "rhs": expr.to_json()}
            )
        )
    elif args.format == "latex":
        print(f"{factorial(args.d)}{lhs.latex()}={expr.latex()}")
    else:
        print(f"{factorial(args.d)}*{lhs} = {expr}")
    return 0


def _identity_checks(nmax: int) -> list[CheckResult]:
    from .algebra import expr_equal

    results = []
    for record in known_identities():
        derived = sum_product(record.factors)
        symbolic = expr_equal(derived, record.rhs)
        prefix_rows = [mhs_prefix_values(nmax, f) for f in record.factors]
        partial = Fraction(0)
        numeric = True
        for n in range(1, nmax + 1):
            term = Fraction(1)
            for row in prefix_rows:
                term *= row[n]
            partial += term
            if derived.eval(n) != partial:
                numeric = False
                break
        results.append(
            CheckResult(
                claim_id=f"identity:{record.name}",
                p=None,
                modulus=None,
                lhs=str(derived),
                rhs=str(record.rhs),
                passed=symbolic and numeric,
            )
        )
    return results


def _congruence_checks_for_prime(p: int) -> list[CheckResult]:
    return base_congruence_suite(p) + sum_congruence_suite(p)


def _theorem_checks_for_prime(p: int, amin: int = -6, amax: int = 6) -> list[CheckResult]:
    return binomial_sums.theorem_suite(p, amin, amax) + binomial_sums.cai_granville_suite(p)


def _corollary_checks_for_prime(p: int) -> list[CheckResult]:
    return binomial_sums.corollary_suite(p)


def _fan_out(worker, items, jobs: int) -> list[CheckResult]:
    if jobs <= 1 or len(items) <= 1:
        results: list[CheckResult] = []
        for item in items:
            results.extend(worker(item))
        return results
    out: list[CheckResult] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(worker, items):
            out.extend(chunk)
    return out


def _cmd_verify(args) -> int:
    if args.pmin <= 5:
        print("pmin must be > 5", file=sys.stderr)
        return 2
    if args.pmin > args.pmax:
        print("pmin must not exceed pmax", file=sys.stderr)
        return 2

    if args.list:
        for claim in BASE_CLAIMS + SUM_CLAIMS:
            print(claim.claim_id)
        return 0

    primes = primes_in_range(args.pmin, args.pmax)
    suites = (
        ["identities", "congruences", "theorem", "corollary", "staver"]
        if args.suite == "all"
        else [args.suite]
    )

    checks: list[CheckResult] = []
    if "identities" in suites:
        checks.extend(_identity_checks(args.nmax))
    if "congruences" in suites:
        if args.claim:
            wanted = set(args.claim)
            registry = [c for c in BASE_CLAIMS + SUM_CLAIMS if c.claim_id in wanted]
            missing = wanted - {c.claim_id for c in registry}
            if missing:
                print(f"unknown claim ids: {sorted(missing)}", file=sys.stderr)
                return 2
            for p in primes:
                checks.extend(claim.check(p) for claim in registry)
        else:
            checks.extend(_fan_out(_congruence_checks_for_prime, primes, args.jobs))
    if "theorem" in suites:
        worker = functools.partial(_theorem_checks_for_prime, amin=args.amin, amax=args.amax)
        checks.extend(_fan_out(worker, primes, args.jobs))
    if "corollary" in suites:
        checks.extend(_fan_out(_corollary_checks_for_prime, primes, args.jobs))
    if "staver" in suites:
        checks.extend(binomial_sums.staver_suite(args.nmax))

    all_passed = all(c.passed for c in checks)
    if args.format == "json":
        print(json.dumps([c.to_json() for c in checks]))
    else:
        for c in checks:
            status = "pass" if c.passed else "FAIL"
            location = f" p={c.p}" if c.p is not None else ""
            print(f"{status} {c.claim_id}{location}")
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return 0 if all_passed else 1


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=["text", "latex", "json"],
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhs",
        description="Exact identities and congruences for multiple harmonic sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stuffle = sub.add_parser("stuffle", help="quasi-shuffle expansion of two compositions")
    p_stuffle.add_argument("s", help='composition, e.g. "1,2" or "" for the unit')
    p_stuffle.add_argument("t")
    _add_format(p_stuffle)
    p_stuffle.set_defaults(func=_cmd_stuffle)

    p_derive = sub.add_parser(
        "derive", help="closed form of sum over k of a product of harmonic sums"
    )
    p_derive.add_argument("product", help='factors separated by ";", e.g. "1;1,1"')
    p_derive.add_argument("--check", type=int, metavar="N", help="verify against partial sums for n=1..N")
    p_derive.add_argument(
        "--basis",
        metavar="FILE",
        help=(
            "rebase onto a JSON basis file; the built-ins w4 / w5 rebase the "
            "subtracted form sum f_k - (n+1) f_n onto the table row basis"
        ),
    )
    _add_format(p_derive)
    p_derive.set_defaults(func=_cmd_derive)

    p_tables = sub.add_parser("tables", help="regenerate a coefficient table")
    p_tables.add_argument("--weight", type=int, choices=[4, 5], required=True)
    _add_format(p_tables)
    p_tables.set_defaults(func=_cmd_tables)

    p_reduce = sub.add_parser(
        "reduce", help="express d! * H({1}^d) in depth-1 harmonic sums"
    )
    p_reduce.add_argument("d", type=int)
    _add_format(p_reduce)
    p_reduce.set_defaults(func=_cmd_reduce)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        choices=["identities", "congruences", "theorem", "corollary", "staver", "all"],
        default="all",
    )
    p_verify.add_argument("--pmin", type=int, default=7)
    p_verify.add_argument("--pmax", type=int, default=31)
    p_verify.add_argument("--amin", type=int, default=-6)
    p_verify.add_argument("--amax", type=int, default=6)
    p_verify.add_argument("--nmax", type=int, default=30)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--list", action="store_true", help="list congruence claim ids")
    p_verify.add_argument(
        "--claim", action="append", metavar="ID", help="run only this claim id (repeatable)"
    )
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CompositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
