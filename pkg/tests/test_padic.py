from fractions import Fraction

import pytest

from mhs.bernoulli import bernoulli, bernoulli_invariant
from mhs.congruences import (
    BASE_CLAIMS,
    SUM_CLAIMS,
    base_congruence_suite,
    cross_derivation_check,
    homogeneous_product_sum_mod,
    mhs_mod,
    sum_congruence_suite,
)
from mhs.core import eval_mhs, mhs_prefix_values
from mhs.residues import (
    NonPIntegralError,
    PResidue,
    is_prime,
    padic_valuation,
    primes_in_range,
    reduce_mod,
)


def test_bernoulli_checkpoints():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(10) == Fraction(5, 66)
    assert all(bernoulli(m) == 0 for m in (3, 5, 7, 9, 11))


def test_bernoulli_invariant_values():
    assert bernoulli_invariant(7) == Fraction(-2, 165)
    assert bernoulli_invariant(11) == bernoulli(8) / 8 - bernoulli(18) / 36
    with pytest.raises(ValueError):
        bernoulli_invariant(6)
    with pytest.raises(ValueError):
        bernoulli_invariant(5)


def test_bernoulli_invariant_p_integral_up_to_199():
    for p in primes_in_range(7, 199):
        assert bernoulli_invariant(p).denominator % p != 0


def test_reduce_mod_examples():
    r = reduce_mod(Fraction(49, 20), 7, 4)
    assert (20 * r.value - 49) % 7**4 == 0
    assert reduce_mod(3, 5, 2) == PResidue(3, 5, 2)
    with pytest.raises(NonPIntegralError):
        reduce_mod(Fraction(1, 7), 7, 3)


def test_presidue_arithmetic():
    a = PResidue(10, 7, 2)
    b = PResidue(45, 7, 2)
    assert (a + b).value == 6
    assert (a * b).value == (450 % 49)
    assert (a - b).value == (10 - 45) % 49
    inv = b.inverse()
    assert (inv * b).value == 1
    assert (b**-2 * b * b).value == 1
    with pytest.raises(ValueError):
        a + PResidue(1, 7, 3)


def test_padic_valuation():
    assert padic_valuation(Fraction(49, 3), 7) == 2
    assert padic_valuation(Fraction(3, 49), 7) == -2
    assert padic_valuation(0, 7) is None


def test_primality_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_in_range(7, 31) == [7, 11, 13, 17, 19, 23, 29, 31]


def test_mhs_mod_examples():
    x7 = bernoulli_invariant(7)
    assert mhs_mod((1,), 7, 4) == reduce_mod(2 * 49 * x7, 7, 4)
    assert mhs_mod((1,), 7, 1).value == 0
    assert mhs_mod((), 11, 2).value == 1
    # exact witness: H_6(1) - 2 * 7^2 * X_7 has 7-adic valuation exactly 4
    assert eval_mhs(6, (1,)) - 2 * 49 * x7 == Fraction(7**4, 660)


@pytest.mark.parametrize("p", primes_in_range(7, 31))
def test_streaming_agrees_with_exact(p):
    shapes = [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (2, 1), (1, 3), (1, 1, 2), (1, 1, 1, 1)]
    for s in shapes:
        for e in (1, 2, 3, 4):
            assert mhs_mod(s, p, e) == reduce_mod(eval_mhs(p - 1, s), p, e)


def test_homogeneous_product_sum_matches_rationals():
    p, e = 11, 3
    mod = p**e
    for lam in [(1,), (2, 1), (1, 1, 1), (3, 2)]:
        rows = [mhs_prefix_values(p - 1, (1,) * part) for part in lam]
        total = Fraction(0)
        for n in range(1, p):
            term = Fraction(1)
            for row in rows:
                term *= row[n]
            total += term
        assert homogeneous_product_sum_mod(lam, p, e) == reduce_mod(total, p, e).value % mod


def test_registry_shapes():
    assert len(BASE_CLAIMS) == 10
    assert len(SUM_CLAIMS) == 18
    assert [c.exponent for c in SUM_CLAIMS[:6]] == [5, 4, 4, 3, 3, 3]
    assert all(c.exponent == 1 for c in SUM_CLAIMS if sum(c.target) == 5)


@pytest.mark.parametrize("p", primes_in_range(7, 100))
def test_suites_pass(p):
    assert all(c.passed for c in base_congruence_suite(p))
    assert all(c.passed for c in sum_congruence_suite(p))


def test_specific_sum_rows_at_7():
    results = {c.claim_id: c for c in sum_congruence_suite(7)}
    assert results["S:1,1"].passed  # sum of H_k(1)^2 mod p^4
    assert results["S:1,1,1,1,1"].passed  # sum of H_k(1)^5 mod p


def test_suites_reject_small_primes():
    with pytest.raises(ValueError):
        base_congruence_suite(5)
    with pytest.raises(ValueError):
        sum_congruence_suite(9)


def test_cross_derivation_weight_le_3():
    for lam in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]:
        assert cross_derivation_check(lam), lam
    with pytest.raises(ValueError):
        cross_derivation_check((4,))


def test_report_json_keys():
    result = base_congruence_suite(7)[0]
    data = result.to_json()
    assert set(data) == {"claim-id", "p", "modulus", "lhs-residue", "rhs-residue", "pass"}
