from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhs.core import (
    Composition,
    CompositionError,
    composition_parse,
    eval_mhs,
    eval_mhs_direct,
    mhs_prefix_values,
)

compositions = st.lists(st.integers(1, 4), max_size=4).map(tuple).filter(
    lambda t: sum(t) <= 6
)


def test_eval_examples():
    assert eval_mhs(0, (1,)) == 0
    assert eval_mhs(5, ()) == 1
    assert eval_mhs(2, (1,)) == Fraction(3, 2)
    assert eval_mhs(3, (1, 2)) == Fraction(5, 12)
    assert eval_mhs(6, (1,)) == Fraction(49, 20)


def test_eval_direct_examples():
    # 1/4 + 1/9 + 1/18, double loop over 1 <= k1 < k2 <= 3
    assert eval_mhs_direct(3, (1, 2)) == Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 18)
    assert eval_mhs_direct(0, (1,)) == 0
    assert eval_mhs_direct(4, ()) == 1


def test_order_matters():
    assert eval_mhs(3, (1, 2)) != eval_mhs(3, (2, 1))


@given(compositions, st.integers(0, 20))
@settings(max_examples=60, deadline=None)
def test_recursion_matches_direct(s, n):
    assert eval_mhs(n, s) == eval_mhs_direct(n, s)


@given(compositions, st.integers(0, 19))
def test_monotone_in_n(s, n):
    assert eval_mhs(n, s) >= 0
    assert eval_mhs(n, s) <= eval_mhs(n + 1, s)


@given(st.integers(1, 8), st.integers(0, 7))
def test_homogeneous_needs_enough_indices(d, n):
    value = eval_mhs(n, (1,) * d)
    if d > n:
        assert value == 0
    else:
        assert value > 0


@given(compositions, st.integers(0, 15))
def test_prefix_values_match_eval(s, n):
    row = mhs_prefix_values(n, s)
    assert len(row) == n + 1
    assert all(row[k] == eval_mhs(k, s) for k in range(n + 1))


def test_parse_examples():
    assert composition_parse("1,1,2") == Composition((1, 1, 2))
    assert composition_parse("") == Composition(())
    with pytest.raises(CompositionError):
        composition_parse("2,0")
    with pytest.raises(CompositionError):
        composition_parse("1,x")


def test_parse_exponent_shorthand():
    assert composition_parse("1^4") == Composition((1, 1, 1, 1))
    assert composition_parse("1^2,2") == Composition((1, 1, 2))
    assert composition_parse("3^2") == Composition((3, 3))


@given(compositions)
def test_parse_round_trip(s):
    comp = Composition(s)
    assert composition_parse(str(comp)) == comp


def test_composition_invariants():
    comp = Composition((2, 1, 3))
    assert comp.depth == 3
    assert comp.weight == 6
    empty = Composition()
    assert empty.depth == 0 and empty.weight == 0
    with pytest.raises(CompositionError):
        Composition((0,))
    with pytest.raises(CompositionError):
        Composition((-1, 2))
