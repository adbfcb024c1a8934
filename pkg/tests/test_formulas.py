"""Tests for the closed-form counts: table rows, per-term traces, the
phi route, and agreement with the word oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carlitz import formulas
from carlitz.exact import InexactDivisionError, RationalPoly, exact_div, factorial, phi
from carlitz.formulas import (
    a1,
    a2_inclusion_exclusion,
    a2_terms,
    a3_inclusion_exclusion,
    a3_terms,
    a4_inclusion_exclusion,
    a4_phi,
    a4_phi_range,
    a4_terms,
    phi_base,
    upper_bound,
)
from carlitz.words import MultiplicityVector, count_carlitz_total

A1_ROW = [1, 1, 2, 6, 24, 120, 720]
A2_ROW = [1, 0, 2, 30, 864, 39480, 2631600]
A3_ROW = [1, 0, 2, 174, 41304, 19606320, 16438575600]
A4_ROW = [1, 0, 2, 1092, 2265024, 11804626080]


def test_a1_is_factorial():
    assert [a1(n) for n in range(7)] == A1_ROW


def test_a2_row():
    assert [a2_inclusion_exclusion(n) for n in range(7)] == A2_ROW


def test_a3_row():
    assert [a3_inclusion_exclusion(n) for n in range(7)] == A3_ROW


def test_a4_row():
    assert [a4_inclusion_exclusion(n) for n in range(6)] == A4_ROW


def test_rejects_negative_n():
    for fn in (a1, a2_inclusion_exclusion, a3_inclusion_exclusion,
               a4_inclusion_exclusion, a4_phi):
        with pytest.raises(ValueError):
            fn(-1)


def test_a2_term_trace_n3():
    terms = list(a2_terms(3))
    assert [t.composition for t in terms] == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert [t.value for t in terms] == [90, -90, 36, -6]
    assert sum(t.value for t in terms) == 30


def test_a3_term_trace_n3():
    terms = list(a3_terms(3))
    assert len(terms) == 10
    assert terms[0].composition == (3, 0, 0)
    assert terms[0].value == 1680
    assert sum(t.value for t in terms) == 174


def test_a4_terms_match_fast_sum():
    """The independent-term stream and the incremental sum agree."""
    for n in range(9):
        assert sum(t.value for t in a4_terms(n)) == a4_inclusion_exclusion(n)


def test_a4_term_compositions_cover_everything():
    terms = list(a4_terms(4))
    comps = [t.composition for t in terms]
    assert len(set(comps)) == len(comps) == 70
    assert all(sum(c) == 4 for c in comps)


def test_phi_base_small_k():
    assert phi_base(1) == RationalPoly([0, 1])
    assert phi_base(2) == RationalPoly([0, -1, Fraction(1, 2)])
    assert phi_base(3) == RationalPoly([0, 1, -1, Fraction(1, 6)])
    assert phi_base(4) == RationalPoly(
        [0, -1, Fraction(3, 2), Fraction(-1, 2), Fraction(1, 24)]
    )
    with pytest.raises(ValueError):
        phi_base(0)


def test_phi_route_reproduces_each_k():
    """phi(base_k**n) equals the k-th count for every implemented k."""
    for n in range(8):
        assert phi(phi_base(1) ** n) == a1(n)
        assert phi(phi_base(2) ** n) == a2_inclusion_exclusion(n)
        assert phi(phi_base(3) ** n) == a3_inclusion_exclusion(n)
        assert phi(phi_base(4) ** n) == a4_inclusion_exclusion(n)


def test_a4_phi_matches_sum():
    for n in range(26):
        assert a4_phi(n) == a4_inclusion_exclusion(n)


def test_a4_phi_range_is_incremental_and_consistent():
    values = a4_phi_range(12)
    assert values == [a4_phi(n) for n in range(13)]


def test_a4_phi_rejects_corrupted_base(monkeypatch):
    # A wrong leading coefficient makes phi(base**n) non-integral, which
    # must abort loudly rather than round.
    bad = RationalPoly([0, -1, Fraction(3, 2), Fraction(-1, 2), Fraction(1, 23)])
    monkeypatch.setattr(formulas, "_PHI_BASE_K4", bad)
    with pytest.raises(InexactDivisionError):
        a4_phi(1)
    with pytest.raises(InexactDivisionError):
        a4_phi_range(3)


def test_upper_bound():
    assert upper_bound(2, 3) == 90
    assert upper_bound(3, 3) == 1680
    for n in range(6):
        assert upper_bound(1, n) == factorial(n)
    with pytest.raises(ValueError):
        upper_bound(0, 3)


@given(st.integers(0, 30))
@settings(max_examples=40, deadline=None)
def test_counts_between_zero_and_upper_bound(n):
    assert 0 <= a2_inclusion_exclusion(n) <= upper_bound(2, n)
    if n <= 20:
        assert 0 <= a3_inclusion_exclusion(n) <= upper_bound(3, n)
    if n <= 12:
        assert 0 <= a4_inclusion_exclusion(n) <= upper_bound(4, n)


@given(st.integers(0, 40))
@settings(max_examples=50, deadline=None)
def test_factorial_divides_every_count(n):
    """n! divides a_k(n): the ordered counts are integers."""
    exact_div(a2_inclusion_exclusion(n), factorial(n))
    if n <= 25:
        exact_div(a3_inclusion_exclusion(n), factorial(n))
    if n <= 15:
        exact_div(a4_inclusion_exclusion(n), factorial(n))


def test_formulas_match_word_oracle():
    for n in range(7):
        assert a2_inclusion_exclusion(n) == count_carlitz_total(
            MultiplicityVector.uniform(2, n)
        )
    for n in range(5):
        assert a3_inclusion_exclusion(n) == count_carlitz_total(
            MultiplicityVector.uniform(3, n)
        )
    for n in range(4):
        assert a4_inclusion_exclusion(n) == count_carlitz_total(
            MultiplicityVector.uniform(4, n)
        )
